#include "gw/gint.hpp"

namespace gw {

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

long int_valuation(const Int& x, const Int& b) {
    if (b < 2) throw InvalidBase();
    if (x == 0) throw DivisionByZero("valuation of zero is infinite");
    Int tmp;
    return static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.get_mpz_t(), b.get_mpz_t()));
}

std::string rational_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
    return GaussianInt(a.re + b.re, a.im + b.im);
}

GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
    return GaussianInt(a.re - b.re, a.im - b.im);
}

GaussianInt operator-(const GaussianInt& a) {
    return GaussianInt(-a.re, -a.im);
}

GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return GaussianInt(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

GaussianInt GaussianInt::pow(unsigned long k) const {
    GaussianInt result(1, 0);
    GaussianInt base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

std::string GaussianInt::str() const {
    if (is_zero()) return "0";
    std::string s;
    if (re != 0) s += re.get_str();
    if (im != 0) {
        if (im > 0 && re != 0) s += "+";
        if (im == -1) {
            s += "-";
        } else if (im != 1) {
            s += im.get_str();
        }
        s += "i";
    }
    return s;
}

namespace {

// gcd of the component contents and the denominator; always >= 1 here.
Int content_gcd(const GaussianInt& num, const Int& den) {
    Int g;
    mpz_gcd(g.get_mpz_t(), num.re.get_mpz_t(), num.im.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den.get_mpz_t());
    return g;
}

} // namespace

GaussianRational::GaussianRational(GaussianInt n, Int d) : num(std::move(n)), den(std::move(d)) {
    if (den == 0) throw DivisionByZero("GaussianRational with zero denominator");
    if (den < 0) {
        den = -den;
        num = -num;
    }
    Int g = content_gcd(num, den);
    if (g > 1) {
        mpz_divexact(num.re.get_mpz_t(), num.re.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(num.im.get_mpz_t(), num.im.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
    }
}

GaussianRational GaussianRational::quotient(const GaussianInt& num, const GaussianInt& den) {
    if (den.is_zero()) throw DivisionByZero("quotient by zero Gaussian integer");
    return GaussianRational(num * den.conj(), den.norm());
}

GaussianRational GaussianRational::pow(unsigned long k) const {
    return GaussianRational(num.pow(k), int_pow(den, k));
}

std::string GaussianRational::str() const {
    if (den == 1) return num.str();
    if (num.im == 0) return num.re.get_str() + "/" + den.get_str();
    return "(" + num.str() + ")/" + den.get_str();
}

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.den.get_mpz_t(), b.den.get_mpz_t());
    Int bs = b.den / g;
    Int as = a.den / g;
    GaussianInt num(a.num.re * bs + b.num.re * as, a.num.im * bs + b.num.im * as);
    return GaussianRational(std::move(num), a.den * bs);
}

GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return a + GaussianRational(-b.num, b.den);
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(a.num * b.num, a.den * b.den);
}

GaussianRational reciprocal(const GaussianInt& z) {
    if (z.is_zero()) throw DivisionByZero("reciprocal of zero");
    return GaussianRational(z.conj(), z.norm());
}

Valuation valuation_int(const GaussianInt& z, const Int& b) {
    if (b < 2) throw InvalidBase();
    if (z.is_zero()) return Valuation::infinity();
    long v;
    if (z.re == 0) {
        v = int_valuation(z.im, b);
    } else if (z.im == 0) {
        v = int_valuation(z.re, b);
    } else {
        v = std::min(int_valuation(z.re, b), int_valuation(z.im, b));
    }
    return Valuation::of(v);
}

Valuation valuation_rat(const GaussianRational& q, const Int& b) {
    if (b < 2) throw InvalidBase();
    if (q.is_zero()) return Valuation::infinity();
    Valuation vn = valuation_int(q.num, b);
    long vd = (q.den == 1) ? 0 : (mpz_divisible_p(q.den.get_mpz_t(), b.get_mpz_t())
                                      ? int_valuation(q.den, b)
                                      : 0);
    return Valuation::of(vn.value - vd);
}

Valuation valuation_rat(const Rational& q, const Int& b) {
    if (b < 2) throw InvalidBase();
    if (q == 0) return Valuation::infinity();
    long vn = mpz_divisible_p(q.get_num().get_mpz_t(), b.get_mpz_t())
                  ? int_valuation(q.get_num(), b)
                  : 0;
    long vd = mpz_divisible_p(q.get_den().get_mpz_t(), b.get_mpz_t())
                  ? int_valuation(q.get_den(), b)
                  : 0;
    return Valuation::of(vn - vd);
}

} // namespace gw
