#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <utility>

#include "gw/errors.hpp"

namespace gw {

using Int = mpz_class;
using Rational = mpq_class;

/// base^e for arbitrary-precision base.
Int int_pow(const Int& base, unsigned long e);

/// Largest t with b^t | x, for x != 0 and b >= 2 (b may be composite).
long int_valuation(const Int& x, const Int& b);

/// "num/den" with "/1" omitted.
std::string rational_str(const Rational& q);

/// A Gaussian integer a+bi with arbitrary-precision components.
///
/// Arithmetic follows the ring Z[i] with i^2 = -1.  Values are immutable in
/// spirit: every operation returns a fresh value, so instances can be shared
/// freely across threads.
struct GaussianInt {
    Int re;
    Int im;

    GaussianInt() : re(0), im(0) {}
    GaussianInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
    GaussianInt(long r, long i) : re(r), im(i) {}

    static GaussianInt unit_i() { return GaussianInt(0, 1); }

    bool is_zero() const { return re == 0 && im == 0; }

    GaussianInt conj() const { return GaussianInt(re, -im); }

    /// re^2 + im^2; multiplicative over products.
    Int norm() const { return re * re + im * im; }

    GaussianInt pow(unsigned long k) const;

    /// "a+bi" / "a-bi", no spaces; pure-real and pure-imaginary values
    /// collapse to "a" / "bi"; zero is "0".
    std::string str() const;

    bool operator==(const GaussianInt&) const = default;
};

GaussianInt operator+(const GaussianInt& a, const GaussianInt& b);
GaussianInt operator-(const GaussianInt& a, const GaussianInt& b);
GaussianInt operator-(const GaussianInt& a);
GaussianInt operator*(const GaussianInt& a, const GaussianInt& b);

/// Valuation result: a (signed) exponent, or infinite exactly when the
/// valuated element is zero.
struct Valuation {
    long value = 0;
    bool infinite = false;

    static Valuation infinity() { return Valuation{0, true}; }
    static Valuation of(long v) { return Valuation{v, false}; }

    bool at_least(long t) const { return infinite || value >= t; }
    bool operator==(const Valuation&) const = default;
};

/// An element of Q(i) in the canonical form num/den with num in Z[i],
/// den a positive rational integer, and gcd(gcd(|num.re|, |num.im|), den) = 1.
/// Every element of Q(i) has exactly one such representative.
struct GaussianRational {
    GaussianInt num;
    Int den;

    GaussianRational() : num(), den(1) {}
    /// Canonicalizes; throws DivisionByZero when d = 0.
    GaussianRational(GaussianInt n, Int d);

    static GaussianRational from_int(GaussianInt z) {
        return GaussianRational(std::move(z), Int(1));
    }
    /// num/den for a Gaussian denominator: rationalized via the conjugate.
    static GaussianRational quotient(const GaussianInt& num, const GaussianInt& den);

    bool is_zero() const { return num.is_zero(); }
    GaussianRational pow(unsigned long k) const;
    std::string str() const;

    bool operator==(const GaussianRational&) const = default;
};

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);

/// conj(z)/norm(z) in canonical form; reciprocal(z) * z = 1 in Q(i).
GaussianRational reciprocal(const GaussianInt& z);

/// Largest t with b^t dividing both components (divisibility by b^t in Z[i]
/// for a rational integer b, prime or composite); infinite for z = 0.
Valuation valuation_int(const GaussianInt& z, const Int& b);

/// valuation_int(q.num, b) - v_b(q.den).  "q = 0 mod b^t" means the result
/// is at least t.
Valuation valuation_rat(const GaussianRational& q, const Int& b);

/// Same convention for plain rationals (used by the harmonic-sum checks).
Valuation valuation_rat(const Rational& q, const Int& b);

} // namespace gw
