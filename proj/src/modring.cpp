#include "gw/modring.hpp"

namespace gw {

Modulus::Modulus(long base_, int exponent_) : base(base_), exponent(exponent_) {
    if (base < 2) throw InvalidBase();
    if (exponent < 1) throw InvalidBase("modulus exponent must be >= 1");
    mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exponent));
}

namespace {

Int reduced(const Int& x, const Int& n) {
    Int r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
    return r;
}

} // namespace

ModGaussian::ModGaussian(ModulusPtr mod, const GaussianInt& z)
    : mod_(std::move(mod)), re_(reduced(z.re, mod_->modulus)), im_(reduced(z.im, mod_->modulus)) {}

ModGaussian::ModGaussian(ModulusPtr mod, const Int& re, const Int& im)
    : mod_(std::move(mod)), re_(reduced(re, mod_->modulus)), im_(reduced(im, mod_->modulus)) {}

ModGaussian::ModGaussian(ModulusPtr mod, long re, long im)
    : ModGaussian(std::move(mod), GaussianInt(re, im)) {}

ModGaussian& ModGaussian::operator+=(const ModGaussian& rhs) {
    re_ += rhs.re_;
    if (re_ >= mod_->modulus) re_ -= mod_->modulus;
    im_ += rhs.im_;
    if (im_ >= mod_->modulus) im_ -= mod_->modulus;
    return *this;
}

ModGaussian& ModGaussian::operator-=(const ModGaussian& rhs) {
    re_ -= rhs.re_;
    if (re_ < 0) re_ += mod_->modulus;
    im_ -= rhs.im_;
    if (im_ < 0) im_ += mod_->modulus;
    return *this;
}

ModGaussian& ModGaussian::operator*=(const ModGaussian& rhs) {
    Int r = re_ * rhs.re_ - im_ * rhs.im_;
    Int i = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = reduced(r, mod_->modulus);
    im_ = reduced(i, mod_->modulus);
    return *this;
}

ModGaussian operator+(ModGaussian a, const ModGaussian& b) { return a += b; }
ModGaussian operator-(ModGaussian a, const ModGaussian& b) { return a -= b; }
ModGaussian operator*(ModGaussian a, const ModGaussian& b) { return a *= b; }

ModGaussian ModGaussian::inverse() const {
    const Int& n = mod_->modulus;
    Int norm = reduced(re_ * re_ + im_ * im_, n);
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), norm.get_mpz_t(), n.get_mpz_t()) == 0) {
        throw NotInvertible("norm " + norm.get_str() + " shares a factor with base " +
                            std::to_string(mod_->base));
    }
    return ModGaussian(mod_, re_ * inv, (n - im_) * inv);
}

ModGaussian ModGaussian::pow(unsigned long e) const {
    ModGaussian result = one(mod_);
    ModGaussian base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

ResidueValuation ModGaussian::residue_valuation() const {
    const int cap = mod_->exponent;
    Int b(mod_->base);
    Int r = re_, i = im_;
    int t = 0;
    while (t < cap) {
        if (r == 0 && i == 0) {
            t = cap;
            break;
        }
        if (mpz_divisible_p(r.get_mpz_t(), b.get_mpz_t()) &&
            mpz_divisible_p(i.get_mpz_t(), b.get_mpz_t())) {
            mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), b.get_mpz_t());
            mpz_divexact(i.get_mpz_t(), i.get_mpz_t(), b.get_mpz_t());
            ++t;
        } else {
            break;
        }
    }
    return ResidueValuation{t, t == cap};
}

GaussianInt ModGaussian::lift_signed() const {
    const Int& n = mod_->modulus;
    Int half = n / 2;
    Int r = re_, i = im_;
    if (r > half) r -= n;
    if (i > half) i -= n;
    return GaussianInt(r, i);
}

} // namespace gw
