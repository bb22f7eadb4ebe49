#pragma once

#include <memory>
#include <string>

#include "gw/gint.hpp"

namespace gw {

/// A prime-power or composite-power modulus base^exponent.
struct Modulus {
    long base;
    int exponent;
    Int modulus; // base^exponent, kept in sync by construction

    Modulus(long base_, int exponent_);
};

using ModulusPtr = std::shared_ptr<const Modulus>;

inline ModulusPtr make_modulus(long base, int exponent) {
    return std::make_shared<const Modulus>(base, exponent);
}

struct ResidueValuation {
    int value = 0;      // in [0, exponent]
    bool saturated = false; // value == exponent: true valuation only bounded below

    bool operator==(const ResidueValuation&) const = default;
};

/// An element of Z[i]/b^M with both components reduced into [0, b^M).
///
/// Reduction is a ring homomorphism from Z[i]; the modulus object is shared
/// read-only, so values are cheap to copy and safe to use concurrently.
class ModGaussian {
public:
    explicit ModGaussian(ModulusPtr mod) : mod_(std::move(mod)), re_(0), im_(0) {}
    ModGaussian(ModulusPtr mod, const GaussianInt& z);
    ModGaussian(ModulusPtr mod, const Int& re, const Int& im);
    ModGaussian(ModulusPtr mod, long re, long im);

    static ModGaussian one(ModulusPtr mod) { return ModGaussian(std::move(mod), 1, 0); }

    const Int& re() const { return re_; }
    const Int& im() const { return im_; }
    const ModulusPtr& modulus() const { return mod_; }
    bool is_zero() const { return re_ == 0 && im_ == 0; }

    ModGaussian& operator+=(const ModGaussian& rhs);
    ModGaussian& operator-=(const ModGaussian& rhs);
    ModGaussian& operator*=(const ModGaussian& rhs);

    /// x^-1 via conj(x) * norm(x)^-1; requires gcd(norm, base) = 1.
    /// Throws NotInvertible otherwise.
    ModGaussian inverse() const;

    /// Square-and-multiply; x^0 = 1.
    ModGaussian pow(unsigned long e) const;

    /// Largest t <= exponent with base^t dividing both components, plus a
    /// saturation flag (t = exponent certifies only "valuation >= t").
    ResidueValuation residue_valuation() const;

    /// Minimal non-negative lift to Z[i].
    GaussianInt lift() const { return GaussianInt(re_, im_); }

    /// Lift with components in the symmetric range (-N/2, N/2].
    GaussianInt lift_signed() const;

    std::string str() const { return lift().str(); }

    bool operator==(const ModGaussian& rhs) const { return re_ == rhs.re_ && im_ == rhs.im_; }

private:
    ModulusPtr mod_;
    Int re_, im_;
};

ModGaussian operator+(ModGaussian a, const ModGaussian& b);
ModGaussian operator-(ModGaussian a, const ModGaussian& b);
ModGaussian operator*(ModGaussian a, const ModGaussian& b);

} // namespace gw
