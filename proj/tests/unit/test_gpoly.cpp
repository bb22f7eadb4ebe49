#include <doctest.h>

#include <random>

#include "gw/gpoly.hpp"
#include "gw/sums.hpp"

using namespace gw;

namespace {

// signed coefficients at multiples of the support step, ascending exponent
bool support_matches(const GPolyPattern& rep, long step, const std::vector<long>& coeffs) {
    if (rep.support.size() != coeffs.size()) return false;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (rep.support[j].first != static_cast<long>(j) * step) return false;
        if (!(rep.support[j].second == GaussianInt(coeffs[j], 0))) return false;
    }
    return true;
}

} // namespace

TEST_CASE("smallest root polynomial: four factors at p=3") {
    UPolyMod g = gpoly_mod_p(3);
    CHECK(g.degree() == 4);
    CHECK(g.str_signed() == "x^4+1");
}

TEST_CASE("p=7 equals the inert-class closed form") {
    UPolyMod g = gpoly_mod_p(7);
    CHECK(g.degree() == 36);
    CHECK(g.str_signed() == "x^36+x^24+x^12+1");
    GPolyPattern rep = gpoly_pattern_check(7);
    CHECK(rep.holds);
    CHECK(rep.inert_class);
}

TEST_CASE("reference polynomials for p = 11, 13, 17, 19") {
    GPolyPattern g11 = gpoly_pattern_check(11);
    CHECK(g11.holds);
    CHECK(support_matches(g11, 20, {1, 1, 1, 1, 1, 1}));

    GPolyPattern g13 = gpoly_pattern_check(13);
    CHECK(g13.holds);
    CHECK_FALSE(g13.inert_class);
    CHECK(g13.degree == 120);
    CHECK(support_matches(g13, 12, {1, 3, 6, -3, 2, -5, 2, -3, 6, 3, 1}));

    GPolyPattern g17 = gpoly_pattern_check(17);
    CHECK(g17.holds);
    CHECK(g17.degree == 224);
    CHECK(support_matches(g17, 16, {1, 3, 6, -7, -2, 4, -6, 2, -6, 4, -2, -7, 6, 3, 1}));

    GPolyPattern g19 = gpoly_pattern_check(19);
    CHECK(g19.holds);
    CHECK(support_matches(g19, 36, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}));

    CHECK(gpoly_mod_p(13).str_signed() ==
          "x^120+3x^108+6x^96-3x^84+2x^72-5x^60+2x^48-3x^36+6x^24+3x^12+1");
}

TEST_CASE("degree equals the included-pair count") {
    for (long p : {3L, 5L, 7L, 11L, 13L, 17L}) {
        CHECK(gpoly_mod_p(p).degree() == sum_term_count(p));
    }
}

TEST_CASE("every included pair is a root; x=0 gives the constant term") {
    UPolyMod g = gpoly_mod_p(7);
    ModulusPtr m = g.modulus;
    for (long n = 1; n < 7; ++n) {
        for (long mm = 1; mm < 7; ++mm) {
            if ((n * n + mm * mm) % 7 == 0) continue;
            CHECK(g.eval(ModGaussian(m, n, mm)).is_zero());
        }
    }
    CHECK(g.eval(ModGaussian(m)) == ModGaussian::one(m));
}

TEST_CASE("g_p limit") {
    CHECK_THROWS_AS(gpoly_mod_p(101), LimitExceeded);
    CHECK_NOTHROW(gpoly_mod_p(101, 200));
}

TEST_CASE("low coefficients: constant term is the full product") {
    std::vector<ModGaussian> coeffs = gpoly_low_coeffs(7, 5, 5);
    // product of all 36 included n+mi, an integer for p=7; degree 36 is even
    // so the (-1)^degree sign drops out
    Int product("-7066368691421644800000000");
    ModulusPtr m = coeffs[0].modulus();
    CHECK(coeffs[0] == ModGaussian(m, GaussianInt(product, Int(0))));

    GaussianInt direct(1, 0);
    for (long n = 1; n < 7; ++n) {
        for (long mm = 1; mm < 7; ++mm) {
            if ((n * n + mm * mm) % 7 == 0) continue;
            direct = direct * GaussianInt(n, mm);
        }
    }
    CHECK(direct == GaussianInt(product, Int(0)));
}

TEST_CASE("low coefficient valuations") {
    for (long p : {7L, 11L, 13L}) {
        CAPTURE(p);
        std::vector<ModGaussian> coeffs = gpoly_low_coeffs(p, 5, 5);
        for (int k = 1; k <= 4; ++k) {
            CHECK(coeffs[static_cast<std::size_t>(k)].residue_valuation().value >= 5 - k);
        }
        CHECK(gpoly_low_check(p));
    }
}

TEST_CASE("low coefficients agree with the dense polynomial") {
    UPolyMod g = gpoly_mod_p(7);
    std::vector<ModGaussian> low = gpoly_low_coeffs(7, 5, 1);
    for (int j = 0; j < 5; ++j) {
        CHECK(low[static_cast<std::size_t>(j)].lift() ==
              g.coeffs[static_cast<std::size_t>(j)].lift());
    }
}

TEST_CASE("gaussian binomial fixtures") {
    CHECK(gauss_binom({1, 1, 1, 1}) == GaussianRational::from_int(GaussianInt(1, 0)));
    CHECK(gauss_binom({2, 2, 1, 1}) == GaussianRational::from_int(GaussianInt(2, 0)));
    CHECK(gauss_binom({3, 3, 2, 2}) == GaussianRational(GaussianInt(39, 0), Int(5)));
    CHECK(gauss_binom({3, 3, 2, 2}).str() == "39/5");
    CHECK_THROWS_AS(gauss_binom({1, 1, 2, 1}), MalformedSpec);
    CHECK_THROWS_AS(gauss_binom({3, 3, 0, 1}), MalformedSpec);
}

TEST_CASE("binomial with C=D=1 is (A+Bi)/(1+i)") {
    std::mt19937_64 rng(0x5eed0030);
    for (int i = 0; i < 50; ++i) {
        long A = 1 + static_cast<long>(rng() % 50);
        long B = 1 + static_cast<long>(rng() % 50);
        CHECK(gauss_binom({A, B, 1, 1}) ==
              GaussianRational::quotient(GaussianInt(A, B), GaussianInt(1, 1)));
    }
}

TEST_CASE("shifted-product congruence mod p^5") {
    CHECK(shifted_product_check(7, 2, 2));
    CHECK(shifted_product_check(7, 3, 2));
    CHECK(shifted_product_check(11, 2, 3));
    CHECK(shifted_product_check(13, 3, 3));
    // below the stated threshold the congruence still happens to hold
    CHECK(shifted_product_check(5, 2, 2));
}

TEST_CASE("binomial congruence mod p^5") {
    CHECK(binomial_congruence_check(7, 1, 1)); // the two grids coincide: difference is zero
    CHECK(binomial_congruence_check(11, 2, 1));
    CHECK(binomial_congruence_check(7, 3, 2));
    CHECK_THROWS_AS(binomial_congruence_check(5, 1, 1), InvalidBase); // needs p = 3 mod 4
}

TEST_CASE("lucas-type comparison reports") {
    LucasReport tiny = lucas_check(3, 1, 1, 1, 1);
    CHECK(tiny.lhs_integral);
    CHECK(tiny.rhs_integral);
    CHECK(tiny.difference_zero);
    CHECK(tiny.holds_mod_p3);
    CHECK(tiny.lhs == GaussianRational::from_int(GaussianInt(1, 0)));

    LucasReport rep = lucas_check(7, 2, 2, 1, 1);
    CHECK(rep.lhs_integral);
    CHECK(rep.rhs_integral);
    CHECK_FALSE(rep.difference_zero);
    CHECK(rep.difference_valuation == 3);
    CHECK(rep.holds_mod_p3);
    CHECK(rep.rhs == GaussianRational::from_int(GaussianInt(2, 0)));

    // C = A, D = B collapses both sides to 1
    LucasReport same = lucas_check(7, 2, 3, 2, 3);
    CHECK(same.difference_zero);
}
