#include <doctest.h>

#include <random>

#include "gw/sympoly.hpp"
#include "k1_expansion_fixture.hpp"

using namespace gw;

namespace {

GaussianRational tuple_direct_sum(long m0, long n0, long p0, int k) {
    const long pairs[8][2] = {
        {n0, m0},      {p0 - n0, m0},      {n0, p0 - m0},      {p0 - n0, p0 - m0},
        {m0, n0},      {p0 - m0, n0},      {m0, p0 - n0},      {p0 - m0, p0 - n0},
    };
    GaussianRational acc;
    for (const auto& pr : pairs) {
        acc = acc + reciprocal(GaussianInt(pr[0], pr[1])).pow(static_cast<unsigned long>(k));
    }
    return acc;
}

} // namespace

TEST_CASE("basic polynomial products") {
    MPoly m = MPoly::var_m(), n = MPoly::var_n();
    CHECK((m + n) * (m - n) == m * m - n * n);
    MPoly x = (m + n) * (m + n);
    CHECK(x * MPoly::constant(GaussianInt(1, 0)) == x);
    // (m+in)(m-in) = m^2 + n^2
    MPoly i_n = MPoly::constant(GaussianInt(0, 1)) * n;
    CHECK((m + i_n) * (m - i_n) == m * m + n * n);
}

TEST_CASE("k=1 denominator p-degree-0 slice is the norm power") {
    TupleExpansion t = expand_tuple(1);
    MPoly slice = truncate_pdeg(t.denominator, TruncateMode::Equal, 0);
    MPoly expected;
    expected.add_term(Monomial{8, 0, 0}, GaussianInt(1, 0));
    expected.add_term(Monomial{6, 2, 0}, GaussianInt(4, 0));
    expected.add_term(Monomial{4, 4, 0}, GaussianInt(6, 0));
    expected.add_term(Monomial{2, 6, 0}, GaussianInt(4, 0));
    expected.add_term(Monomial{0, 8, 0}, GaussianInt(1, 0));
    CHECK(slice == expected);
}

TEST_CASE("k=1 expansion matches the reference terms exactly") {
    TupleExpansion t = expand_tuple(1);
    CHECK(t.denominator == testfix::k1_denominator());
    CHECK(t.numerator == testfix::k1_numerator());
    CHECK(t.numerator.coeff(Monomial{4, 0, 3}) == GaussianInt(2, -2));
    CHECK(t.numerator.coeff(Monomial{2, 2, 3}) == GaussianInt(-12, 12));
}

TEST_CASE("tuple expansion evaluates to the direct reciprocal sum") {
    TupleExpansion t = expand_tuple(1);
    GaussianInt num = t.numerator.eval(2, 1, 7);
    GaussianInt den = t.denominator.eval(2, 1, 7);
    GaussianRational via_poly = GaussianRational::quotient(num, den);
    GaussianRational direct = tuple_direct_sum(2, 1, 7, 1);
    CHECK(via_poly == direct);
    CHECK(direct == GaussianRational(GaussianInt(4802, -4802), Int(3965)));
}

TEST_CASE("rational identity holds on random evaluation points") {
    std::mt19937_64 rng(0x5eed0020);
    for (int k = 1; k <= 6; ++k) {
        TupleExpansion t = expand_tuple(k);
        for (int trial = 0; trial < 20; ++trial) {
            long m0 = 1 + static_cast<long>(rng() % 40);
            long n0 = 1 + static_cast<long>(rng() % 40);
            long p0 = 1 + static_cast<long>(rng() % 40);
            // all 8 evaluated forms must be nonzero
            if (m0 == n0 || p0 == m0 || p0 == n0 || p0 == m0 + n0) continue;
            GaussianInt den = t.denominator.eval(m0, n0, p0);
            REQUIRE(!den.is_zero());
            GaussianRational via_poly =
                GaussianRational::quotient(t.numerator.eval(m0, n0, p0), den);
            CHECK(via_poly == tuple_direct_sum(m0, n0, p0, k));
        }
    }
}

TEST_CASE("truncation keeps the selected p-degrees") {
    MPoly f;
    f.add_term(Monomial{2, 0, 0}, GaussianInt(1, 0));
    f.add_term(Monomial{1, 0, 1}, GaussianInt(3, 0));
    f.add_term(Monomial{0, 0, 2}, GaussianInt(1, 0));
    MPoly only_m2;
    only_m2.add_term(Monomial{2, 0, 0}, GaussianInt(1, 0));
    CHECK(truncate_pdeg(f, TruncateMode::Equal, 0) == only_m2);
    CHECK(truncate_pdeg(f, TruncateMode::AtMost, 100) == f);
    CHECK(truncate_pdeg(f, TruncateMode::AtMost, 1).term_count() == 2);
}

TEST_CASE("minimum p-degree of the tuple numerators") {
    CHECK(min_pdeg(expand_tuple(1).numerator) == 3);
    CHECK(min_pdeg(expand_tuple(3).numerator) == 1);
    CHECK(min_pdeg(expand_tuple(4).numerator) == 0);
    CHECK_THROWS_AS(min_pdeg(MPoly()), EmptyPolynomial);
}

TEST_CASE("numerator lowest slice for k=1 factors as claimed") {
    TupleExpansion t = expand_tuple(1);
    MPoly slice = truncate_pdeg(t.numerator, TruncateMode::Equal, 3);
    // (2-2i) p^3 (m^4 - 6m^2n^2 + n^4)
    MPoly quartic;
    quartic.add_term(Monomial{4, 0, 0}, GaussianInt(1, 0));
    quartic.add_term(Monomial{2, 2, 0}, GaussianInt(-6, 0));
    quartic.add_term(Monomial{0, 4, 0}, GaussianInt(1, 0));
    MPoly p3;
    p3.add_term(Monomial{0, 0, 3}, GaussianInt(1, 0));
    CHECK(slice == MPoly::constant(GaussianInt(2, -2)) * p3 * quartic);
}

TEST_CASE("claimed closed forms verify for k = 1..5") {
    for (int k = 1; k <= 5; ++k) {
        CAPTURE(k);
        CHECK(verify_factored_form(k));
    }
}

TEST_CASE("quadratic factors multiply to the quartic") {
    MPoly a, b, quartic;
    a.add_term(Monomial{2, 0, 0}, GaussianInt(1, 0));
    a.add_term(Monomial{1, 1, 0}, GaussianInt(-2, 0));
    a.add_term(Monomial{0, 2, 0}, GaussianInt(-1, 0));
    b.add_term(Monomial{2, 0, 0}, GaussianInt(1, 0));
    b.add_term(Monomial{1, 1, 0}, GaussianInt(2, 0));
    b.add_term(Monomial{0, 2, 0}, GaussianInt(-1, 0));
    quartic.add_term(Monomial{4, 0, 0}, GaussianInt(1, 0));
    quartic.add_term(Monomial{2, 2, 0}, GaussianInt(-6, 0));
    quartic.add_term(Monomial{0, 4, 0}, GaussianInt(1, 0));
    CHECK(a * b == quartic);
}

TEST_CASE("expansion is symmetric under swapping m and n") {
    for (int k = 1; k <= 3; ++k) {
        TupleExpansion t = expand_tuple(k);
        auto swapped = [](const MPoly& f) {
            MPoly out;
            for (const auto& [mono, c] : f.terms()) {
                out.add_term(Monomial{mono.deg_n, mono.deg_m, mono.deg_p}, c);
            }
            return out;
        };
        CHECK(swapped(t.numerator) == t.numerator);
        CHECK(swapped(t.denominator) == t.denominator);
    }
}

TEST_CASE("expansion limit") {
    CHECK_THROWS_AS(expand_tuple(13), LimitExceeded);
    CHECK_THROWS_AS(expand_tuple(3, 2), LimitExceeded);
}

TEST_CASE("canonical text form") {
    MPoly f;
    f.add_term(Monomial{4, 0, 3}, GaussianInt(2, -2));
    f.add_term(Monomial{2, 2, 0}, GaussianInt(-6, 0));
    f.add_term(Monomial{1, 0, 0}, GaussianInt(1, 0));
    f.add_term(Monomial{0, 0, 0}, GaussianInt(0, 12));
    CHECK(f.str() == "(2-2i)m^4p^3-6m^2n^2+m+(12i)");
    CHECK(MPoly().str() == "0");
}
