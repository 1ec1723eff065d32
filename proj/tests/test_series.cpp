#include "ratseries/series.hpp"

#include "ratseries/errors.hpp"

#include <doctest.h>

#include <random>

using namespace ratseries;

namespace {

// independent oracle: series of P/Q by long division over exact rationals
std::vector<BigRat> long_division_series(const IntPoly& P, const IntPoly& Q, std::size_t N) {
    REQUIRE(Q.coeff(0) != 0);
    std::vector<BigRat> a(N + 1, BigRat(0));
    for (std::size_t m = 0; m <= N; ++m) {
        BigRat acc(P.coeff(m));
        for (std::size_t i = 1; i <= m && static_cast<int>(i) <= Q.degree(); ++i)
            acc -= BigRat(Q.coeff(i)) * a[m - i];
        a[m] = acc / BigRat(Q.coeff(0));
    }
    return a;
}

IntPoly random_poly_unit_const(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<BigInt> c(deg(rng) + 1);
    for (auto& x : c) x = coeff(rng);
    c[0] = sign(rng) ? 1 : -1;
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("expand_rational worked examples") {
    IntSeries1D geo = expand_rational(RationalFn(IntPoly({1}), IntPoly({1, -1})), 4);
    CHECK(geo.coeffs() == std::vector<BigInt>{1, 1, 1, 1, 1});

    IntSeries1D d2 = expand_rational(
        RationalFn(IntPoly({1}), IntPoly({1, -1}) * IntPoly({1, -1})), 4);
    CHECK(d2.coeffs() == std::vector<BigInt>{1, 2, 3, 4, 5});

    // Fibonacci numbers against the long-division oracle
    IntPoly P({1}), Q({1, -1, -1});
    IntSeries1D fib = expand_rational(RationalFn(P, Q), 6);
    auto oracle = long_division_series(P, Q, 6);
    for (std::size_t i = 0; i <= 6; ++i) CHECK(BigRat(fib.coeff(i)) == oracle[i]);
    CHECK(fib.coeffs() == std::vector<BigInt>{1, 1, 2, 3, 5, 8, 13});
}

TEST_CASE("expand_rational error paths") {
    CHECK_THROWS_AS(expand_rational(RationalFn(IntPoly({1}), IntPoly({2, 1})), 3),
                    NonUnitConstantTerm);
    CHECK_THROWS_AS(RationalFn(IntPoly({1}), IntPoly{}), ZeroDenominator);
    CHECK_THROWS_AS(RationalFn(IntPoly({1}), IntPoly({0, 1})), ZeroDenominator);
}

TEST_CASE("rational function canonicalization") {
    // common factor and sign are normalized away
    RationalFn a(IntPoly({2, 2}), IntPoly({-2, 2}));   // 2(1+z) / -2(1-z)
    RationalFn b(IntPoly({-1, -1}), IntPoly({1, -1}));
    CHECK(a == b);
    CHECK(a.denominator().coeff(0) > 0);

    RationalFn c(IntPoly({1, 2, 1}), IntPoly({1, 1}));  // (1+z)^2 / (1+z)
    CHECK(c.numerator() == IntPoly({1, 1}));
    CHECK(c.denominator() == IntPoly({1}));
}

TEST_CASE("expansion residual is exactly zero mod z^{N+1}") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        IntPoly P = random_poly_unit_const(rng, 4);
        IntPoly Q = random_poly_unit_const(rng, 4);
        RationalFn r(P, Q);
        const std::size_t N = 12;
        IntSeries1D s = expand_rational(r, N);
        // Q * S - P == 0 through z^N
        for (std::size_t m = 0; m <= N; ++m) {
            BigInt acc = -r.numerator().coeff(m);
            for (std::size_t i = 0; i <= m && static_cast<int>(i) <= r.denominator().degree();
                 ++i)
                acc += r.denominator().coeff(i) * s.coeff(m - i);
            CHECK(acc == 0);
        }
    }
}

TEST_CASE("lacunary series fixtures") {
    CHECK(lacunary_series(lacunary_rule_squares(), 5).coeffs() ==
          std::vector<BigInt>{1, 1, 0, 0, 1, 0});
    // 0! = 1! = 1, 2! = 2, 3! = 6: witness counts by direct enumeration
    CHECK(lacunary_series(lacunary_rule_factorials(), 6).coeffs() ==
          std::vector<BigInt>{0, 2, 1, 0, 0, 0, 1});
    CHECK(lacunary_series(lacunary_rule_none(), 3).coeffs() ==
          std::vector<BigInt>{0, 0, 0, 0});
    CHECK(lacunary_series(lacunary_rule_powers(2), 8).coeffs() ==
          std::vector<BigInt>{0, 1, 1, 0, 1, 0, 0, 0, 1});
}

TEST_CASE("series truncation is a hard boundary") {
    IntSeries1D s({1, 2, 3});
    CHECK(s.truncation_order() == 2);
    CHECK(s.coeff(2) == 3);
    CHECK_THROWS_AS(s.coeff(3), TruncationTooShort);
}

TEST_CASE("biseries_from_product fixtures") {
    IntSeries1D ones = expand_rational(RationalFn(IntPoly({1}), IntPoly({1, -1})), 8);
    BiSeries all1 = biseries_from_product(ones, ones, 3);
    for (int j = 0; j <= 3; ++j)
        for (int k = 0; j + k <= 3; ++k) CHECK(all1.coeff(j, k) == 1);

    IntSeries1D fact = lacunary_series(lacunary_rule_factorials(), 8);
    BiSeries remark1 = biseries_from_product(ones, fact, 3);
    for (int j = 0; j <= 2; ++j) {
        CHECK(remark1.coeff(j, 0) == 0);
        if (j <= 2) CHECK(remark1.coeff(j, 1) == 2);
        if (j <= 1) CHECK(remark1.coeff(j, 2) == 1);
        if (j == 0) CHECK(remark1.coeff(0, 3) == 0);
    }

    BiSeries single = biseries_from_product(IntSeries1D({1}), IntSeries1D({1}), 0);
    CHECK(single.coeff(0, 0) == 1);
    CHECK(single.truncation_order() == 0);

    CHECK_THROWS_AS(biseries_from_product(IntSeries1D({1, 1}), IntSeries1D({1, 1}), 5),
                    TruncationTooShort);
}

TEST_CASE("product coefficients satisfy the rank-1 identity") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::vector<BigInt> gc(7), hc(7);
    for (auto& x : gc) x = coeff(rng);
    for (auto& x : hc) x = coeff(rng);
    BiSeries f = biseries_from_product(IntSeries1D(gc), IntSeries1D(hc), 6);
    for (int j = 0; j <= 3; ++j)
        for (int k = 0; k <= 3; ++k)
            for (int j2 = 0; j2 <= 2; ++j2)
                for (int k2 = 0; k2 <= 2; ++k2)
                    CHECK(f.coeff(j, k) * f.coeff(j2, k2) ==
                          f.coeff(j, k2) * f.coeff(j2, k));
}

TEST_CASE("biseries table and truncation") {
    BiSeries t = BiSeries::from_rows({{BigInt(1), BigInt(2)}, {BigInt(3), BigInt(4)}},
                                     "T^2 on boundary");
    CHECK(t.truncation_order() == 1);
    CHECK(t.coeff(0, 1) == 2);
    CHECK(t.coeff(1, 0) == 3);
    CHECK(t.convergence_note() == "T^2 on boundary");
    CHECK_THROWS_AS(t.coeff(1, 1), TruncationTooShort);
    CHECK_THROWS_AS(t.coeff(-1, 0), std::invalid_argument);
}
