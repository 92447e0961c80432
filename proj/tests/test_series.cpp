#include <doctest.h>

#include "fixtures.hpp"

using namespace dfsing;
using namespace dfsing::testing;

TEST_CASE("constant term") {
    TruncatedSeries f = TruncatedSeries::from_polynomial(poly("1 + x1"), 3);
    CHECK(constant_term(f) == 1);
    CHECK(constant_term(TruncatedSeries::from_polynomial(poly("x1*x2"), 3)) == 0);
    TruncatedSeries g(2, 2);
    g.set_coeff({1, 0}, 5);
    CHECK(g.coeff({1, 0}) == 5); // phi(d1 f) = c_(1,0)
}

TEST_CASE("initial exponents") {
    TruncatedSeries f = TruncatedSeries::from_polynomial(poly("x1*x2 + x1^2*x2"), 4);
    CHECK(initial_exponent(f) == ExpVec{1, 1});
    CHECK(initial_exponent(TruncatedSeries::from_polynomial(poly("1"), 2)) == ExpVec{0, 0});
    CHECK(initial_exponent(TruncatedSeries::from_polynomial(poly("x1^2*x2"), 4)) == ExpVec{2, 1});
    CHECK_THROWS_AS(initial_exponent(TruncatedSeries(2, 3)), StructuralError);
}

TEST_CASE("operator action on series") {
    SUBCASE("derivative of a polynomial") {
        TruncatedSeries f = TruncatedSeries::from_polynomial(poly("x1^2"), 3);
        TruncatedSeries df = ore_apply(op("d1"), f);
        CHECK(df.to_polynomial() == poly("2*x1"));
        CHECK(df.trunc_degree() == 2);
    }
    SUBCASE("euler operator scales monomials") {
        for (const auto& u : exponents_up_to(2, 3)) {
            TruncatedSeries f = TruncatedSeries::from_polynomial(MultiPoly::monomial(2, u, 1), 4);
            TruncatedSeries g = ore_apply(op("x1*d1"), f);
            CHECK(g.to_polynomial() == MultiPoly::monomial(2, u, Rational(u[0])));
        }
    }
    SUBCASE("annihilator of exp(x1+x2)") {
        TruncatedSeries f = exp_series({1, 1}, 5);
        CHECK(annihilates(op("x2*d2 + d1 - x2 - 1"), f));
        CHECK(annihilates(op("d1^2 - d1"), f));
    }
    SUBCASE("rational coefficients expand when the denominator is a unit at 0") {
        OreOperator p = op("d1") * (RatFunc(poly("1"), poly("1 + x1")));
        TruncatedSeries f = exp_series({1, 0}, 4);
        TruncatedSeries g = ore_apply(p, f);
        // (1/(1+x1)) exp(x1) d/dx applied: coefficient comparison at low degree
        TruncatedSeries expected =
            TruncatedSeries::from_polynomial(poly("1"), 3) * exp_series({1, 0}, 3) *
            TruncatedSeries::from_polynomial(poly("1 + x1"), 3).inverse();
        CHECK(g == expected);
        OreOperator bad = op("d1") * (RatFunc(poly("1"), poly("x1")));
        CHECK_THROWS_AS(ore_apply(bad, f), StructuralError);
    }
}

TEST_CASE("series product and inverse") {
    TruncatedSeries e1 = exp_series({1, 0}, 6);
    TruncatedSeries e2 = exp_series({0, 1}, 6);
    CHECK(e1 * e2 == exp_series({1, 1}, 6));
    TruncatedSeries inv = e1.inverse();
    CHECK(inv == exp_series({-1, 0}, 6));
    CHECK_THROWS_AS(TruncatedSeries::from_polynomial(poly("x1"), 3).inverse(), StructuralError);
}

TEST_CASE("action compatibility with multiplication") {
    std::mt19937_64 rng(20240320);
    int checked = 0;
    while (checked < 100) {
        OreOperator p = random_operator(rng, 2, 2, 2);
        OreOperator q = random_operator(rng, 2, 2, 2);
        if (p.is_zero() || q.is_zero()) continue;
        TruncatedSeries f(2, 8);
        for (const auto& u : exponents_up_to(2, 8)) f.set_coeff(u, random_rational(rng));
        TruncatedSeries lhs = ore_apply(p * q, f);
        TruncatedSeries rhs = ore_apply(p, ore_apply(q, f));
        // compare within the common guaranteed window
        int window = std::min(lhs.trunc_degree(), rhs.trunc_degree());
        CHECK(lhs.truncate(window) == rhs.truncate(window));
        ++checked;
    }
}

TEST_CASE("printing round-trip in Taylor form") {
    TruncatedSeries f = sin_x1_plus_x2(3);
    MultiPoly p = parse_polynomial(f.str(), 2);
    CHECK(p == f.to_polynomial());
}
