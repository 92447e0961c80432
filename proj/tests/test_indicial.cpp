#include <doctest.h>

#include "fixtures.hpp"

using namespace dfsing;
using namespace dfsing::testing;

TEST_CASE("ordinary point test") {
    CHECK(is_ordinary_at(sys_ordinary(), {0, 0}));
    CHECK(is_ordinary_at(sys_ordinary(), {Rational(3), Rational(-7)}));
    CHECK(!is_ordinary_at(sys_axes(), {0, 0}));
    CHECK(!is_ordinary_at(sys_axes(), {0, Rational(5)}));
    CHECK(!is_ordinary_at(sys_axes(), {Rational(-3), 0}));
    CHECK(is_ordinary_at(sys_axes(), {Rational(1), Rational(1)}));
    LeftIdeal m = intersect(LeftIdeal{sys_appsin1()}, point_ideal(2, {1, 0}));
    CHECK(is_ordinary_at(m.basis, {0, 0}));
}

TEST_CASE("indicial polynomials") {
    // the y_i are reported in the same slots as the x_i
    CHECK(indicial_polynomial(op("x1*x2*d2 - x1*x2*d1 + x2 - x1")).poly == poly("x2 - 1"));
    CHECK(indicial_polynomial(op("x1^2*d1^2 - 2*x1*d1 + 2 + x1^2")).poly ==
          poly("x1^2 - 3*x1 + 2"));
    CHECK(indicial_polynomial(op("d2^2 - 2*d2 + 1")).poly == poly("x2^2 - x2"));
    CHECK(indicial_polynomial(OreOperator(2)).poly.is_zero());
}

TEST_CASE("univariate elimination") {
    GroebnerBasis g = sys_appsin1();
    SUBCASE("second variable recovers the known annihilator") {
        OreOperator q = eliminate_univariate(g, 1);
        CHECK(equal_up_to_scalar(q, op("d2^2 - 2*d2 + 1")));
        CHECK(normal_form(q, g).is_zero());
    }
    SUBCASE("first variable") {
        OreOperator q = eliminate_univariate(g, 0);
        CHECK(equal_up_to_scalar(q, op("d1^2 - d1")));
        CHECK(normal_form(q, g).is_zero());
    }
    SUBCASE("trivial system") {
        GroebnerBasis h = gb_of({"d1", "d2"});
        CHECK(eliminate_univariate(h, 0) == op("d1"));
    }
}

TEST_CASE("nonnegative integer roots") {
    // (y-1)(y-2)
    CHECK(nonneg_integer_roots(poly("x1^2 - 3*x1 + 2"), 0) == std::vector<long>{1, 2});
    // y(y-1)
    CHECK(nonneg_integer_roots(poly("x2^2 - x2"), 1) == std::vector<long>{0, 1});
    // y^2 + 1
    CHECK(nonneg_integer_roots(poly("x1^2 + 1"), 0) == std::vector<long>{});
    // rational coefficients and a pure power factor
    CHECK(nonneg_integer_roots(poly("1/2*x1^3 - 3/2*x1^2"), 0) == std::vector<long>{0, 3});
    CHECK_THROWS_AS(nonneg_integer_roots(MultiPoly(2), 0), StructuralError);
}

TEST_CASE("candidate exponents on the reference systems") {
    CHECK(candidate_exponents(sys_appsin1()).exponents == std::vector<ExpVec>{{0, 0}, {0, 1}});
    CHECK(candidate_exponents(sys_nonapparent()).exponents == std::vector<ExpVec>{{0, 0}, {1, 1}});
    CHECK(candidate_exponents(sys_trig3()).exponents ==
          std::vector<ExpVec>{{0, 0}, {1, 0}, {1, 1}});
    CHECK(candidate_exponents(sys_prodtrig()).exponents == std::vector<ExpVec>{{1, 1}, {2, 1}});
}

TEST_CASE("indicial polynomial of a monomial multiple") {
    std::mt19937_64 rng(20240350);
    for (int t = 0; t < 15; ++t) {
        OreOperator p = random_nonzero_operator(rng, 2, 2, 3);
        ExpVec a{(int)(rng() % 3), (int)(rng() % 3)};
        OreOperator xa =
            OreOperator::coeff_op(RatFunc(MultiPoly::monomial(2, a, 1)));
        CHECK(indicial_polynomial(xa * p).poly == indicial_polynomial(p).poly);
    }
}

TEST_CASE("root soundness for known solutions") {
    // initial exponents of known power series solutions are common indicial roots
    struct Case {
        GroebnerBasis g;
        std::vector<TruncatedSeries> sols;
    };
    std::vector<Case> cases;
    cases.push_back({sys_appsin1(), {exp_series({1, 1}, 6), x2_exp_x2(6)}});
    cases.push_back({sys_appsin2(),
                     {TruncatedSeries::from_polynomial(poly("x1 + x2"), 6),
                      TruncatedSeries::from_polynomial(poly("x1*x2"), 6)}});
    TruncatedSeries x1x2 = TruncatedSeries::from_polynomial(poly("x1*x2"), 8);
    cases.push_back({sys_prodtrig(), {x1x2 * sin_x1_plus_x2(8), x1x2 * cos_x1_plus_x2(8)}});
    for (const auto& c : cases) {
        for (const auto& f : c.sols) {
            CHECK(annihilates_all(c.g, f));
            ExpVec w = initial_exponent(f);
            std::vector<Rational> wq(w.begin(), w.end());
            for (const auto& e : c.g.elements)
                CHECK(indicial_polynomial(e).poly.eval(wq) == 0);
        }
    }
}
