#include <doctest.h>

#include "fixtures.hpp"

using namespace dfsing;
using namespace dfsing::testing;

TEST_CASE("commutation rules") {
    CHECK(op("d1") * op("x1") == op("x1*d1 + 1"));
    CHECK(op("d1") * op("d2") - op("d2") * op("d1") == OreOperator(2));
    CHECK(op("d1") * op("x1^2") == op("x1^2*d1 + 2*x1"));
    CHECK_THROWS_AS(op("d1", 1) * op("d1", 2), StructuralError);
}

TEST_CASE("operator basics") {
    OreOperator g = op("x2*d2 + d1 - x2 - 1");
    CHECK(g.order() == 1);
    MonomialOrder ord;
    CHECK(g.head_exponent(ord) == ExpVec{0, 1});
    CHECK(g.head_coeff(ord) == RatFunc(poly("x2")));
    CHECK(OreOperator(2).is_zero());
    CHECK_THROWS_AS(OreOperator(2).head_exponent(ord), StructuralError);
}

TEST_CASE("multiplication associativity on random operators") {
    std::mt19937_64 rng(20240310);
    int checked = 0;
    while (checked < 100) {
        int n = 2 + (int)(rng() % 2);
        OreOperator p = random_operator(rng, n, 2, 2);
        OreOperator q = random_operator(rng, n, 2, 2);
        OreOperator r = random_operator(rng, n, 2, 2);
        CHECK((p * q) * r == p * (q * r));
        ++checked;
    }
}

TEST_CASE("euler rewrite examples") {
    SUBCASE("single euler term, n = 1") {
        EulerForm ef = euler_rewrite(op("x1*d1", 1));
        CHECK(ef.shift == ExpVec{1});
        REQUIRE(ef.parts.size() == 1);
        CHECK(ef.parts.begin()->first == ExpVec{1});
        CHECK(ef.parts.begin()->second == poly("x1", 1)); // y1 in the y variables
    }
    SUBCASE("G2 of the indicial example") {
        EulerForm ef = euler_rewrite(op("x1^2*d1^2 - 2*x1*d1 + 2 + x1^2"));
        REQUIRE(ef.parts.count(ExpVec{2, 2}) == 1);
        // (y1 - 1)(y1 - 2)
        CHECK(ef.parts.at(ExpVec{2, 2}) == poly("x1^2 - 3*x1 + 2"));
        REQUIRE(ef.parts.count(ExpVec{4, 2}) == 1);
        CHECK(ef.parts.at(ExpVec{4, 2}) == poly("1"));
        CHECK(ef.parts.size() == 2);
    }
    SUBCASE("G1 of the indicial example") {
        EulerForm ef = euler_rewrite(op("x1*x2*d2 - x1*x2*d1 + x2 - x1"));
        CHECK(ef.parts.begin()->first == ExpVec{2, 1});
        CHECK(ef.parts.begin()->second == poly("x2 - 1")); // y2 - 1
    }
    CHECK_THROWS_AS(euler_rewrite(OreOperator(2)), StructuralError);
}

TEST_CASE("euler rewrite soundness on monomials") {
    // x^m P applied to x^w equals sum_v p_v(w) x^(v+w)
    std::mt19937_64 rng(20240311);
    for (int t = 0; t < 10; ++t) {
        OreOperator p = random_nonzero_operator(rng, 2, 2, 3);
        if (!p.has_polynomial_coeffs()) continue;
        EulerForm ef = euler_rewrite(p);
        int m = p.order();
        OreOperator xm = OreOperator::coeff_op(RatFunc(MultiPoly::monomial(2, ExpVec{m, m}, 1)));
        OreOperator xmp = xm * p;
        for (const auto& w : exponents_up_to(2, 4)) {
            MultiPoly lhs = apply_to_polynomial(xmp, MultiPoly::monomial(2, w, 1));
            MultiPoly rhs(2);
            std::vector<Rational> wq(w.begin(), w.end());
            for (const auto& [v, pv] : ef.parts)
                rhs.add_term(vec_add(v, w), pv.eval(wq));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("translation examples") {
    CHECK(translate_operator(op("x1*d1", 1), {Rational(1)}) == op("(x1 + 1)*d1", 1));
    OreOperator p = op("x2*d2 + d1 - x2 - 1");
    CHECK(translate_operator(p, {0, 0}) == p);
    // EX:nop heads become nonzero at the origin after moving (1,1) there
    GroebnerBasis g = sys_axes();
    std::vector<OreOperator> shifted;
    for (const auto& e : g.elements) shifted.push_back(translate_operator(e, {Rational(1), Rational(1)}));
    GroebnerBasis h = buchberger(shifted);
    CHECK(is_ordinary_at(h, {0, 0}));
}

TEST_CASE("translation is a ring homomorphism") {
    std::mt19937_64 rng(20240312);
    for (int t = 0; t < 20; ++t) {
        OreOperator p = random_operator(rng, 2, 2, 2);
        OreOperator q = random_operator(rng, 2, 2, 2);
        std::vector<Rational> a{random_rational(rng), random_rational(rng)};
        CHECK(translate_operator(p * q, a) ==
              translate_operator(p, a) * translate_operator(q, a));
    }
}
