#include <doctest.h>

#include "fixtures.hpp"

using namespace dfsing;
using namespace dfsing::testing;

TEST_CASE("term order is graded and total") {
    std::mt19937_64 rng(20240329);
    MonomialOrder ord;
    for (int t = 0; t < 200; ++t) {
        ExpVec u{(int)(rng() % 4), (int)(rng() % 4), (int)(rng() % 4)};
        ExpVec v{(int)(rng() % 4), (int)(rng() % 4), (int)(rng() % 4)};
        if (total_degree(u) < total_degree(v)) CHECK(ord.less(u, v));
        if (u != v) CHECK(ord.less(u, v) != ord.less(v, u));
        CHECK(!ord.less(u, u));
    }
    // d2 beats d1
    CHECK(ord.less({1, 0}, {0, 1}));
}

TEST_CASE("normal form examples") {
    GroebnerBasis g = sys_appsin1();
    for (const auto& e : g.elements) CHECK(normal_form(e, g).is_zero());
    CHECK(normal_form(op("d2^2 - 2*d2 + 1"), g).is_zero());
    CHECK(normal_form(op("d1^2"), g) == op("d1"));
}

TEST_CASE("buchberger on the reference fixtures") {
    SUBCASE("already reduced basis is returned unchanged") {
        GroebnerBasis g = sys_ordinary();
        REQUIRE(g.elements.size() == 2);
        CHECK(g.elements[0] == op("d2 - d1"));
        CHECK(g.elements[1] == op("d1^2 + 1"));
        CHECK(is_groebner_basis(g));
    }
    SUBCASE("appsin1 generators form a verified basis") {
        GroebnerBasis g = sys_appsin1();
        REQUIRE(g.elements.size() == 2);
        CHECK(g.elements[0] == op("x2*d2 + d1 - x2 - 1"));
        CHECK(g.elements[1] == op("d1^2 - d1"));
        CHECK(is_groebner_basis(g));
    }
    SUBCASE("unit ideal") {
        GroebnerBasis g = gb_of({"d1", "x1*d1 - 1"});
        CHECK(g.is_unit_ideal());
        REQUIRE(g.elements.size() == 1);
        CHECK(g.elements[0] == op("1"));
        CHECK(rank(g) == 0);
    }
    CHECK_THROWS_AS(buchberger({OreOperator(2)}), StructuralError);
}

TEST_CASE("parametric exponents and rank") {
    SUBCASE("EX:nop") {
        GroebnerBasis g = sys_axes();
        CHECK(parametric_exponents(g) == std::vector<ExpVec>{{0, 0}, {1, 0}});
        CHECK(rank(g) == 2);
    }
    SUBCASE("pure power staircase of rank 6") {
        GroebnerBasis g = gb_of({"d1^3", "d1^2*d2", "d1*d2^2", "d2^3"});
        CHECK(rank(g) == 6);
        CHECK(parametric_exponents(g) == exponents_up_to(2, 2));
    }
    SUBCASE("appsin1") {
        GroebnerBasis g = sys_appsin1();
        CHECK(parametric_exponents(g) == std::vector<ExpVec>{{0, 0}, {1, 0}});
    }
    SUBCASE("not D-finite") {
        GroebnerBasis g = gb_of({"d1"});
        CHECK_THROWS_AS(parametric_exponents(g), NotDFiniteError);
    }
}

TEST_CASE("primitive normalization") {
    SUBCASE("monic element unchanged") {
        CHECK(make_primitive_element(op("d1^2 - d1")) == op("d1^2 - d1"));
    }
    SUBCASE("denominator cleared, content one") {
        OreOperator e = op("x2*d2 + d1 - x2 - 1") * RatFunc(poly("1"), poly("x2"));
        CHECK(make_primitive_element(e) == op("x2*d2 + d1 - x2 - 1"));
    }
    SUBCASE("content removed") {
        OreOperator e = op("2*x1*d1^2 + 4*x1*d1");
        CHECK(make_primitive_element(e) == op("d1^2 + 2*d1"));
    }
}

TEST_CASE("idempotence") {
    for (const GroebnerBasis& g : {sys_ordinary(), sys_appsin1(), sys_appsin2(), sys_nonapparent()}) {
        GroebnerBasis h = buchberger(g.elements);
        REQUIRE(h.elements.size() == g.elements.size());
        for (size_t i = 0; i < g.elements.size(); ++i) CHECK(h.elements[i] == g.elements[i]);
    }
}

TEST_CASE("membership soundness") {
    std::mt19937_64 rng(20240330);
    std::vector<std::vector<OreOperator>> gen_sets = {
        {op("x2*d2 + d1 - x2 - 1"), op("d1^2 - d1")},
        {op("x2^2*d2 - x1^2*d1 + x1 - x2"), op("d1^2")},
    };
    for (const auto& gens : gen_sets) {
        GroebnerBasis g = buchberger(gens);
        for (int t = 0; t < 10; ++t) {
            OreOperator combo(2);
            for (const auto& p : gens) combo = combo + random_operator(rng, 2, 1, 2) * p;
            CHECK(normal_form(combo, g).is_zero());
        }
    }
}

TEST_CASE("reducedness of output") {
    for (const GroebnerBasis& g : {sys_appsin1(), sys_appsin2(), sys_trig3()}) {
        for (size_t i = 0; i < g.elements.size(); ++i)
            for (const auto& [u, c] : g.elements[i].terms())
                for (size_t j = 0; j < g.elements.size(); ++j)
                    if (j != i) CHECK(!divides(g.head_exponents[j], u));
        CHECK(rank(g) == (int)parametric_exponents(g).size());
    }
}

TEST_CASE("normal form is K(x)-linear") {
    GroebnerBasis g = sys_appsin1();
    OreOperator p = op("d2^2 + x1*d1");
    OreOperator q = op("d1^2*d2 - x2*d2");
    RatFunc c(poly("x1 + x2"), poly("1 - x1"));
    OreOperator lhs = normal_form(p * c + q, g);
    OreOperator rhs = normal_form(p, g) * c + normal_form(q, g);
    CHECK(lhs == rhs);
}
