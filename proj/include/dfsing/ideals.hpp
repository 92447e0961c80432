#ifndef DFSING_IDEALS_HPP
#define DFSING_IDEALS_HPP

#include "dfsing/groebner.hpp"

namespace dfsing {

// Left ideal of K(x)[d], canonically represented by its reduced primitive
// Groebner basis under the fixed graded order.
struct LeftIdeal {
    GroebnerBasis basis;
    int nvars() const { return basis.nvars(); }
};

LeftIdeal make_ideal(const std::vector<OreOperator>& gens);

// <x_1 d_1 - v_1, ..., x_n d_n - v_n>; rank 1, solution x^v
LeftIdeal point_ideal(int nvars, const ExpVec& v);

// <d_1 - c_1, ..., d_n - c_n>; rank 1, solution exp(c.x)
LeftIdeal exp_ideal(const std::vector<Rational>& c);

// I + J (sum of the generators)
LeftIdeal ideal_sum(const LeftIdeal& i, const LeftIdeal& j);

// I cap J via a central tag variable and block elimination
LeftIdeal intersect(const LeftIdeal& i, const LeftIdeal& j);
LeftIdeal intersect_many(const LeftIdeal& first, const std::vector<LeftIdeal>& rest);

// true iff every element of m reduces to zero modulo g
bool is_left_multiple(const GroebnerBasis& m, const GroebnerBasis& g);

} // namespace dfsing

#endif
