#ifndef DFSING_GROEBNER_HPP
#define DFSING_GROEBNER_HPP

#include <optional>
#include <vector>

#include "dfsing/ore.hpp"

namespace dfsing {

// Reduced left Groebner basis with primitive elements (polynomial
// coefficients, trivial content, sign-normalized head coefficient), sorted by
// ascending head exponent.  Head data and the parametric exponents are cached
// at construction; pe is empty when the ideal is not D-finite.
struct GroebnerBasis {
    std::vector<OreOperator> elements;
    MonomialOrder order;
    std::vector<ExpVec> head_exponents;
    std::vector<MultiPoly> head_coeffs;
    std::optional<std::vector<ExpVec>> pe;

    int nvars() const { return elements.empty() ? 0 : elements[0].nvars(); }
    bool is_unit_ideal() const {
        return elements.size() == 1 && is_zero_vec(head_exponents[0]);
    }
};

// Remainder of p modulo G: no term of the result is divisible by any head
// term of G, and p - result lies in the left ideal of G.
OreOperator normal_form(const OreOperator& p, const GroebnerBasis& g);

// Buchberger completion plus reduction and primitive normalization.
GroebnerBasis buchberger(const std::vector<OreOperator>& gens, MonomialOrder order = {});

// PE(G); throws NotDFiniteError when some d_i has no pure-power head term.
const std::vector<ExpVec>& parametric_exponents(const GroebnerBasis& g);
int rank(const GroebnerBasis& g);

// Clear denominators, remove polynomial content, normalize signs.
OreOperator make_primitive_element(const OreOperator& p);
GroebnerBasis make_primitive(const GroebnerBasis& g);

} // namespace dfsing

#endif
