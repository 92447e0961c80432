#ifndef DFSING_SOLUTIONS_HPP
#define DFSING_SOLUTIONS_HPP

#include "dfsing/groebner.hpp"
#include "dfsing/series.hpp"

namespace dfsing {

// Basis of truncated power-series solutions at an ordinary origin.  The j-th
// series has c_u = 1 at its tag exponent and c_u = 0 at the other parametric
// exponents, so [phi(d^{u_i} f_j)] over PE(G) is the identity.
struct SolutionBasis {
    std::vector<TruncatedSeries> basis;
    std::vector<ExpVec> parametric_tags;
};

// true iff no head coefficient of g vanishes at alpha
bool is_ordinary_at(const GroebnerBasis& g, const std::vector<Rational>& alpha);

SolutionBasis solutions_at_ordinary(const GroebnerBasis& g, int trunc);

} // namespace dfsing

#endif
