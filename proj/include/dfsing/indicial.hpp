#ifndef DFSING_INDICIAL_HPP
#define DFSING_INDICIAL_HPP

#include <set>

#include "dfsing/groebner.hpp"
#include "dfsing/solutions.hpp"

namespace dfsing {

// Indicial polynomial ind(P) in y_1..y_n: the delta-polynomial attached to
// the minimal x-term of x^m P in Euler form.  ind(0) = 0.
struct IndicialPoly {
    MultiPoly poly;
};

IndicialPoly indicial_polynomial(const OreOperator& p);

// Nonzero primitive operator in the ideal involving only d_{i+1}, of minimal
// degree <= rank(G): the first K(x)-linear dependence among the normal forms
// of d_{i+1}^k.
OreOperator eliminate_univariate(const GroebnerBasis& g, int i);

// All k in N with p(k) = 0; complete via the rational-root bound.
std::vector<long> nonneg_integer_roots(const std::vector<Rational>& coeffs);
std::vector<long> nonneg_integer_roots(const MultiPoly& p, int var);

// Candidate initial exponents: the common nonnegative integer zeros of
// {ind(Q_1), ..., ind(Q_n)} together with {ind(g) : g in G}.
struct CandidateSet {
    std::vector<ExpVec> exponents;          // grlex-ascending
    std::vector<IndicialPoly> generators_used;
};

CandidateSet candidate_exponents(const GroebnerBasis& g);

} // namespace dfsing

#endif
