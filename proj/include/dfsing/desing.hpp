#ifndef DFSING_DESING_HPP
#define DFSING_DESING_HPP

#include <cstdint>
#include <optional>

#include "dfsing/ideals.hpp"
#include "dfsing/indicial.hpp"
#include "dfsing/solutions.hpp"

namespace dfsing {

// Left multiple of the input with an ordinary origin, plus the data of the
// successful candidate subset.
struct Desingularization {
    GroebnerBasis basis;
    CandidateSet candidates;
    std::vector<ExpVec> chosen_subset;
    int m = 0;
};

// Deterministic desingularization by intersecting with point ideals over
// N^n_m minus a candidate subset.  Throws NotApparentError if every subset
// fails (the origin was not an apparent singularity).
Desingularization desingularize(const GroebnerBasis& g);

struct Classification {
    enum class Verdict { Ordinary, Apparent, NotApparent };
    Verdict verdict;
    std::optional<GroebnerBasis> witness;
    CandidateSet candidates;
    std::vector<ExpVec> chosen_subset;
    int m = -1;
};

// Ordinary / apparent / not-apparent verdict for the origin.
Classification classify_origin(const GroebnerBasis& g);

// Randomized desingularization by intersecting with exponential ideals at
// chosen or seeded points.  A missing basis means "fail".
struct RandomDesingularization {
    std::optional<GroebnerBasis> basis;
    CandidateSet candidates;
    std::vector<ExpVec> chosen_subset;
    int m = 0;
    std::vector<std::vector<Rational>> points_used;
    std::uint64_t seed = 0;
    bool seeded = false;
};

RandomDesingularization desingularize_random(
    const GroebnerBasis& g,
    const std::optional<std::vector<std::vector<Rational>>>& points = std::nullopt,
    std::uint64_t seed = 0);

// Matrix of phi(d^{u_i} f_j) over the given rows; determinant nonzero
// certifies linear independence.
struct WronskianMatrix {
    std::vector<ExpVec> rows;
    std::vector<std::vector<Rational>> entries;
    Rational det() const;
};

WronskianMatrix wronskian_matrix(const std::vector<TruncatedSeries>& series,
                                 const std::vector<ExpVec>& rows);

// Truncations at total degree m of a full basis of power-series solutions at
// an apparent singularity, with the intermediate linear-system data.
struct TruncatedSolutions {
    std::vector<MultiPoly> solutions;
    Desingularization desing;
    int s_final = 0;
    int rank_a = 0;
    std::vector<std::vector<Rational>> kernel;
};

TruncatedSolutions truncated_solutions_apparent(const GroebnerBasis& g, int m, int cap_slack = 16);

// Subsets of size d, ordered by (max degree ascending, then lexicographically
// on the grlex-sorted element list).
std::vector<std::vector<ExpVec>> candidate_subsets(const std::vector<ExpVec>& s, int d);

} // namespace dfsing

#endif
