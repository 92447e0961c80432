#ifndef DFSING_REPORT_HPP
#define DFSING_REPORT_HPP

#include <string>

#include "dfsing/desing.hpp"

namespace dfsing {

// Deterministic report rendering for the CLI; plain text or JSON.
std::string report_basis(const GroebnerBasis& g, bool json);
std::string report_classification(const Classification& c, const GroebnerBasis& g, bool json);
std::string report_desingularization(const Desingularization& d, bool json);
std::string report_random(const RandomDesingularization& r, bool json);
std::string report_indicial(const std::vector<IndicialPoly>& per_generator, const CandidateSet& s,
                            bool json);
std::string report_solutions(const SolutionBasis& s, bool json);
std::string report_truncated_solutions(const TruncatedSolutions& t, bool json);

} // namespace dfsing

#endif
