#ifndef DFSING_PARSE_HPP
#define DFSING_PARSE_HPP

#include <optional>
#include <string>

#include "dfsing/ore.hpp"

namespace dfsing {

// Operator text syntax: integer/rational coefficients, variables x1..xn,
// partials d1..dn, operators + - * / ^ and parentheses.  '*' is the
// noncommutative product, so d1*x1 parses to x1*d1 + 1; '/' needs a nonzero
// constant divisor.  print/parse round-trip bit-exactly.
OreOperator parse_operator(const std::string& text, int nvars);
MultiPoly parse_polynomial(const std::string& text, int nvars);
Rational parse_rational(const std::string& text);
std::vector<Rational> parse_rational_vector(const std::string& text, int nvars);
// "c11,c21;c12,c22;..." -> list of n-vectors
std::vector<std::vector<Rational>> parse_point_list(const std::string& text, int nvars);

// System file: line 1 "n=<int>", then one operator per non-comment line.
struct SystemFile {
    int nvars = 0;
    std::vector<OreOperator> generators;
    std::optional<std::vector<Rational>> point;
    std::optional<int> order;
    std::optional<std::uint64_t> seed;
    std::optional<std::vector<std::vector<Rational>>> points;
};

SystemFile parse_system(const std::string& text);
std::string print_system(const SystemFile& s);

} // namespace dfsing

#endif
