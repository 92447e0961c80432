#ifndef DFSING_ERRORS_HPP
#define DFSING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dfsing {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed inputs: mismatched variable counts, zero denominators, ...
struct StructuralError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line = 0, column = 0;
    ParseError(const std::string& msg, int line_, int col_)
        : Error("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + msg),
          line(line_), column(col_) {}
};

// No pure-power head term in some d_i: PE(G) would be infinite.
struct NotDFiniteError : Error {
    using Error::Error;
};

// Power series construction asked for at a singular point.
struct OrdinaryPointRequiredError : Error {
    using Error::Error;
};

// Truncated-solution loop exceeded its iteration cap.
struct ConvergenceCapError : Error {
    using Error::Error;
};

// Desingularization exhausted all candidate subsets.
struct NotApparentError : Error {
    using Error::Error;
};

} // namespace dfsing

#endif
