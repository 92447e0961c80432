#ifndef DFSING_MULTIPOLY_HPP
#define DFSING_MULTIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "dfsing/order.hpp"
#include "dfsing/rational.hpp"

namespace dfsing {

// Sparse multivariate polynomial over Q in x_1..x_n.  No zero coefficients
// are stored; term order inside the map is the global graded lex order.
class MultiPoly {
  public:
    using TermMap = std::map<ExpVec, Rational, GrlexLess>;

    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Rational& c);
    static MultiPoly monomial(int nvars, const ExpVec& u, const Rational& c);
    static MultiPoly variable(int nvars, int i); // x_{i+1}

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // 0 for the zero polynomial
    Rational constant_value() const;
    int degree() const; // total degree, -1 for zero
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    // leading data under the induced x-order (grlex)
    const ExpVec& leading_exponent() const;
    const Rational& leading_coeff() const;
    Rational coeff(const ExpVec& u) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& c) const;
    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly pow(int e) const;
    MultiPoly derivative(int i) const;
    Rational eval(const std::vector<Rational>& point) const;
    // p(x_1 + a_1, ..., x_n + a_n)
    MultiPoly shift(const std::vector<Rational>& alpha) const;
    int max_degree_in(int i) const;

    // exact division; throws StructuralError if not divisible
    MultiPoly divexact(const MultiPoly& d) const;

    void add_term(const ExpVec& u, const Rational& c);

    std::string str(const char* var_prefix = "x") const;

  private:
    int nvars_;
    TermMap terms_;
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

// Content-free gcd with sign-normalized leading coefficient; divides both
// inputs exactly.  Subresultant PRS in the main variable underneath.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

// gcd including the rational content, so e.g. {2 x1, 4 x1} has gcd 2 x1.
MultiPoly poly_gcd_with_content(const MultiPoly& a, const MultiPoly& b);

// Splits a list into (content, primitive parts): content * primitive_i =
// coeffs_i and the gcd over the primitive list is 1.
std::pair<MultiPoly, std::vector<MultiPoly>> content_primitive(const std::vector<MultiPoly>& coeffs);

// rational c > 0 with p = +-c * q, q having coprime integer coefficients
Rational rational_content(const MultiPoly& p);

} // namespace dfsing

#endif
