#ifndef DFSING_ORE_HPP
#define DFSING_ORE_HPP

#include <map>
#include <string>
#include <vector>

#include "dfsing/ratfunc.hpp"

namespace dfsing {

// Element of K(x)[d_1..d_n]: finite sum of rational-function coefficients
// times d-monomials.  Multiplication follows d_i f = f d_i + df/dx_i.
class OreOperator {
  public:
    using TermMap = std::map<ExpVec, RatFunc, GrlexLess>;

    explicit OreOperator(int nvars = 0) : nvars_(nvars) {}

    static OreOperator coeff_op(const RatFunc& f); // order-0 operator
    static OreOperator monomial(int nvars, const ExpVec& u, const RatFunc& c);
    static OreOperator partial(int nvars, int i); // d_{i+1}

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    int order() const; // max |u|, -1 for zero
    RatFunc coeff(const ExpVec& u) const;
    bool has_polynomial_coeffs() const;

    // head data with respect to a term order
    const ExpVec& head_exponent(const MonomialOrder& ord) const;
    const RatFunc& head_coeff(const MonomialOrder& ord) const;

    OreOperator operator-() const;
    OreOperator operator+(const OreOperator& o) const;
    OreOperator operator-(const OreOperator& o) const;
    OreOperator operator*(const OreOperator& o) const; // noncommutative
    OreOperator operator*(const RatFunc& c) const;     // left-multiply by coefficient
    bool operator==(const OreOperator& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const OreOperator& o) const { return !(*this == o); }

    OreOperator pow(int e) const;

    void add_term(const ExpVec& u, const RatFunc& c);

    std::string str() const;

  private:
    int nvars_;
    TermMap terms_;
};

inline OreOperator ore_mul(const OreOperator& p, const OreOperator& q) { return p * q; }

// coefficients shifted to p(x + alpha); solutions correspond under x -> x + alpha
OreOperator translate_operator(const OreOperator& p, const std::vector<Rational>& alpha);

// x^m P rewritten as sum_v x^v p_v(delta), delta_i = x_i d_i, m = order(P).
// Each p_v is a commutative polynomial in fresh indeterminates y_1..y_n.
struct EulerForm {
    ExpVec shift;                              // (m, ..., m)
    std::map<ExpVec, MultiPoly, GrlexLess> parts; // v -> p_v(y)
};

EulerForm euler_rewrite(const OreOperator& p);

// exact action on a polynomial (coefficients of p must be polynomials)
MultiPoly apply_to_polynomial(const OreOperator& p, const MultiPoly& f);

} // namespace dfsing

#endif
