#ifndef DFSING_SERIES_HPP
#define DFSING_SERIES_HPP

#include <map>
#include <string>

#include "dfsing/ore.hpp"

namespace dfsing {

// Formal power series truncated at total degree m, stored in the convention
// f = sum_u (c_u / u!) x^u; the map holds the c_u.  phi(d^u f) = c_u, so the
// entries are exactly the mixed partial derivatives at the origin.
class TruncatedSeries {
  public:
    using CoeffMap = std::map<ExpVec, Rational, GrlexLess>;

    TruncatedSeries(int nvars, int trunc_degree)
        : nvars_(nvars), trunc_(trunc_degree) {}

    static TruncatedSeries from_polynomial(const MultiPoly& p, int trunc_degree);

    int nvars() const { return nvars_; }
    int trunc_degree() const { return trunc_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(const ExpVec& u) const;
    void set_coeff(const ExpVec& u, const Rational& c);

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const Rational& c) const;
    // product with binomial convolution of the c_u; truncation = min of the two
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    bool operator==(const TruncatedSeries& o) const {
        return nvars_ == o.nvars_ && trunc_ == o.trunc_ && coeffs_ == o.coeffs_;
    }

    // series inverse; requires nonzero constant term
    TruncatedSeries inverse() const;
    TruncatedSeries truncate(int m) const;
    // Taylor polynomial (factorials applied), i.e. (f)_m for m = trunc_degree
    MultiPoly to_polynomial() const;

    std::string str() const;

  private:
    int nvars_, trunc_;
    CoeffMap coeffs_;
};

// c_0, the constant-term homomorphism phi
Rational constant_term(const TruncatedSeries& f);

// least exponent with nonzero coefficient; throws on the zero series
ExpVec initial_exponent(const TruncatedSeries& f);

// P(f), truncated to trunc_degree(f) - order(P).  Rational-function
// coefficients are expanded; their denominators must not vanish at 0.
TruncatedSeries ore_apply(const OreOperator& p, const TruncatedSeries& f);

} // namespace dfsing

#endif
