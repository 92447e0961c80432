#ifndef DFSING_RATFUNC_HPP
#define DFSING_RATFUNC_HPP

#include <string>

#include "dfsing/multipoly.hpp"

namespace dfsing {

// Reduced rational function num/den: gcd(num, den) = 1, den has coprime
// integer coefficients with positive leading coefficient under the x-order.
class RatFunc {
  public:
    explicit RatFunc(int nvars = 0)
        : num_(nvars), den_(MultiPoly::constant(nvars, 1)) {}
    RatFunc(const MultiPoly& num, const MultiPoly& den);
    /* implicit */ RatFunc(const MultiPoly& num)
        : num_(num), den_(MultiPoly::constant(num.nvars(), 1)) {}

    static RatFunc constant(int nvars, const Rational& c) {
        return RatFunc(MultiPoly::constant(nvars, c));
    }

    int nvars() const { return num_.nvars(); }
    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    // requires is_polynomial()
    MultiPoly as_polynomial() const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc derivative(int i) const;
    RatFunc shift(const std::vector<Rational>& alpha) const;
    // exact value; throws StructuralError if the denominator vanishes
    Rational eval(const std::vector<Rational>& point) const;

    std::string str() const;

  private:
    MultiPoly num_, den_;
    void reduce();
};

} // namespace dfsing

#endif
