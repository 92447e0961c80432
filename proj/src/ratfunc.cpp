#include "dfsing/ratfunc.hpp"

namespace dfsing {

RatFunc::RatFunc(const MultiPoly& num, const MultiPoly& den) : num_(num), den_(den) {
    if (num.nvars() != den.nvars()) throw StructuralError("nvars mismatch in rational function");
    if (den.is_zero()) throw StructuralError("rational function with zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(num_.nvars(), 1);
        return;
    }
    if (!den_.is_constant()) {
        MultiPoly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
    }
    // normalize: den integer-primitive with positive leading coefficient
    Rational c = rational_content(den_);
    if (den_.leading_coeff() < 0) c = -c;
    num_ = num_ * (1 / c);
    den_ = den_ * (1 / c);
}

MultiPoly RatFunc::as_polynomial() const {
    if (!is_polynomial()) throw StructuralError("rational function is not a polynomial");
    return num_ * (1 / den_.constant_value());
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_polynomial() && o.is_polynomial())
        return RatFunc(num_ * (1 / den_.constant_value()) +
                       o.num_ * (1 / o.den_.constant_value()));
    // common-denominator form with the den gcd cancelled up front
    MultiPoly g = poly_gcd_with_content(den_, o.den_);
    MultiPoly da = den_.divexact(g), db = o.den_.divexact(g);
    return RatFunc(num_ * db + o.num_ * da, den_ * db);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc(nvars());
    if (is_polynomial() && o.is_polynomial())
        return RatFunc(num_ * o.num_ * (1 / (den_.constant_value() * o.den_.constant_value())));
    // cross-cancel before multiplying
    MultiPoly g1 = poly_gcd_with_content(num_, o.den_);
    MultiPoly g2 = poly_gcd_with_content(o.num_, den_);
    return RatFunc(num_.divexact(g1) * o.num_.divexact(g2),
                   den_.divexact(g2) * o.den_.divexact(g1));
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw StructuralError("division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::derivative(int i) const {
    // (n/d)' = (n'd - nd')/d^2
    return RatFunc(num_.derivative(i) * den_ - num_ * den_.derivative(i), den_ * den_);
}

RatFunc RatFunc::shift(const std::vector<Rational>& alpha) const {
    return RatFunc(num_.shift(alpha), den_.shift(alpha));
}

Rational RatFunc::eval(const std::vector<Rational>& point) const {
    Rational d = den_.eval(point);
    if (d == 0) throw StructuralError("denominator vanishes at evaluation point");
    return num_.eval(point) / d;
}

std::string RatFunc::str() const {
    if (is_polynomial()) return as_polynomial().str();
    std::string n = num_.term_count() > 1 ? "(" + num_.str() + ")" : num_.str();
    std::string d = den_.term_count() > 1 ? "(" + den_.str() + ")" : den_.str();
    return n + "/" + d;
}

} // namespace dfsing
