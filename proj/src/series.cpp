#include "dfsing/series.hpp"

#include <sstream>

namespace dfsing {

namespace {

Rational multi_binomial(const ExpVec& w, const ExpVec& u) {
    Rational b = 1;
    for (size_t i = 0; i < w.size(); ++i) b *= Rational(binomial(w[i], u[i]));
    return b;
}

Integer multi_factorial(const ExpVec& u) {
    Integer f = 1;
    for (int e : u) f *= factorial(e);
    return f;
}

} // namespace

TruncatedSeries TruncatedSeries::from_polynomial(const MultiPoly& p, int trunc_degree) {
    TruncatedSeries s(p.nvars(), trunc_degree);
    for (const auto& [u, a] : p.terms()) {
        if (total_degree(u) > trunc_degree) continue;
        s.coeffs_.emplace(u, a * Rational(multi_factorial(u)));
    }
    return s;
}

Rational TruncatedSeries::coeff(const ExpVec& u) const {
    auto it = coeffs_.find(u);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::set_coeff(const ExpVec& u, const Rational& c) {
    if ((int)u.size() != nvars_) throw StructuralError("series exponent length mismatch");
    if (total_degree(u) > trunc_) throw StructuralError("series coefficient beyond truncation");
    if (c == 0)
        coeffs_.erase(u);
    else
        coeffs_[u] = c;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    if (nvars_ != o.nvars_) throw StructuralError("nvars mismatch in series +");
    TruncatedSeries s(nvars_, std::min(trunc_, o.trunc_));
    for (const auto& [u, c] : coeffs_)
        if (total_degree(u) <= s.trunc_) s.coeffs_.emplace(u, c);
    for (const auto& [u, c] : o.coeffs_) {
        if (total_degree(u) > s.trunc_) continue;
        auto it = s.coeffs_.find(u);
        if (it == s.coeffs_.end())
            s.coeffs_.emplace(u, c);
        else {
            it->second += c;
            if (it->second == 0) s.coeffs_.erase(it);
        }
    }
    return s;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    return *this + o * Rational(-1);
}

TruncatedSeries TruncatedSeries::operator*(const Rational& c) const {
    TruncatedSeries s(nvars_, trunc_);
    if (c == 0) return s;
    for (const auto& [u, a] : coeffs_) s.coeffs_.emplace(u, a * c);
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    if (nvars_ != o.nvars_) throw StructuralError("nvars mismatch in series *");
    // c_w(fg) = sum_{u <= w} binom(w, u) c_u(f) c_{w-u}(g)
    TruncatedSeries s(nvars_, std::min(trunc_, o.trunc_));
    for (const auto& [u, cu] : coeffs_) {
        for (const auto& [v, cv] : o.coeffs_) {
            ExpVec w = vec_add(u, v);
            if (total_degree(w) > s.trunc_) continue;
            Rational add = multi_binomial(w, u) * cu * cv;
            auto it = s.coeffs_.find(w);
            if (it == s.coeffs_.end())
                s.coeffs_.emplace(w, add);
            else {
                it->second += add;
                if (it->second == 0) s.coeffs_.erase(it);
            }
        }
    }
    return s;
}

TruncatedSeries TruncatedSeries::inverse() const {
    Rational a0 = coeff(ExpVec(nvars_, 0));
    if (a0 == 0) throw StructuralError("series inverse needs nonzero constant term");
    TruncatedSeries g(nvars_, trunc_);
    // ascending in grlex: every needed c_{w-u}(g) is already known
    for (const auto& w : exponents_up_to(nvars_, trunc_)) {
        if (is_zero_vec(w)) {
            g.set_coeff(w, 1 / a0);
            continue;
        }
        Rational s = 0;
        for (const auto& [u, cu] : coeffs_) {
            if (is_zero_vec(u) || !divides(u, w)) continue;
            s += multi_binomial(w, u) * cu * g.coeff(vec_sub(w, u));
        }
        g.set_coeff(w, -s / a0);
    }
    return g;
}

TruncatedSeries TruncatedSeries::truncate(int m) const {
    if (m >= trunc_) {
        TruncatedSeries s = *this;
        s.trunc_ = std::min(m, trunc_);
        return s;
    }
    TruncatedSeries s(nvars_, m);
    for (const auto& [u, c] : coeffs_)
        if (total_degree(u) <= m) s.coeffs_.emplace(u, c);
    return s;
}

MultiPoly TruncatedSeries::to_polynomial() const {
    MultiPoly p(nvars_);
    for (const auto& [u, c] : coeffs_) p.add_term(u, c / Rational(multi_factorial(u)));
    return p;
}

Rational constant_term(const TruncatedSeries& f) {
    return f.coeff(ExpVec(f.nvars(), 0));
}

ExpVec initial_exponent(const TruncatedSeries& f) {
    if (f.is_zero()) throw StructuralError("initial exponent of zero series");
    return f.coeffs().begin()->first; // map is grlex-ascending
}

TruncatedSeries ore_apply(const OreOperator& p, const TruncatedSeries& f) {
    if (p.nvars() != f.nvars()) throw StructuralError("nvars mismatch in operator action");
    int n = f.nvars();
    int r = std::max(p.order(), 0);
    int target = f.trunc_degree() - r;
    if (target < 0) throw StructuralError("series truncation too small for operator order");
    TruncatedSeries out(n, target);
    for (const auto& [u, coeff] : p.terms()) {
        // d^u f: shift the derivative table
        TruncatedSeries df(n, f.trunc_degree() - total_degree(u));
        for (const auto& [w, c] : f.coeffs()) {
            bool ok = true;
            ExpVec v(n);
            for (int i = 0; i < n; ++i) {
                v[i] = w[i] - u[i];
                if (v[i] < 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) df.set_coeff(v, c);
        }
        TruncatedSeries piece(n, target);
        if (coeff.is_polynomial()) {
            piece = TruncatedSeries::from_polynomial(coeff.as_polynomial(), target) * df.truncate(target);
        } else {
            MultiPoly den = coeff.den();
            if (den.coeff(ExpVec(n, 0)) == 0)
                throw StructuralError("coefficient denominator vanishes at the origin");
            TruncatedSeries num_s = TruncatedSeries::from_polynomial(coeff.num(), target);
            TruncatedSeries den_s = TruncatedSeries::from_polynomial(den, target);
            piece = num_s * den_s.inverse() * df.truncate(target);
        }
        out = out + piece;
    }
    return out;
}

std::string TruncatedSeries::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Taylor coefficients, ascending so the initial term comes first
    for (const auto& [u, c] : coeffs_) {
        Rational a = c / Rational(multi_factorial(u));
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = !is_zero_vec(u);
        if (a != 1 || !has_vars) {
            os << to_string(a);
            if (has_vars) os << "*";
        }
        bool started = false;
        for (size_t i = 0; i < u.size(); ++i) {
            if (u[i] == 0) continue;
            if (started) os << "*";
            started = true;
            os << "x" << (i + 1);
            if (u[i] > 1) os << "^" << u[i];
        }
    }
    return os.str();
}

} // namespace dfsing
