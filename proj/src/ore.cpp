#include "dfsing/ore.hpp"

#include <sstream>

namespace dfsing {

OreOperator OreOperator::coeff_op(const RatFunc& f) {
    OreOperator p(f.nvars());
    p.add_term(ExpVec(f.nvars(), 0), f);
    return p;
}

OreOperator OreOperator::monomial(int nvars, const ExpVec& u, const RatFunc& c) {
    OreOperator p(nvars);
    p.add_term(u, c);
    return p;
}

OreOperator OreOperator::partial(int nvars, int i) {
    ExpVec u(nvars, 0);
    u[i] = 1;
    return monomial(nvars, u, RatFunc::constant(nvars, 1));
}

void OreOperator::add_term(const ExpVec& u, const RatFunc& c) {
    if ((int)u.size() != nvars_) throw StructuralError("d-exponent length mismatch");
    if (c.nvars() != nvars_) throw StructuralError("coefficient nvars mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(u);
    if (it == terms_.end()) {
        terms_.emplace(u, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int OreOperator::order() const {
    int r = -1;
    for (const auto& term : terms_) r = std::max(r, total_degree(term.first));
    return r;
}

RatFunc OreOperator::coeff(const ExpVec& u) const {
    auto it = terms_.find(u);
    return it == terms_.end() ? RatFunc(nvars_) : it->second;
}

bool OreOperator::has_polynomial_coeffs() const {
    for (const auto& term : terms_)
        if (!term.second.is_polynomial()) return false;
    return true;
}

const ExpVec& OreOperator::head_exponent(const MonomialOrder&) const {
    if (terms_.empty()) throw StructuralError("head term of zero operator");
    return terms_.rbegin()->first; // the map is ordered by the fixed graded order
}

const RatFunc& OreOperator::head_coeff(const MonomialOrder& ord) const {
    return terms_.at(head_exponent(ord));
}

OreOperator OreOperator::operator-() const {
    OreOperator p(nvars_);
    for (const auto& [u, c] : terms_) p.terms_.emplace(u, -c);
    return p;
}

OreOperator OreOperator::operator+(const OreOperator& o) const {
    if (nvars_ != o.nvars_) throw StructuralError("nvars mismatch in operator +");
    OreOperator p = *this;
    for (const auto& [u, c] : o.terms_) p.add_term(u, c);
    return p;
}

OreOperator OreOperator::operator-(const OreOperator& o) const {
    if (nvars_ != o.nvars_) throw StructuralError("nvars mismatch in operator -");
    OreOperator p = *this;
    for (const auto& [u, c] : o.terms_) p.add_term(u, -c);
    return p;
}

OreOperator OreOperator::operator*(const RatFunc& c) const {
    OreOperator p(nvars_);
    if (c.is_zero()) return p;
    for (const auto& [u, cu] : terms_) p.add_term(u, c * cu);
    return p;
}

namespace {

// d_i * (f d^v) = f d^{v+e_i} + (df/dx_i) d^v
OreOperator apply_partial_left(int i, const OreOperator& q) {
    OreOperator out(q.nvars());
    for (const auto& [v, f] : q.terms()) {
        ExpVec w = v;
        w[i] += 1;
        out.add_term(w, f);
        out.add_term(v, f.derivative(i));
    }
    return out;
}

} // namespace

OreOperator OreOperator::operator*(const OreOperator& o) const {
    if (nvars_ != o.nvars_) throw StructuralError("nvars mismatch in operator *");
    OreOperator result(nvars_);
    for (const auto& [u, c] : terms_) {
        // c d^u * o: push the partials through one at a time
        OreOperator acc = o;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < u[i]; ++k) acc = apply_partial_left(i, acc);
        result = result + acc * c;
    }
    return result;
}

OreOperator OreOperator::pow(int e) const {
    if (e < 0) throw StructuralError("negative operator power");
    OreOperator r = coeff_op(RatFunc::constant(nvars_, 1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

OreOperator translate_operator(const OreOperator& p, const std::vector<Rational>& alpha) {
    if ((int)alpha.size() != p.nvars()) throw StructuralError("translation vector length mismatch");
    OreOperator out(p.nvars());
    for (const auto& [u, c] : p.terms()) out.add_term(u, c.shift(alpha));
    return out;
}

EulerForm euler_rewrite(const OreOperator& p) {
    if (p.is_zero()) throw StructuralError("euler_rewrite of zero operator");
    if (!p.has_polynomial_coeffs()) throw StructuralError("euler_rewrite needs polynomial coefficients");
    int n = p.nvars();
    int m = p.order();
    EulerForm ef;
    ef.shift = ExpVec(n, m);
    // x^m * (c_a x^a d^u) = c_a x^{a+m-u} * prod_i (delta_i)^{u_i falling},
    // using x_i^{u_i} d_i^{u_i} = (delta_i)^{u_i falling}; valid since
    // a_i + m >= u_i for every i.
    for (const auto& [u, coeff] : p.terms()) {
        MultiPoly cpoly = coeff.as_polynomial();
        // falling factorial prod_i y_i (y_i - 1) ... (y_i - u_i + 1)
        MultiPoly ff = MultiPoly::constant(n, 1);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < u[i]; ++k)
                ff = ff * (MultiPoly::variable(n, i) - MultiPoly::constant(n, k));
        for (const auto& [a, ca] : cpoly.terms()) {
            ExpVec v(n);
            for (int i = 0; i < n; ++i) v[i] = a[i] + m - u[i];
            auto it = ef.parts.find(v);
            if (it == ef.parts.end())
                ef.parts.emplace(v, ff * ca);
            else {
                it->second = it->second + ff * ca;
                if (it->second.is_zero()) ef.parts.erase(it);
            }
        }
    }
    return ef;
}

MultiPoly apply_to_polynomial(const OreOperator& p, const MultiPoly& f) {
    if (p.nvars() != f.nvars()) throw StructuralError("nvars mismatch in operator action");
    if (!p.has_polynomial_coeffs()) throw StructuralError("polynomial action needs polynomial coefficients");
    int n = p.nvars();
    MultiPoly out(n);
    for (const auto& [u, coeff] : p.terms()) {
        // d^u(x^a) = prod_i a_i (a_i-1) ... (a_i-u_i+1) x^{a-u}
        MultiPoly df(n);
        for (const auto& [a, ca] : f.terms()) {
            Rational fac = 1;
            bool vanish = false;
            ExpVec b(n);
            for (int i = 0; i < n; ++i) {
                if (a[i] < u[i]) {
                    vanish = true;
                    break;
                }
                b[i] = a[i] - u[i];
                for (int k = 0; k < u[i]; ++k) fac *= (a[i] - k);
            }
            if (!vanish) df.add_term(b, ca * fac);
        }
        out = out + coeff.as_polynomial() * df;
    }
    return out;
}

std::string OreOperator::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [u, c] = *it;
        bool has_d = !is_zero_vec(u);
        std::string cs;
        bool negated = false;
        if (c.is_polynomial()) {
            MultiPoly cp = c.as_polynomial();
            if (has_d && cp.term_count() == 1) {
                // single monomial coefficient: print sign outside
                Rational a = cp.leading_coeff();
                if (a < 0) {
                    negated = true;
                    cp = -cp;
                }
                if (cp == MultiPoly::constant(nvars_, 1))
                    cs = "";
                else
                    cs = cp.str();
            } else if (has_d && cp.term_count() > 1) {
                cs = "(" + cp.str() + ")";
            } else {
                cs = cp.str();
                if (!cs.empty() && cs[0] == '-') {
                    negated = true;
                    cs = cs.substr(1);
                }
            }
        } else {
            cs = c.str();
            if (!cs.empty() && cs[0] == '-') {
                negated = true;
                cs = cs.substr(1);
            }
        }
        if (first)
            os << (negated ? "-" : "");
        else
            os << (negated ? " - " : " + ");
        first = false;
        os << cs;
        if (has_d) {
            bool started = !cs.empty();
            for (int i = 0; i < nvars_; ++i) {
                if (u[i] == 0) continue;
                if (started) os << "*";
                started = true;
                os << "d" << (i + 1);
                if (u[i] > 1) os << "^" << u[i];
            }
        }
    }
    return os.str();
}

} // namespace dfsing
