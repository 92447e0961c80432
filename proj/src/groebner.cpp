#include "dfsing/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dfsing {

namespace {

// ---------------------------------------------------------------------------
// Fraction-free completion core.  Elements are kept with polynomial
// coefficients: a reduction step scales by the reducer's head coefficient
// instead of dividing, and the full content is stripped again right after.
// Stripping makes the growth self-limiting: the step produces lambda * r for
// the exact K(x) remainder r and a polynomial lambda, and content(lambda * r)
// = lambda * content(r), so lambda never survives a step.

struct OrePoly {
    int nvars = 0;
    std::map<ExpVec, MultiPoly, GrlexLess> terms;

    bool is_zero() const { return terms.empty(); }

    void add_term(const ExpVec& u, const MultiPoly& c) {
        if (c.is_zero()) return;
        auto it = terms.find(u);
        if (it == terms.end()) {
            terms.emplace(u, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    const ExpVec& head_exponent(const MonomialOrder&) const {
        return terms.rbegin()->first; // map ordered by the fixed graded order
    }
};

OrePoly from_ore(const OreOperator& p) {
    OrePoly q;
    q.nvars = p.nvars();
    OreOperator prim = make_primitive_element(p);
    for (const auto& [u, c] : prim.terms()) q.terms.emplace(u, c.as_polynomial());
    return q;
}

OreOperator to_ore(const OrePoly& p) {
    OreOperator q(p.nvars);
    for (const auto& [u, c] : p.terms) q.add_term(u, RatFunc(c));
    return q;
}

// d_i * p
OrePoly partial_left(int i, const OrePoly& p) {
    OrePoly out;
    out.nvars = p.nvars;
    for (const auto& [v, c] : p.terms) {
        ExpVec w = v;
        w[i] += 1;
        out.add_term(w, c);
        out.add_term(v, c.derivative(i));
    }
    return out;
}

OrePoly mono_mul(const ExpVec& shift, const OrePoly& p) {
    OrePoly acc = p;
    for (size_t i = 0; i < shift.size(); ++i)
        for (int k = 0; k < shift[i]; ++k) acc = partial_left((int)i, acc);
    return acc;
}

OrePoly coeff_mul(const OrePoly& p, const MultiPoly& c) {
    OrePoly out;
    out.nvars = p.nvars;
    if (c.is_zero()) return out;
    for (const auto& [u, cu] : p.terms) out.terms.emplace(u, cu * c);
    return out;
}

OrePoly sub(const OrePoly& a, const OrePoly& b) {
    OrePoly out = a;
    for (const auto& [u, c] : b.terms) out.add_term(u, -c);
    return out;
}

// divide by the full content; the gcd fold stops early once it hits constants
void strip_content(OrePoly& p) {
    if (p.is_zero()) return;
    MultiPoly g(p.nvars);
    for (const auto& [u, c] : p.terms) {
        g = g.is_zero() ? c : poly_gcd_with_content(g, c);
        if (g.is_constant()) break;
    }
    if (g.is_constant()) {
        Rational r = 1;
        bool first = true;
        for (const auto& [u, c] : p.terms) {
            Rational rc = rational_content(c);
            if (first) {
                r = rc;
                first = false;
            } else {
                Integer num, den;
                mpz_gcd(num.get_mpz_t(), r.get_num().get_mpz_t(), rc.get_num().get_mpz_t());
                mpz_lcm(den.get_mpz_t(), r.get_den().get_mpz_t(), rc.get_den().get_mpz_t());
                r = make_rational(num, den);
            }
            if (r == 1) return;
        }
        for (auto& [u, c] : p.terms) c = c * (1 / r);
        return;
    }
    if (g.leading_coeff() < 0) g = -g;
    for (auto& [u, c] : p.terms) c = c.divexact(g);
}

class PseudoReducer {
  public:
    explicit PseudoReducer(MonomialOrder ord) : order_(ord) {}
    PseudoReducer(const std::vector<OrePoly>& basis, MonomialOrder ord) : order_(ord) {
        for (const auto& g : basis) push(g);
    }

    void push(const OrePoly& g) {
        basis_.push_back(g);
        heads_.push_back(g.head_exponent(order_));
    }

    size_t size() const { return basis_.size(); }
    const ExpVec& head(size_t j) const { return heads_[j]; }
    const OrePoly& element(size_t j) const { return basis_[j]; }

    const OrePoly& shifted(size_t j, const ExpVec& s) const {
        auto key = std::make_pair(j, s);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        OrePoly prod = is_zero_vec(s) ? basis_[j] : mono_mul(s, basis_[j]);
        return cache_.emplace(std::move(key), std::move(prod)).first->second;
    }

    int find(const ExpVec& w) const {
        int best = -1;
        for (size_t j = 0; j < heads_.size(); ++j) {
            if (!divides(heads_[j], w)) continue;
            if (best < 0 || order_.less(heads_[j], heads_[best])) best = (int)j;
        }
        return best;
    }

    // remainder of p, up to a K(x) scalar
    OrePoly reduce(OrePoly p) const {
        while (!p.is_zero()) {
            // highest reducible term first; smallest reducer head on ties
            const ExpVec* target = nullptr;
            int reducer = -1;
            for (const auto& [w, c] : p.terms) {
                int j = find(w);
                if (j >= 0 && (!target || order_.less(*target, w))) {
                    target = &w;
                    reducer = j;
                }
            }
            if (!target) break;
            const OrePoly& m = shifted(reducer, vec_sub(*target, heads_[reducer]));
            MultiPoly cw = p.terms.at(*target);
            p = sub(coeff_mul(p, m.terms.at(*target)), coeff_mul(m, cw));
            strip_content(p);
        }
        return p;
    }

    OrePoly spoly(size_t i, size_t j, const ExpVec& lcm) const {
        const OrePoly& si = shifted(i, vec_sub(lcm, heads_[i]));
        const OrePoly& sj = shifted(j, vec_sub(lcm, heads_[j]));
        OrePoly s = sub(coeff_mul(si, sj.terms.at(lcm)), coeff_mul(sj, si.terms.at(lcm)));
        strip_content(s);
        return s;
    }

  private:
    MonomialOrder order_;
    std::vector<OrePoly> basis_;
    std::vector<ExpVec> heads_;
    mutable std::map<std::pair<size_t, ExpVec>, OrePoly> cache_;
};

// Exact reduction over K(x), used for the public normal form.  Basis
// elements are cached monic (head coefficient 1), so a reduction step is a
// multiply-subtract with no division, and the left products d^s * g are
// memoized since the same shifts recur.
class Reducer {
  public:
    Reducer(const std::vector<OreOperator>& basis, MonomialOrder ord) : order_(ord) {
        for (const auto& g : basis) {
            monic_.push_back(g * (RatFunc::constant(g.nvars(), 1) / g.head_coeff(order_)));
            heads_.push_back(g.head_exponent(order_));
        }
    }

    OreOperator reduce(OreOperator p) const {
        while (!p.is_zero()) {
            // highest reducible term first; smallest reducer head on ties
            const ExpVec* target = nullptr;
            int reducer = -1;
            for (const auto& [w, c] : p.terms()) {
                int j = find(w);
                if (j >= 0 && (!target || order_.less(*target, w))) {
                    target = &w;
                    reducer = j;
                }
            }
            if (!target) break;
            RatFunc cw = p.coeff(*target);
            const OreOperator& m = shifted(reducer, vec_sub(*target, heads_[reducer]));
            p = p - m * cw;
        }
        return p;
    }

  private:
    int find(const ExpVec& w) const {
        int best = -1;
        for (size_t j = 0; j < heads_.size(); ++j) {
            if (!divides(heads_[j], w)) continue;
            if (best < 0 || order_.less(heads_[j], heads_[best])) best = (int)j;
        }
        return best;
    }

    const OreOperator& shifted(size_t j, const ExpVec& s) const {
        auto key = std::make_pair(j, s);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        OreOperator prod = is_zero_vec(s)
                               ? monic_[j]
                               : OreOperator::monomial((int)s.size(), s,
                                                       RatFunc::constant((int)s.size(), 1)) *
                                     monic_[j];
        return cache_.emplace(std::move(key), std::move(prod)).first->second;
    }

    MonomialOrder order_;
    std::vector<OreOperator> monic_;
    std::vector<ExpVec> heads_;
    mutable std::map<std::pair<size_t, ExpVec>, OreOperator> cache_;
};

std::optional<std::vector<ExpVec>> compute_pe(const std::vector<ExpVec>& heads, int nvars) {
    // D-finiteness certificate: a pure d_i-power head for every i
    std::vector<int> bound(nvars, -1);
    for (const auto& h : heads) {
        int nz = -1;
        bool pure = true;
        for (int i = 0; i < nvars; ++i) {
            if (h[i] == 0) continue;
            if (nz >= 0) {
                pure = false;
                break;
            }
            nz = i;
        }
        if (!pure) continue;
        if (nz < 0) return std::vector<ExpVec>{}; // head 1: unit ideal, PE empty
        if (bound[nz] < 0 || h[nz] < bound[nz]) bound[nz] = h[nz];
    }
    for (int i = 0; i < nvars; ++i)
        if (bound[i] < 0) return std::nullopt;

    std::vector<ExpVec> pe;
    ExpVec u(nvars, 0);
    while (true) {
        bool parametric = true;
        for (const auto& h : heads)
            if (divides(h, u)) {
                parametric = false;
                break;
            }
        if (parametric) pe.push_back(u);
        int i = 0;
        while (i < nvars && u[i] == bound[i] - 1) u[i++] = 0;
        if (i == nvars) break;
        ++u[i];
    }
    std::sort(pe.begin(), pe.end(), GrlexLess{});
    return pe;
}

GroebnerBasis finalize(std::vector<OreOperator> elems, MonomialOrder order) {
    GroebnerBasis g;
    g.order = order;
    std::sort(elems.begin(), elems.end(), [&](const OreOperator& a, const OreOperator& b) {
        return order.less(a.head_exponent(order), b.head_exponent(order));
    });
    g.elements.reserve(elems.size());
    for (auto& e : elems) {
        OreOperator prim = make_primitive_element(e);
        g.head_exponents.push_back(prim.head_exponent(order));
        g.head_coeffs.push_back(prim.head_coeff(order).as_polynomial());
        g.elements.push_back(std::move(prim));
    }
    g.pe = compute_pe(g.head_exponents, g.nvars());
    return g;
}

} // namespace

OreOperator make_primitive_element(const OreOperator& p) {
    if (p.is_zero()) return p;
    int n = p.nvars();
    // least common denominator
    MultiPoly lcd = MultiPoly::constant(n, 1);
    bool all_poly = true;
    for (const auto& [u, c] : p.terms()) {
        if (c.is_polynomial()) continue;
        all_poly = false;
        MultiPoly g = poly_gcd_with_content(lcd, c.den());
        lcd = lcd.divexact(g) * c.den();
    }
    OreOperator q = all_poly ? p : p * RatFunc(lcd);
    std::vector<MultiPoly> coeffs;
    coeffs.reserve(q.terms().size());
    for (const auto& [u, c] : q.terms()) coeffs.push_back(c.as_polynomial());
    auto [content, prim] = content_primitive(coeffs);
    OreOperator out(n);
    size_t k = 0;
    for (const auto& [u, c] : q.terms()) out.add_term(u, RatFunc(prim[k++]));
    // sign: head coefficient gets a positive leading coefficient
    MonomialOrder grlex;
    if (out.head_coeff(grlex).num().leading_coeff() < 0) out = -out;
    return out;
}

GroebnerBasis make_primitive(const GroebnerBasis& g) {
    return finalize(g.elements, g.order);
}

OreOperator normal_form(const OreOperator& p, const GroebnerBasis& g) {
    if (!g.elements.empty() && p.nvars() != g.nvars())
        throw StructuralError("nvars mismatch in normal form");
    return Reducer(g.elements, g.order).reduce(p);
}

GroebnerBasis buchberger(const std::vector<OreOperator>& gens, MonomialOrder order) {
    int n = -1;
    for (const auto& p : gens) {
        if (n < 0)
            n = p.nvars();
        else if (p.nvars() != n)
            throw StructuralError("nvars mismatch among generators");
    }
    PseudoReducer red(order);
    std::set<std::pair<size_t, size_t>> pairs;
    bool unit = false;

    auto append = [&](const OrePoly& e) {
        if (is_zero_vec(e.head_exponent(order))) {
            unit = true;
            return;
        }
        size_t idx = red.size();
        red.push(e);
        for (size_t i = 0; i < idx; ++i) pairs.emplace(i, idx);
    };

    for (const auto& p : gens) {
        if (p.is_zero()) continue;
        OrePoly r = red.reduce(from_ore(p));
        if (!r.is_zero()) append(r);
        if (unit) break;
    }
    if (red.size() == 0 && !unit) throw StructuralError("Groebner basis of all-zero generators");

    while (!unit && !pairs.empty()) {
        // normal selection: smallest lcm of head exponents, then smallest indices
        auto chosen = pairs.begin();
        ExpVec chosen_lcm = vec_lcm(red.head(chosen->first), red.head(chosen->second));
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            ExpVec l = vec_lcm(red.head(it->first), red.head(it->second));
            if (order.less(l, chosen_lcm)) {
                chosen = it;
                chosen_lcm = l;
            }
        }
        auto [i, j] = *chosen;
        pairs.erase(chosen);

        OrePoly r = red.reduce(red.spoly(i, j, chosen_lcm));
        if (!r.is_zero()) append(r);
    }

    if (unit) {
        std::vector<OreOperator> u{OreOperator::coeff_op(RatFunc::constant(n, 1))};
        return finalize(std::move(u), order);
    }

    std::vector<OrePoly> basis;
    for (size_t i = 0; i < red.size(); ++i) basis.push_back(red.element(i));

    // minimalize: drop elements whose head is divisible by another head
    std::vector<OrePoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        const ExpVec& h = basis[i].head_exponent(order);
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const ExpVec& hj = basis[j].head_exponent(order);
            if (divides(hj, h) && (hj != h || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // inter-reduce tails
    std::vector<OreOperator> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<OrePoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(to_ore(PseudoReducer(others, order).reduce(minimal[i])));
    }
    return finalize(std::move(reduced), order);
}

const std::vector<ExpVec>& parametric_exponents(const GroebnerBasis& g) {
    if (!g.pe)
        throw NotDFiniteError("no pure d_i-power head term for some i; PE(G) is infinite");
    return *g.pe;
}

int rank(const GroebnerBasis& g) { return (int)parametric_exponents(g).size(); }

} // namespace dfsing
