#ifndef DFSING_TESTS_FIXTURES_HPP
#define DFSING_TESTS_FIXTURES_HPP

#include <random>

#include "dfsing/desing.hpp"
#include "dfsing/linalg.hpp"
#include "dfsing/parse.hpp"

namespace dfsing::testing {

inline MultiPoly poly(const std::string& text, int nvars = 2) {
    return parse_polynomial(text, nvars);
}

inline OreOperator op(const std::string& text, int nvars = 2) {
    return parse_operator(text, nvars);
}

inline GroebnerBasis gb_of(const std::vector<std::string>& texts, int nvars = 2) {
    std::vector<OreOperator> gens;
    for (const auto& t : texts) gens.push_back(op(t, nvars));
    return buchberger(gens);
}

// reference systems
inline GroebnerBasis sys_ordinary() { return gb_of({"d2 - d1", "d1^2 + 1"}); }
inline GroebnerBasis sys_axes() {
    return gb_of({"x1*d1^2 - x1*x2*d1 + d1 - x2", "x2*d2 - x1*d1"});
}
inline GroebnerBasis sys_appsin1() { return gb_of({"x2*d2 + d1 - x2 - 1", "d1^2 - d1"}); }
inline GroebnerBasis sys_appsin2() { return gb_of({"x2^2*d2 - x1^2*d1 + x1 - x2", "d1^2"}); }
inline GroebnerBasis sys_prodtrig() {
    return gb_of({"x1*x2*d2 - x1*x2*d1 + x2 - x1", "x1^2*d1^2 - 2*x1*d1 + 2 + x1^2"});
}
inline GroebnerBasis sys_nonapparent() {
    return gb_of({"x1*x2*d2 + (-x1^2 + 2*x1*x2)*d1 - 2*x2",
                  "(x1^3 - x1^2*x2)*d1^2 + 2*x1*x2*d1 - 2*x2"});
}
inline GroebnerBasis sys_trig3() {
    return gb_of({"(x1 - x2)*d1^2 - x1*x2*d2 + x1*x2*d1 + x1 - x2",
                  "(x1 - x2)*d1*d2 + (-1 - x1*x2)*d2 + (1 + x1*x2)*d1 + x1 - x2",
                  "(x1 - x2)*d2^2 - x1*x2*d2 + x1*x2*d1 + x1 - x2"});
}

// ---------------------------------------------------------------------------
// closed-form oracle series in the c_u convention (c_u = d^u f at 0)

inline TruncatedSeries exp_series(const std::vector<Rational>& c, int m) {
    int n = (int)c.size();
    TruncatedSeries f(n, m);
    for (const auto& u : exponents_up_to(n, m)) {
        Rational v = 1;
        for (int i = 0; i < n; ++i)
            if (u[i]) v *= rat_pow(c[i], u[i]);
        f.set_coeff(u, v);
    }
    return f;
}

// x2 * exp(x2) in two variables: d2^k gives (x2 + k) exp(x2)
inline TruncatedSeries x2_exp_x2(int m) {
    TruncatedSeries f(2, m);
    for (int k = 1; k <= m; ++k) f.set_coeff({0, k}, k);
    return f;
}

inline TruncatedSeries sin_x1_plus_x2(int m) {
    TruncatedSeries f(2, m);
    const int table[4] = {0, 1, 0, -1};
    for (const auto& u : exponents_up_to(2, m)) {
        int v = table[total_degree(u) % 4];
        if (v) f.set_coeff(u, v);
    }
    return f;
}

inline TruncatedSeries cos_x1_plus_x2(int m) {
    TruncatedSeries f(2, m);
    const int table[4] = {1, 0, -1, 0};
    for (const auto& u : exponents_up_to(2, m)) {
        int v = table[total_degree(u) % 4];
        if (v) f.set_coeff(u, v);
    }
    return f;
}

// ---------------------------------------------------------------------------
// helpers

// operator annihilates the series up to the guaranteed window
inline bool annihilates(const OreOperator& g, const TruncatedSeries& f) {
    return ore_apply(g, f).is_zero();
}

inline bool annihilates_all(const GroebnerBasis& g, const TruncatedSeries& f) {
    for (const auto& e : g.elements)
        if (!annihilates(e, f)) return false;
    return true;
}

// Q-span equality of polynomial lists, compared through coefficient vectors
inline bool spans_equal(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) {
    std::map<ExpVec, int, GrlexLess> cols;
    auto collect = [&](const std::vector<MultiPoly>& v) {
        for (const auto& p : v)
            for (const auto& [u, c] : p.terms())
                cols.emplace(u, 0);
    };
    collect(a);
    collect(b);
    int k = 0;
    for (auto& [u, idx] : cols) idx = k++;
    auto rows = [&](const std::vector<MultiPoly>& v) {
        std::vector<std::vector<Rational>> m;
        for (const auto& p : v) {
            std::vector<Rational> row(cols.size(), 0);
            for (const auto& [u, c] : p.terms()) row[cols.at(u)] = c;
            m.push_back(std::move(row));
        }
        return m;
    };
    auto ra = rows(a), rb = rows(b);
    std::vector<std::vector<Rational>> rab = ra;
    rab.insert(rab.end(), rb.begin(), rb.end());
    int na = matrix_rank(ra), nb = matrix_rank(rb), nab = matrix_rank(rab);
    return na == nb && nb == nab;
}

// up-to-nonzero-scalar equality of operators
inline bool equal_up_to_scalar(const OreOperator& a, const OreOperator& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    if (a.terms().size() != b.terms().size()) return false;
    RatFunc ratio(0);
    bool have = false;
    auto ita = a.terms().begin();
    auto itb = b.terms().begin();
    for (; ita != a.terms().end(); ++ita, ++itb) {
        if (ita->first != itb->first) return false;
        RatFunc r = ita->second / itb->second;
        if (!have) {
            ratio = r;
            have = true;
        } else if (!(r == ratio)) {
            return false;
        }
    }
    return true;
}

inline bool equal_up_to_scalar(const MultiPoly& a, const MultiPoly& b) {
    return equal_up_to_scalar(OreOperator::coeff_op(RatFunc(a)),
                              OreOperator::coeff_op(RatFunc(b)));
}

// ---------------------------------------------------------------------------
// independent reduction oracle: any-order reduction, first reducer found

inline OreOperator naive_reduce(OreOperator p, const std::vector<OreOperator>& basis) {
    MonomialOrder ord;
    bool changed = true;
    while (changed && !p.is_zero()) {
        changed = false;
        for (const auto& [w, c] : p.terms()) {
            for (const auto& g : basis) {
                const ExpVec& h = g.head_exponent(ord);
                if (!divides(h, w)) continue;
                OreOperator m =
                    OreOperator::monomial(p.nvars(), vec_sub(w, h), RatFunc::constant(p.nvars(), 1)) *
                    g;
                p = p - m * (c / m.coeff(w));
                changed = true;
                break;
            }
            if (changed) break;
        }
    }
    return p;
}

// every S-polynomial reduces to zero with the independent reducer
inline bool is_groebner_basis(const GroebnerBasis& g) {
    MonomialOrder ord;
    for (size_t i = 0; i < g.elements.size(); ++i)
        for (size_t j = i + 1; j < g.elements.size(); ++j) {
            const ExpVec& hi = g.head_exponents[i];
            const ExpVec& hj = g.head_exponents[j];
            ExpVec l = vec_lcm(hi, hj);
            RatFunc one = RatFunc::constant(g.nvars(), 1);
            OreOperator si =
                OreOperator::monomial(g.nvars(), vec_sub(l, hi), one) * g.elements[i];
            OreOperator sj =
                OreOperator::monomial(g.nvars(), vec_sub(l, hj), one) * g.elements[j];
            OreOperator sp = si * (one / si.coeff(l)) - sj * (one / sj.coeff(l));
            if (!naive_reduce(sp, g.elements).is_zero()) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// random generators (fixed engine type for reproducibility)

inline Rational random_rational(std::mt19937_64& rng, int bound = 5) {
    long v = (long)(rng() % (2 * bound + 1)) - bound;
    return Rational(v);
}

inline MultiPoly random_poly(std::mt19937_64& rng, int nvars, int max_deg, int terms) {
    MultiPoly p(nvars);
    for (int t = 0; t < terms; ++t) {
        ExpVec u(nvars);
        for (int i = 0; i < nvars; ++i) u[i] = (int)(rng() % (max_deg + 1));
        p.add_term(u, random_rational(rng));
    }
    return p;
}

inline MultiPoly random_nonzero_poly(std::mt19937_64& rng, int nvars, int max_deg, int terms) {
    while (true) {
        MultiPoly p = random_poly(rng, nvars, max_deg, terms);
        if (!p.is_zero()) return p;
    }
}

inline OreOperator random_operator(std::mt19937_64& rng, int nvars, int max_order, int terms) {
    OreOperator p(nvars);
    for (int t = 0; t < terms; ++t) {
        ExpVec u(nvars);
        int left = max_order;
        for (int i = 0; i < nvars; ++i) {
            u[i] = (int)(rng() % (left + 1));
            left -= u[i];
        }
        p.add_term(u, RatFunc(random_poly(rng, nvars, 2, 2)));
    }
    return p;
}

inline OreOperator random_nonzero_operator(std::mt19937_64& rng, int nvars, int max_order,
                                           int terms) {
    while (true) {
        OreOperator p = random_operator(rng, nvars, max_order, terms);
        if (!p.is_zero()) return p;
    }
}

} // namespace dfsing::testing

#endif
