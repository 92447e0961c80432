#include "dfsing/indicial.hpp"

#include "dfsing/linalg.hpp"

namespace dfsing {

IndicialPoly indicial_polynomial(const OreOperator& p) {
    if (p.is_zero()) return IndicialPoly{MultiPoly(p.nvars())};
    EulerForm ef = euler_rewrite(p);
    // parts is grlex-ascending; minimal x-exponent with nonzero part comes first
    return IndicialPoly{ef.parts.begin()->second};
}

OreOperator eliminate_univariate(const GroebnerBasis& g, int i) {
    int n = g.nvars();
    const std::vector<ExpVec>& pe = parametric_exponents(g);
    int d = (int)pe.size();
    std::map<ExpVec, int, GrlexLess> col;
    for (int j = 0; j < d; ++j) col.emplace(pe[j], j);

    RatFunc one = RatFunc::constant(n, 1);
    RatFunc zero(n);
    OreOperator di = OreOperator::partial(n, i);

    // rows: normal forms of d_i^k expressed over the parametric basis
    std::vector<std::vector<RatFunc>> rows;
    OreOperator nf = normal_form(OreOperator::coeff_op(one), g);
    for (int k = 0; k <= d; ++k) {
        std::vector<RatFunc> row(d, zero);
        for (const auto& [u, c] : nf.terms()) row[col.at(u)] = c;
        rows.push_back(std::move(row));

        // first dependence: kernel of the transposed (k+1) x d system
        std::vector<std::vector<RatFunc>> m(d, std::vector<RatFunc>(k + 1, zero));
        for (int r = 0; r <= k; ++r)
            for (int c = 0; c < d; ++c) m[c][r] = rows[r][c];
        auto ker = kernel_basis(std::move(m), k + 1, zero, one);
        if (!ker.empty()) {
            OreOperator op(n);
            for (int r = 0; r <= k; ++r) {
                if (ker[0][r].is_zero()) continue;
                ExpVec u(n, 0);
                u[i] = r;
                op.add_term(u, ker[0][r]);
            }
            return make_primitive_element(op);
        }
        nf = normal_form(di * nf, g);
    }
    throw Error("internal: no univariate dependence up to the rank bound");
}

std::vector<long> nonneg_integer_roots(const std::vector<Rational>& coeffs) {
    int deg = -1;
    for (int k = (int)coeffs.size() - 1; k >= 0; --k)
        if (coeffs[k] != 0) {
            deg = k;
            break;
        }
    if (deg < 0) throw StructuralError("integer roots of the zero polynomial");

    // integer coefficients
    Integer den_lcm = 1;
    for (const auto& c : coeffs)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> ic(deg + 1);
    for (int k = 0; k <= deg; ++k) {
        Rational c = coeffs[k] * Rational(den_lcm);
        ic[k] = c.get_num();
    }
    // strip the y^s factor
    int s = 0;
    while (ic[s] == 0) ++s;

    auto eval_at = [&](const Integer& k) {
        Integer v = 0;
        for (int j = deg; j >= s; --j) v = v * k + ic[j];
        return v;
    };

    std::set<long> roots;
    if (s > 0) roots.insert(0);
    if (deg > s) {
        // any positive integer root divides the trailing coefficient
        Integer a0 = abs(ic[s]);
        for (Integer p = 1; p * p <= a0; ++p) {
            if (a0 % p != 0) continue;
            Integer q = a0 / p;
            if (eval_at(p) == 0) roots.insert(p.get_si());
            if (eval_at(q) == 0) roots.insert(q.get_si());
        }
    }
    return std::vector<long>(roots.begin(), roots.end());
}

std::vector<long> nonneg_integer_roots(const MultiPoly& p, int var) {
    std::vector<Rational> coeffs(p.max_degree_in(var) + 1, 0);
    for (const auto& [u, c] : p.terms()) {
        for (size_t i = 0; i < u.size(); ++i)
            if ((int)i != var && u[i] != 0)
                throw StructuralError("polynomial is not univariate in the requested variable");
        coeffs[u[var]] += c;
    }
    return nonneg_integer_roots(coeffs);
}

CandidateSet candidate_exponents(const GroebnerBasis& g) {
    int n = g.nvars();
    CandidateSet out;

    std::vector<std::vector<long>> per_var(n);
    for (int i = 0; i < n; ++i) {
        OreOperator qi = eliminate_univariate(g, i);
        IndicialPoly ind = indicial_polynomial(qi);
        per_var[i] = nonneg_integer_roots(ind.poly, i);
        out.generators_used.push_back(std::move(ind));
    }
    std::vector<IndicialPoly> gen_inds;
    for (const auto& e : g.elements) gen_inds.push_back(indicial_polynomial(e));

    // grid of per-variable roots, filtered by the generators' indicial polynomials
    std::vector<ExpVec> grid{ExpVec{}};
    for (int i = 0; i < n; ++i) {
        std::vector<ExpVec> next;
        for (const auto& v : grid)
            for (long r : per_var[i]) {
                ExpVec w = v;
                w.push_back((int)r);
                next.push_back(std::move(w));
            }
        grid = std::move(next);
    }
    for (const auto& v : grid) {
        std::vector<Rational> point(v.begin(), v.end());
        bool ok = true;
        for (const auto& ind : gen_inds)
            if (ind.poly.eval(point) != 0) {
                ok = false;
                break;
            }
        if (ok) out.exponents.push_back(v);
    }
    std::sort(out.exponents.begin(), out.exponents.end(), GrlexLess{});
    for (auto& ind : gen_inds) out.generators_used.push_back(std::move(ind));
    return out;
}

} // namespace dfsing
