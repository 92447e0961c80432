#include "dfsing/solutions.hpp"

namespace dfsing {

bool is_ordinary_at(const GroebnerBasis& g, const std::vector<Rational>& alpha) {
    for (const auto& hc : g.head_coeffs)
        if (hc.eval(alpha) == 0) return false;
    return true;
}

SolutionBasis solutions_at_ordinary(const GroebnerBasis& g, int trunc) {
    int n = g.nvars();
    if (!is_ordinary_at(g, std::vector<Rational>(n, 0)))
        throw OrdinaryPointRequiredError("origin is a singularity of the system");
    const std::vector<ExpVec>& pe = parametric_exponents(g);
    int d = (int)pe.size();

    SolutionBasis out;
    out.parametric_tags = pe;
    out.basis.assign(d, TruncatedSeries(n, trunc));

    std::vector<Rational> origin(n, 0);
    std::map<ExpVec, int, GrlexLess> tag_index;
    for (int j = 0; j < d; ++j) tag_index.emplace(pe[j], j);

    for (const auto& v : exponents_up_to(n, trunc)) {
        auto tag = tag_index.find(v);
        if (tag != tag_index.end()) {
            out.basis[tag->second].set_coeff(v, 1);
            continue;
        }
        // c_v = l_v(0)^{-1} sum_u a_{u,v}(0) c_u with l_v N_v polynomial
        OreOperator nv = normal_form(OreOperator::monomial(n, v, RatFunc::constant(n, 1)), g);
        MultiPoly lv = MultiPoly::constant(n, 1);
        for (const auto& [u, c] : nv.terms()) {
            MultiPoly gcd = poly_gcd_with_content(lv, c.den());
            lv = lv.divexact(gcd) * c.den();
        }
        Rational lv0 = lv.eval(origin);
        if (lv0 == 0)
            throw Error("internal: denominator of a normal form vanishes at an ordinary point");
        for (const auto& [u, c] : nv.terms()) {
            auto idx = tag_index.find(u);
            if (idx == tag_index.end())
                throw Error("internal: normal form contains a non-parametric term");
            Rational auv0 = (c * RatFunc(lv)).as_polynomial().eval(origin);
            if (auv0 == 0) continue;
            out.basis[idx->second].set_coeff(v, auv0 / lv0);
        }
    }
    return out;
}

} // namespace dfsing
