#include "dfsing/ideals.hpp"

#include <set>

#include "dfsing/linalg.hpp"

namespace dfsing {

LeftIdeal make_ideal(const std::vector<OreOperator>& gens) {
    return LeftIdeal{buchberger(gens)};
}

LeftIdeal point_ideal(int nvars, const ExpVec& v) {
    if ((int)v.size() != nvars) throw StructuralError("point exponent length mismatch");
    std::vector<OreOperator> gens;
    for (int i = 0; i < nvars; ++i) {
        OreOperator g = OreOperator::partial(nvars, i) * RatFunc(MultiPoly::variable(nvars, i));
        g.add_term(ExpVec(nvars, 0), RatFunc::constant(nvars, -v[i]));
        gens.push_back(g);
    }
    return make_ideal(gens);
}

LeftIdeal exp_ideal(const std::vector<Rational>& c) {
    int nvars = (int)c.size();
    std::vector<OreOperator> gens;
    for (int i = 0; i < nvars; ++i) {
        OreOperator g = OreOperator::partial(nvars, i);
        g.add_term(ExpVec(nvars, 0), RatFunc::constant(nvars, -c[i]));
        gens.push_back(g);
    }
    return make_ideal(gens);
}

LeftIdeal ideal_sum(const LeftIdeal& i, const LeftIdeal& j) {
    std::vector<OreOperator> gens = i.basis.elements;
    gens.insert(gens.end(), j.basis.elements.begin(), j.basis.elements.end());
    return make_ideal(gens);
}

namespace {

// Normal-form coordinates of d^u over the parametric basis of one ideal,
// built incrementally along the monomial ladder.
class QuotientCoords {
  public:
    explicit QuotientCoords(const GroebnerBasis& g) : gb_(&g) {
        const auto& pe = parametric_exponents(g);
        for (size_t k = 0; k < pe.size(); ++k) index_.emplace(pe[k], (int)k);
    }

    int dim() const { return (int)index_.size(); }

    void append_coords(const ExpVec& u, std::vector<RatFunc>& out) {
        const OreOperator& r = nf(u);
        size_t base = out.size();
        out.resize(base + index_.size(), RatFunc(gb_->nvars()));
        for (const auto& [v, c] : r.terms()) out[base + index_.at(v)] = c;
    }

  private:
    const OreOperator& nf(const ExpVec& u) {
        auto it = cache_.find(u);
        if (it != cache_.end()) return it->second;
        int n = gb_->nvars();
        OreOperator r(n);
        if (is_zero_vec(u)) {
            r = normal_form(OreOperator::coeff_op(RatFunc::constant(n, 1)), *gb_);
        } else {
            int i = 0;
            while (u[i] == 0) ++i;
            ExpVec w = u;
            w[i] -= 1;
            r = normal_form(OreOperator::partial(n, i) * nf(w), *gb_);
        }
        return cache_.emplace(u, std::move(r)).first->second;
    }

    const GroebnerBasis* gb_;
    std::map<ExpVec, int, GrlexLess> index_;
    std::map<ExpVec, OreOperator, GrlexLess> cache_;
};

} // namespace

// The reduced Groebner basis of I cap J by linear algebra on the quotient
// K(x)[d]/I (+) K(x)[d]/J: walking the monomial ladder in graded order, a
// monomial whose coordinate vector depends K(x)-linearly on the parametric
// ones below it yields the basis element with that head; independent
// monomials are parametric for the intersection.
LeftIdeal intersect(const LeftIdeal& I, const LeftIdeal& J) {
    int n = I.nvars();
    if (n != J.nvars()) throw StructuralError("nvars mismatch in intersection");
    QuotientCoords qi(I.basis), qj(J.basis);
    int dim = qi.dim() + qj.dim();
    RatFunc zero(n), one = RatFunc::constant(n, 1);

    std::set<ExpVec, GrlexLess> queue{ExpVec(n, 0)};
    std::vector<ExpVec> param;
    std::vector<std::vector<RatFunc>> param_coords;
    std::vector<ExpVec> heads;
    std::vector<OreOperator> elements;

    while (!queue.empty()) {
        ExpVec u = *queue.begin();
        queue.erase(queue.begin());
        bool reducible = false;
        for (const auto& h : heads)
            if (divides(h, u)) {
                reducible = true;
                break;
            }
        if (reducible) continue;

        std::vector<RatFunc> phi;
        phi.reserve(dim);
        qi.append_coords(u, phi);
        qj.append_coords(u, phi);

        // solve [param_coords] c = phi
        size_t m = param.size();
        std::vector<std::vector<RatFunc>> sys(dim, std::vector<RatFunc>(m + 1, zero));
        for (size_t k = 0; k < m; ++k)
            for (int r = 0; r < dim; ++r) sys[r][k] = param_coords[k][r];
        for (int r = 0; r < dim; ++r) sys[r][m] = phi[r];
        std::vector<int> pivots = rref(sys);
        bool solvable = true;
        for (int p : pivots)
            if (p == (int)m) solvable = false;

        if (!solvable) {
            param.push_back(u);
            param_coords.push_back(std::move(phi));
            for (int i = 0; i < n; ++i) {
                ExpVec w = u;
                w[i] += 1;
                queue.insert(std::move(w));
            }
            continue;
        }
        // the columns are independent, so the solution is unique
        OreOperator el = OreOperator::monomial(n, u, one);
        for (size_t r = 0; r < pivots.size(); ++r)
            el.add_term(param[pivots[r]], zero - sys[r][m]);
        heads.push_back(u);
        elements.push_back(std::move(el));
    }

    GroebnerBasis out;
    out.elements = std::move(elements);
    return LeftIdeal{make_primitive(out)};
}

LeftIdeal intersect_many(const LeftIdeal& first, const std::vector<LeftIdeal>& rest) {
    LeftIdeal acc = first;
    for (const auto& j : rest) acc = intersect(acc, j);
    return acc;
}

bool is_left_multiple(const GroebnerBasis& m, const GroebnerBasis& g) {
    if (m.nvars() != g.nvars()) throw StructuralError("nvars mismatch in left-multiple test");
    for (const auto& e : m.elements)
        if (!normal_form(e, g).is_zero()) return false;
    return true;
}

} // namespace dfsing
