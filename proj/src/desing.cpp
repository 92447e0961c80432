#include "dfsing/desing.hpp"

#include <algorithm>
#include <random>

#include "dfsing/linalg.hpp"

namespace dfsing {

std::vector<std::vector<ExpVec>> candidate_subsets(const std::vector<ExpVec>& s, int d) {
    std::vector<std::vector<ExpVec>> out;
    if (d < 0 || d > (int)s.size()) return out;
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    while (true) {
        std::vector<ExpVec> subset;
        subset.reserve(d);
        for (int i : idx) subset.push_back(s[i]);
        std::sort(subset.begin(), subset.end(), GrlexLess{});
        out.push_back(std::move(subset));
        int i = d - 1;
        while (i >= 0 && idx[i] == (int)s.size() - d + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    auto max_deg = [](const std::vector<ExpVec>& b) {
        int m = 0;
        for (const auto& u : b) m = std::max(m, total_degree(u));
        return m;
    };
    std::stable_sort(out.begin(), out.end(),
                     [&](const std::vector<ExpVec>& a, const std::vector<ExpVec>& b) {
                         int ma = max_deg(a), mb = max_deg(b);
                         if (ma != mb) return ma < mb;
                         return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                                             GrlexLess{});
                     });
    return out;
}

namespace {

std::vector<ExpVec> complement_in_ball(int nvars, int m, const std::vector<ExpVec>& b) {
    std::vector<ExpVec> out;
    for (const auto& v : exponents_up_to(nvars, m))
        if (std::find(b.begin(), b.end(), v) == b.end()) out.push_back(v);
    return out;
}

// G cap (cap_v I_v): the point ideals are folded together first, which keeps
// the partial bases small, then intersected with G once.
LeftIdeal intersect_with_points(const GroebnerBasis& g, const std::vector<ExpVec>& vs) {
    if (vs.empty()) return LeftIdeal{g};
    LeftIdeal acc = point_ideal(g.nvars(), vs[0]);
    for (size_t k = 1; k < vs.size(); ++k) acc = intersect(acc, point_ideal(g.nvars(), vs[k]));
    return intersect(LeftIdeal{g}, acc);
}

} // namespace

Desingularization desingularize(const GroebnerBasis& g) {
    int n = g.nvars();
    int d = rank(g);
    CandidateSet cand = candidate_exponents(g);
    std::vector<Rational> origin(n, 0);

    for (const auto& b : candidate_subsets(cand.exponents, d)) {
        int m = 0;
        for (const auto& u : b) m = std::max(m, total_degree(u));
        LeftIdeal acc = intersect_with_points(g, complement_in_ball(n, m, b));
        if (is_ordinary_at(acc.basis, origin))
            return Desingularization{std::move(acc.basis), std::move(cand), b, m};
    }
    throw NotApparentError("no candidate subset yields an ordinary origin");
}

Classification classify_origin(const GroebnerBasis& g) {
    int n = g.nvars();
    std::vector<Rational> origin(n, 0);
    Classification out;
    if (is_ordinary_at(g, origin)) {
        out.verdict = Classification::Verdict::Ordinary;
        return out;
    }
    int d = rank(g);
    out.candidates = candidate_exponents(g);
    if ((int)out.candidates.exponents.size() < d) {
        out.verdict = Classification::Verdict::NotApparent;
        return out;
    }
    for (const auto& b : candidate_subsets(out.candidates.exponents, d)) {
        int m = 0;
        for (const auto& u : b) m = std::max(m, total_degree(u));
        LeftIdeal acc = intersect_with_points(g, complement_in_ball(n, m, b));
        if (is_ordinary_at(acc.basis, origin)) {
            out.verdict = Classification::Verdict::Apparent;
            out.witness = std::move(acc.basis);
            out.chosen_subset = b;
            out.m = m;
            return out;
        }
    }
    out.verdict = Classification::Verdict::NotApparent;
    return out;
}

RandomDesingularization desingularize_random(
    const GroebnerBasis& g, const std::optional<std::vector<std::vector<Rational>>>& points,
    std::uint64_t seed) {
    int n = g.nvars();
    int d = rank(g);
    RandomDesingularization out;
    out.candidates = candidate_exponents(g);
    out.seed = seed;
    out.seeded = !points.has_value();

    if (points) {
        for (const auto& c : *points)
            if ((int)c.size() != n) throw StructuralError("random point has wrong dimension");
    }
    std::mt19937_64 rng(seed);
    auto next_point = [&](size_t j) -> std::vector<Rational> {
        if (points) {
            if (j >= points->size()) throw StructuralError("not enough points supplied");
            return (*points)[j];
        }
        std::vector<Rational> c(n);
        for (int i = 0; i < n; ++i) c[i] = Rational((long)(rng() % 100 + 1));
        return c;
    };

    std::vector<Rational> origin(n, 0);
    for (const auto& b : candidate_subsets(out.candidates.exponents, d)) {
        int m = 0;
        for (const auto& u : b) m = std::max(m, total_degree(u));
        int ell = (int)exponents_up_to(n, m).size();
        std::vector<std::vector<Rational>> used;
        LeftIdeal acc{g};
        for (int j = 0; j < ell - d; ++j) {
            used.push_back(next_point(j));
            acc = intersect(acc, exp_ideal(used.back()));
        }
        if (is_ordinary_at(acc.basis, origin)) {
            out.basis = std::move(acc.basis);
            out.chosen_subset = b;
            out.m = m;
            out.points_used = std::move(used);
            return out;
        }
    }
    return out; // fail: basis empty
}

Rational WronskianMatrix::det() const {
    return determinant(entries, Rational(0), Rational(1));
}

WronskianMatrix wronskian_matrix(const std::vector<TruncatedSeries>& series,
                                 const std::vector<ExpVec>& rows) {
    if (series.size() != rows.size())
        throw StructuralError("wronskian matrix must be square");
    int need = 0;
    for (const auto& u : rows) need = std::max(need, total_degree(u));
    WronskianMatrix w;
    w.rows = rows;
    for (size_t i = 0; i < rows.size(); ++i) {
        std::vector<Rational> row;
        for (const auto& f : series) {
            if (f.trunc_degree() < need)
                throw StructuralError("series truncation too small for wronskian rows");
            row.push_back(f.coeff(rows[i]));
        }
        w.entries.push_back(std::move(row));
    }
    return w;
}

TruncatedSolutions truncated_solutions_apparent(const GroebnerBasis& g, int m, int cap_slack) {
    int n = g.nvars();
    int d = rank(g);
    TruncatedSolutions out;
    out.desing = desingularize(g);
    const GroebnerBasis& mult = out.desing.basis;
    int ell = rank(mult);
    int r = 0;
    for (const auto& e : g.elements) r = std::max(r, e.order());
    int cap = m + r + ell + cap_slack;

    for (int s = m;; ++s) {
        if (s > cap)
            throw ConvergenceCapError("rank condition not reached by s = " + std::to_string(cap));
        SolutionBasis sols = solutions_at_ordinary(mult, s + r);
        std::vector<std::vector<Rational>> a;
        std::vector<ExpVec> window = exponents_up_to(n, s);
        for (const auto& gt : g.elements) {
            std::vector<TruncatedSeries> images;
            for (const auto& h : sols.basis) images.push_back(ore_apply(gt, h));
            for (const auto& w : window) {
                std::vector<Rational> row(ell);
                bool nonzero = false;
                for (int i = 0; i < ell; ++i) {
                    row[i] = images[i].coeff(w);
                    nonzero = nonzero || row[i] != 0;
                }
                if (nonzero) a.push_back(std::move(row));
            }
        }
        int rk = a.empty() ? 0 : matrix_rank(a);
        if (rk != ell - d) continue;
        out.s_final = s;
        out.rank_a = rk;
        out.kernel = kernel_basis(std::move(a), ell, Rational(0), Rational(1));
        for (const auto& k : out.kernel) {
            TruncatedSeries p(n, m);
            for (int i = 0; i < ell; ++i)
                if (k[i] != 0) p = p + sols.basis[i].truncate(m) * k[i];
            out.solutions.push_back(p.to_polynomial());
        }
        return out;
    }
}

} // namespace dfsing
