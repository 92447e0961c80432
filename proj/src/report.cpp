#include "dfsing/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace dfsing {

namespace {

using json = nlohmann::ordered_json;

std::string exps_to_string(const std::vector<ExpVec>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += exp_to_string(v[i]);
    }
    return s + "}";
}

json exps_to_json(const std::vector<ExpVec>& v) {
    json arr = json::array();
    for (const auto& u : v) arr.push_back(u);
    return arr;
}

json basis_json(const GroebnerBasis& g) {
    json j;
    json elems = json::array();
    for (const auto& e : g.elements) elems.push_back(e.str());
    j["elements"] = elems;
    json hc = json::array();
    for (const auto& p : g.head_coeffs) hc.push_back(p.str());
    j["head_terms"] = exps_to_json(g.head_exponents);
    j["head_coeffs"] = hc;
    if (g.pe) {
        j["pe"] = exps_to_json(*g.pe);
        j["rank"] = g.pe->size();
    }
    return j;
}

void basis_text(std::ostream& os, const GroebnerBasis& g, const std::string& indent) {
    for (const auto& e : g.elements) os << indent << e.str() << "\n";
}

std::string hc_text(const GroebnerBasis& g) {
    // set of head coefficients, deduplicated, in basis order
    std::vector<std::string> seen;
    std::string s = "{";
    for (const auto& p : g.head_coeffs) {
        std::string t = p.str();
        if (std::find(seen.begin(), seen.end(), t) != seen.end()) continue;
        if (!seen.empty()) s += ", ";
        s += t;
        seen.push_back(t);
    }
    return s + "}";
}

} // namespace

std::string report_basis(const GroebnerBasis& g, bool as_json) {
    if (as_json) return basis_json(g).dump(2) + "\n";
    std::ostringstream os;
    os << "basis:\n";
    basis_text(os, g, "  ");
    os << "HT: " << exps_to_string(g.head_exponents) << "\n";
    os << "HC: " << hc_text(g) << "\n";
    if (g.pe) {
        os << "PE: " << exps_to_string(*g.pe) << "\n";
        os << "rank: " << g.pe->size() << "\n";
    } else {
        os << "PE: infinite (not D-finite)\n";
    }
    return os.str();
}

std::string report_classification(const Classification& c, const GroebnerBasis& g, bool as_json) {
    bool ordinary = c.verdict == Classification::Verdict::Ordinary;
    if (as_json) {
        json j;
        j["status"] = ordinary ? "ordinary" : "singular";
        j["hc"] = basis_json(g)["head_coeffs"];
        j["pe"] = exps_to_json(parametric_exponents(g));
        j["rank"] = rank(g);
        if (!ordinary) {
            j["candidates"] = exps_to_json(c.candidates.exponents);
            j["verdict"] =
                c.verdict == Classification::Verdict::Apparent ? "apparent" : "not-apparent";
            if (c.witness) {
                j["chosen_subset"] = exps_to_json(c.chosen_subset);
                j["m"] = c.m;
                j["witness"] = basis_json(*c.witness);
            }
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "status: " << (ordinary ? "ordinary" : "singular") << "\n";
    os << "HC: " << hc_text(g) << "\n";
    os << "PE: " << exps_to_string(parametric_exponents(g)) << "\n";
    os << "rank: " << rank(g) << "\n";
    if (!ordinary) {
        os << "candidates: " << exps_to_string(c.candidates.exponents) << "\n";
        os << "verdict: "
           << (c.verdict == Classification::Verdict::Apparent ? "apparent" : "not-apparent") << "\n";
        if (c.witness) {
            os << "B: " << exps_to_string(c.chosen_subset) << "\n";
            os << "m: " << c.m << "\n";
            os << "witness rank: " << rank(*c.witness) << "\n";
            os << "witness HC: " << hc_text(*c.witness) << "\n";
            os << "witness basis:\n";
            basis_text(os, *c.witness, "  ");
        }
    }
    return os.str();
}

std::string report_desingularization(const Desingularization& d, bool as_json) {
    if (as_json) {
        json j;
        j["candidates"] = exps_to_json(d.candidates.exponents);
        j["chosen_subset"] = exps_to_json(d.chosen_subset);
        j["m"] = d.m;
        j["multiple"] = basis_json(d.basis);
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "candidates: " << exps_to_string(d.candidates.exponents) << "\n";
    os << "B: " << exps_to_string(d.chosen_subset) << "\n";
    os << "m: " << d.m << "\n";
    os << "rank: " << rank(d.basis) << "\n";
    os << "HC: " << hc_text(d.basis) << "\n";
    os << "basis:\n";
    basis_text(os, d.basis, "  ");
    return os.str();
}

std::string report_random(const RandomDesingularization& r, bool as_json) {
    auto points_text = [&] {
        std::string s;
        for (size_t j = 0; j < r.points_used.size(); ++j) {
            if (j) s += ";";
            for (size_t i = 0; i < r.points_used[j].size(); ++i) {
                if (i) s += ",";
                s += to_string(r.points_used[j][i]);
            }
        }
        return s;
    };
    if (as_json) {
        json j;
        j["status"] = r.basis ? "success" : "fail";
        j["candidates"] = exps_to_json(r.candidates.exponents);
        if (r.seeded) j["seed"] = r.seed;
        if (r.basis) {
            j["chosen_subset"] = exps_to_json(r.chosen_subset);
            j["m"] = r.m;
            j["points"] = points_text();
            j["multiple"] = basis_json(*r.basis);
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "status: " << (r.basis ? "success" : "fail") << "\n";
    os << "candidates: " << exps_to_string(r.candidates.exponents) << "\n";
    if (r.seeded) os << "seed: " << r.seed << "\n";
    if (r.basis) {
        os << "B: " << exps_to_string(r.chosen_subset) << "\n";
        os << "m: " << r.m << "\n";
        os << "points: " << points_text() << "\n";
        os << "rank: " << rank(*r.basis) << "\n";
        os << "HC: " << hc_text(*r.basis) << "\n";
        os << "basis:\n";
        basis_text(os, *r.basis, "  ");
    }
    return os.str();
}

std::string report_indicial(const std::vector<IndicialPoly>& per_generator, const CandidateSet& s,
                            bool as_json) {
    if (as_json) {
        json j;
        json inds = json::array();
        for (const auto& p : per_generator) inds.push_back(p.poly.str("y"));
        j["indicial"] = inds;
        j["candidates"] = exps_to_json(s.exponents);
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    for (size_t i = 0; i < per_generator.size(); ++i)
        os << "ind(G" << (i + 1) << "): " << per_generator[i].poly.str("y") << "\n";
    os << "candidates: " << exps_to_string(s.exponents) << "\n";
    return os.str();
}

std::string report_solutions(const SolutionBasis& s, bool as_json) {
    if (as_json) {
        json j;
        json arr = json::array();
        for (size_t i = 0; i < s.basis.size(); ++i) {
            json e;
            e["tag"] = s.parametric_tags[i];
            e["series"] = s.basis[i].str();
            arr.push_back(e);
        }
        j["solutions"] = arr;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    for (size_t i = 0; i < s.basis.size(); ++i)
        os << "f" << (i + 1) << " [tag " << exp_to_string(s.parametric_tags[i])
           << "]: " << s.basis[i].str() << "\n";
    return os.str();
}

std::string report_truncated_solutions(const TruncatedSolutions& t, bool as_json) {
    if (as_json) {
        json j;
        j["multiple_rank"] = rank(t.desing.basis);
        j["s"] = t.s_final;
        j["rank_A"] = t.rank_a;
        j["kernel_dim"] = t.kernel.size();
        json sols = json::array();
        for (const auto& p : t.solutions) sols.push_back(p.str());
        j["solutions"] = sols;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "multiple rank: " << rank(t.desing.basis) << "\n";
    os << "s: " << t.s_final << "\n";
    os << "rank(A): " << t.rank_a << "\n";
    os << "kernel dim: " << t.kernel.size() << "\n";
    for (size_t i = 0; i < t.solutions.size(); ++i)
        os << "p" << (i + 1) << ": " << t.solutions[i].str() << "\n";
    return os.str();
}

} // namespace dfsing
