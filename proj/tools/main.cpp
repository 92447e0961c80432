#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dfsing/parse.hpp"
#include "dfsing/report.hpp"

using namespace dfsing;

namespace {

// exit codes: 0 ok, 1 internal, 2 parse/structural input, 3 not D-finite,
// 4 ordinary point required, 5 convergence cap, 6 not an apparent singularity
constexpr int EXIT_INTERNAL = 1;
constexpr int EXIT_PARSE = 2;
constexpr int EXIT_NOT_DFINITE = 3;
constexpr int EXIT_ORDINARY_REQUIRED = 4;
constexpr int EXIT_CONVERGENCE = 5;
constexpr int EXIT_NOT_APPARENT = 6;

struct Options {
    std::string file;
    std::string point;
    std::string points;
    int order = 4;
    std::uint64_t seed = 0;
    bool json = false;
};

SystemFile load_system(const Options& opt) {
    std::ifstream in(opt.file);
    if (!in) throw StructuralError("cannot open file: " + opt.file);
    std::ostringstream buf;
    buf << in.rdbuf();
    SystemFile sys = parse_system(buf.str());
    if (!opt.point.empty()) sys.point = parse_rational_vector(opt.point, sys.nvars);
    if (!opt.points.empty()) sys.points = parse_point_list(opt.points, sys.nvars);
    return sys;
}

// translate so the requested point sits at the origin
GroebnerBasis system_basis(const SystemFile& sys) {
    std::vector<OreOperator> gens = sys.generators;
    if (sys.point)
        for (auto& g : gens) g = translate_operator(g, *sys.point);
    return buchberger(gens);
}

void add_common(CLI::App* cmd, Options& opt, bool with_order = false, bool with_random = false) {
    cmd->add_option("file", opt.file, "system file")->required();
    cmd->add_option("--point", opt.point, "work at this point instead of the origin (a1,a2,...)");
    cmd->add_flag("--json", opt.json, "machine-readable output");
    if (with_order) cmd->add_option("--order", opt.order, "truncation degree");
    if (with_random) {
        cmd->add_option("--seed", opt.seed, "seed for generated points");
        cmd->add_option("--points", opt.points, "explicit points c11,c21;c12,c22;...");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"singularity analysis of D-finite systems"};
    app.require_subcommand(1);

    Options opt;
    auto* gb = app.add_subcommand("gb", "reduced primitive Groebner basis");
    add_common(gb, opt);
    auto* classify = app.add_subcommand("classify", "classify the working point");
    add_common(classify, opt);
    auto* desing = app.add_subcommand("desingularize", "left multiple with ordinary origin");
    add_common(desing, opt);
    auto* desing_r = app.add_subcommand("desingularize-random",
                                        "left multiple via random exponential solutions");
    add_common(desing_r, opt, false, true);
    auto* indicial = app.add_subcommand("indicial", "indicial polynomials and candidates");
    add_common(indicial, opt);
    auto* series = app.add_subcommand("series", "power series solution basis");
    add_common(series, opt, true);
    auto* series_a = app.add_subcommand("series-apparent",
                                        "truncated solutions at an apparent singularity");
    add_common(series_a, opt, true);

    CLI11_PARSE(app, argc, argv);

    try {
        SystemFile sys = load_system(opt);
        GroebnerBasis g = system_basis(sys);
        if (gb->parsed()) {
            std::cout << report_basis(g, opt.json);
        } else if (classify->parsed()) {
            std::cout << report_classification(classify_origin(g), g, opt.json);
        } else if (desing->parsed()) {
            std::cout << report_desingularization(desingularize(g), opt.json);
        } else if (desing_r->parsed()) {
            std::cout << report_random(desingularize_random(g, sys.points, opt.seed), opt.json);
        } else if (indicial->parsed()) {
            std::vector<IndicialPoly> inds;
            for (const auto& e : g.elements) inds.push_back(indicial_polynomial(e));
            std::cout << report_indicial(inds, candidate_exponents(g), opt.json);
        } else if (series->parsed()) {
            std::cout << report_solutions(solutions_at_ordinary(g, opt.order), opt.json);
        } else if (series_a->parsed()) {
            std::cout << report_truncated_solutions(truncated_solutions_apparent(g, opt.order),
                                                    opt.json);
        }
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "error: parse: " << e.what() << "\n";
        return EXIT_PARSE;
    } catch (const NotDFiniteError& e) {
        std::cerr << "error: not-d-finite: " << e.what() << "\n";
        return EXIT_NOT_DFINITE;
    } catch (const OrdinaryPointRequiredError& e) {
        std::cerr << "error: ordinary-point-required: " << e.what() << "\n";
        return EXIT_ORDINARY_REQUIRED;
    } catch (const ConvergenceCapError& e) {
        std::cerr << "error: convergence-cap: " << e.what() << "\n";
        return EXIT_CONVERGENCE;
    } catch (const NotApparentError& e) {
        std::cerr << "error: not-apparent: " << e.what() << "\n";
        return EXIT_NOT_APPARENT;
    } catch (const StructuralError& e) {
        std::cerr << "error: input: " << e.what() << "\n";
        return EXIT_PARSE;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_INTERNAL;
    }
}
