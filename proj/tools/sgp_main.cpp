// Command line surface for the strong geodetic toolkit.
//
//   sgp solve <spec>              exact sg(G) with a witness certificate
//   sgp verify <spec> <cert>      check a certificate file against a graph
//   sgp construct <family> R N    closed-form certificate for thin products
//   sgp bounds <spec>             every applicable bound for the spec
//
// Graph specs: path:N | cycle:N | grid:RxN | cylinder:RxN
//            | product:SPEC*SPEC | file:PATH
//
// JSON goes to stdout, diagnostics to stderr. Exit codes: 0 ok, 1 invalid
// certificate, 2 parse/parameter error, 3 graph not connected, 4 budget
// exhausted or search inconclusive, 5 internal construction failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgp/cert_json.hpp"
#include "sgp/constructions.hpp"
#include "sgp/errors.hpp"
#include "sgp/graph_spec.hpp"
#include "sgp/strong_geodetic.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitValid = 0;
constexpr int kExitInvalidCert = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotConnected = 3;
constexpr int kExitBudget = 4;
constexpr int kExitInternal = 5;

struct SolveOptions {
    std::string spec;
    double budget_seconds = 60.0;
    int workers = 1;
    bool deterministic = true;
    std::uint64_t cap = 1'000'000;
    bool hint_construction = false;
};

std::optional<std::vector<int>> construction_hint(const sgp::BuiltGraph& built) {
    const auto& spec = built.spec;
    if (spec.kind != sgp::GraphSpec::Kind::grid && spec.kind != sgp::GraphSpec::Kind::cylinder)
        return std::nullopt;
    try {
        sgp::AnchorSet anchors = spec.kind == sgp::GraphSpec::Kind::grid
                                     ? sgp::grid_anchors(spec.a, spec.b)
                                     : sgp::cylinder_anchors(spec.a, spec.b);
        std::vector<int> ids;
        for (int c : anchors.positions) {
            ids.push_back(built.labeling->encode(1, c));
            ids.push_back(built.labeling->encode(anchors.r, c));
        }
        for (auto [side, c] : anchors.top_extras) ids.push_back(built.labeling->encode(side, c));
        for (auto [side, c] : anchors.bottom_extras) ids.push_back(built.labeling->encode(side, c));
        std::sort(ids.begin(), ids.end());
        return ids;
    } catch (const std::exception& e) {
        std::cerr << "note: construction hint unavailable: " << e.what() << "\n";
        return std::nullopt;
    }
}

int cmd_solve(const SolveOptions& opt) {
    sgp::BuiltGraph built;
    try {
        built = sgp::build_graph_spec(opt.spec);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }

    sgp::SolverConfig cfg;
    cfg.budget = std::chrono::milliseconds(static_cast<long long>(opt.budget_seconds * 1000.0));
    cfg.workers = opt.workers;
    cfg.deterministic = opt.deterministic;
    cfg.pair_enumeration_cap = opt.cap;
    if (opt.hint_construction)
        if (auto hint = construction_hint(built)) cfg.hints.push_back(std::move(*hint));

    try {
        auto result = sgp::strong_geodetic_number(built.graph, cfg);
        ordered_json out;
        out["sg"] = result.sg;
        out["certificate"] =
            sgp::certificate_to_json(result.certificate, opt.spec, built.labeling);
        std::cout << out.dump(2) << "\n";
        return kExitValid;
    } catch (const sgp::NotConnected& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotConnected;
    } catch (const sgp::BudgetExhausted& e) {
        ordered_json out;
        out["status"] = "budget-exhausted";
        out["lower"] = e.proven_lower_bound();
        std::cout << out.dump(2) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const sgp::TruncationInconclusive& e) {
        ordered_json out;
        out["status"] = "inconclusive";
        out["lower"] = e.level();
        std::cout << out.dump(2) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const sgp::InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}

int cmd_verify(const std::string& spec, const std::string& cert_path) {
    sgp::BuiltGraph built;
    try {
        built = sgp::build_graph_spec(spec);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    sgp::Certificate cert;
    try {
        std::ifstream in(cert_path);
        if (!in) throw sgp::ParseError("cannot open certificate file '" + cert_path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        cert = sgp::certificate_from_json_text(buf.str());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    auto report = sgp::verify_certificate(built.graph, cert);
    std::cout << sgp::coverage_report_to_json(report) << "\n";
    return report.valid ? kExitValid : kExitInvalidCert;
}

int cmd_construct(const std::string& family, int r, int n) {
    sgp::AnchorSet anchors;
    try {
        if (family == "grid")
            anchors = sgp::grid_anchors(r, n);
        else if (family == "cylinder")
            anchors = sgp::cylinder_anchors(r, n);
        else {
            std::cerr << "error: family must be 'grid' or 'cylinder'\n";
            return kExitParse;
        }
    } catch (const sgp::InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }

    try {
        auto cert = sgp::build_certificate(anchors);
        const std::string spec = family + ":" + std::to_string(r) + "x" + std::to_string(n);
        auto [graph, labeling] = family == "grid" ? sgp::build_grid(r, n) : sgp::build_cylinder(r, n);
        (void)graph;
        std::cout << sgp::certificate_to_json(cert, spec, labeling).dump(2) << "\n";
        std::cerr << "size=" << cert.vertices.size() << "\n";
        return kExitValid;
    } catch (const sgp::InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

int cmd_bounds(const std::string& spec_text) {
    sgp::BuiltGraph built;
    try {
        built = sgp::build_graph_spec(spec_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }

    try {
        ordered_json out;
        out["spec"] = spec_text;
        out["covering_lower_bound"] = sgp::covering_lower_bound(built.graph);

        const auto& spec = built.spec;
        const bool grid = spec.kind == sgp::GraphSpec::Kind::grid;
        const bool cyl = spec.kind == sgp::GraphSpec::Kind::cylinder;
        if (grid || cyl) {
            const int r = spec.a, n = spec.b;
            const int target = sgp::ceil_two_sqrt(n);
            const bool construction_applies = grid ? (n >= 2 && n <= r) : (n >= 3 && n <= r);
            if (construction_applies) out["upper"] = target;
            if ((grid && n >= 2) || (cyl && n >= 3)) {
                const int threshold = grid ? sgp::grid_threshold(n) : sgp::cylinder_threshold(n);
                out["threshold"] = threshold;
                out["thin_regime"] = r > threshold;
            }
            if (construction_applies) {
                auto factor = grid ? sgp::build_path(n) : sgp::build_cycle(n);
                if (auto lower = sgp::product_lower_bound(r, factor, target)) {
                    out["lower"] = *lower;
                    out["lower_u"] = target;
                }
            }
        }
        std::cout << out.dump(2) << "\n";
        return kExitValid;
    } catch (const sgp::NotConnected& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotConnected;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strong geodetic sets: exact solver, verifier, constructions, bounds"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    auto* solve = app.add_subcommand("solve", "compute sg(G) with a witness certificate");
    solve->add_option("spec", solve_opt.spec, "graph spec")->required();
    solve->add_option("--budget", solve_opt.budget_seconds, "time budget in seconds (0 = unlimited)")
        ->capture_default_str();
    solve->add_option("--workers", solve_opt.workers, "worker threads")->capture_default_str();
    solve->add_flag("--deterministic,!--no-deterministic", solve_opt.deterministic,
                    "reproducible witness selection")
        ->capture_default_str();
    solve->add_option("--cap", solve_opt.cap, "per-pair geodesic enumeration cap")
        ->capture_default_str();
    solve->add_flag("--hint-construction", solve_opt.hint_construction,
                    "seed grid/cylinder specs with the closed-form anchor set");

    std::string verify_spec, verify_cert;
    auto* verify = app.add_subcommand("verify", "check a certificate file");
    verify->add_option("spec", verify_spec, "graph spec")->required();
    verify->add_option("certificate", verify_cert, "certificate JSON file")->required();

    std::string family;
    int con_r = 0, con_n = 0;
    auto* construct = app.add_subcommand("construct", "closed-form thin grid/cylinder certificate");
    construct->add_option("family", family, "grid or cylinder")->required();
    construct->add_option("r", con_r, "path factor order (rows)")->required();
    construct->add_option("n", con_n, "second factor order (columns)")->required();

    std::string bounds_spec;
    auto* bounds = app.add_subcommand("bounds", "applicable bounds for a spec");
    bounds->add_option("spec", bounds_spec, "graph spec")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    if (solve->parsed()) return cmd_solve(solve_opt);
    if (verify->parsed()) return cmd_verify(verify_spec, verify_cert);
    if (construct->parsed()) return cmd_construct(family, con_r, con_n);
    if (bounds->parsed()) return cmd_bounds(bounds_spec);
    return kExitParse;
}
