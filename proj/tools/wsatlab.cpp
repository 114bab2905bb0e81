// wsatlab: command-line front door for the weak-saturation laboratory.
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 budget exhausted.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wsat/bounds.hpp"
#include "wsat/constructions.hpp"
#include "wsat/errors.hpp"
#include "wsat/graph6.hpp"
#include "wsat/invariants.hpp"
#include "wsat/percolation.hpp"
#include "wsat/solver.hpp"
#include "wsat/verify.hpp"

namespace {

using wsat::ConstructionResult;
using wsat::LabeledGraph;
using wsat::PatternGraph;

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        out.push_back(std::stoll(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

// Named constructor ("clique:4", "k9mm", ...) or raw graph6. Named forms win;
// prefix "g6:" forces graph6.
ConstructionResult build_named(const std::string& head, const std::vector<long long>& a) {
    auto need = [&](std::size_t count) {
        if (a.size() != count)
            throw std::invalid_argument(head + " expects " + std::to_string(count) + " parameters");
    };
    if (head == "clique") {
        need(1);
        ConstructionResult c;
        c.name = "clique";
        c.graph = LabeledGraph::clique(static_cast<int>(a[0]));
        c.claimed_edges = c.graph.edge_count();
        c.claimed_property = wsat::ClaimedProperty::pattern_family;
        c.params = {{"v", a[0]}};
        return c;
    }
    if (head == "fvd") {
        need(2);
        return wsat::pattern_F_v_delta(static_cast<int>(a[0]), static_cast<int>(a[1]));
    }
    if (head == "fabc") {
        need(3);
        return wsat::pattern_F_abc(static_cast<int>(a[0]), static_cast<int>(a[1]),
                                   static_cast<int>(a[2]));
    }
    if (head == "optfam") {
        need(3);
        return wsat::pattern_optimality_family(static_cast<int>(a[0]), static_cast<int>(a[1]),
                                               static_cast<int>(a[2]));
    }
    if (head == "noncon") {
        need(3);
        return wsat::pattern_nonconcentration(static_cast<int>(a[0]), static_cast<int>(a[1]),
                                              static_cast<int>(a[2]));
    }
    if (head == "k9mm") {
        need(0);
        return wsat::pattern_k9_minus_matching();
    }
    throw std::invalid_argument("unknown constructor: " + head);
}

LabeledGraph parse_graph_source(const std::string& spec) {
    if (spec.rfind("g6:", 0) == 0) return wsat::parse_graph6(spec.substr(3));
    if (spec == "k9mm") return wsat::pattern_k9_minus_matching().graph;
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string head = spec.substr(0, colon);
        return build_named(head, parse_int_list(spec.substr(colon + 1))).graph;
    }
    return wsat::parse_graph6(spec);
}

PatternGraph parse_pattern_source(const std::string& spec) {
    return PatternGraph(parse_graph_source(spec));
}

int reject_induced(const std::string& value) {
    if (value.empty() || value == "false" || value == "0") return 0;
    std::cerr << "warning: induced copies are not supported; the percolation rule uses "
                 "non-induced copies of F (pass --induced=false or omit the flag)\n";
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weak saturation laboratory"};
    app.require_subcommand(1);

    std::string pattern_spec, host_spec, induced = "false", format = "json", cf_spec;
    int n = -1, n_min = -1, n_max = -1, r = -1, workers = 1, imax = -1;
    long long budget_nodes = 50'000'000, budget_ms = 120'000;
    bool no_constructions = false, canonical = false, do_verify = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--budget-nodes", budget_nodes, "search node budget");
        cmd->add_option("--budget-ms", budget_ms, "search time budget (ms)");
        cmd->add_option("--workers", workers, "worker threads for the solver");
        cmd->add_option("--induced", induced, "must be false; only non-induced copies are supported");
        cmd->add_option("--format", format, "json|g6");
    };

    auto* cmd_inv = app.add_subcommand("invariants", "bound profile of a pattern");
    cmd_inv->add_option("--pattern", pattern_spec)->required();
    cmd_inv->add_option("--imax", imax, "g*_r table window");
    add_common(cmd_inv);

    auto* cmd_closure = app.add_subcommand("closure", "percolation trace of a host graph");
    cmd_closure->add_option("--pattern", pattern_spec)->required();
    cmd_closure->add_option("--host", host_spec)->required();
    add_common(cmd_closure);

    auto* cmd_check = app.add_subcommand("check", "weak-saturation test with certificate");
    cmd_check->add_option("--pattern", pattern_spec)->required();
    cmd_check->add_option("--host", host_spec)->required();
    cmd_check->add_option("--n", n, "expected host order");
    add_common(cmd_check);

    auto* cmd_bounds = app.add_subcommand("bounds", "bound report over an n-range");
    cmd_bounds->add_option("--pattern", pattern_spec)->required();
    cmd_bounds->add_option("--n", n);
    cmd_bounds->add_option("--n-min", n_min);
    cmd_bounds->add_option("--n-max", n_max);
    cmd_bounds->add_option("--cf", cf_spec, "certified slope as num/den");
    add_common(cmd_bounds);

    auto* cmd_construct = app.add_subcommand("construct", "emit a named construction");
    cmd_construct->add_option("--name", pattern_spec, "constructor spec, e.g. optfam:1,2,3")
        ->required();
    cmd_construct->add_option("--n", n, "target order for saturators");
    cmd_construct->add_flag("--verify", do_verify, "closure-verify saturator claims");
    add_common(cmd_construct);

    auto* cmd_solve = app.add_subcommand("solve", "exact wsat(n,F)");
    cmd_solve->add_option("--pattern", pattern_spec)->required();
    cmd_solve->add_option("--n", n)->required();
    cmd_solve->add_flag("--no-constructions", no_constructions,
                        "search without construction-seeded upper bounds");
    cmd_solve->add_flag("--canonical", canonical, "enable symmetry rejection");
    add_common(cmd_solve);

    std::string suite;
    auto* cmd_verify = app.add_subcommand("verify", "named theorem suite");
    cmd_verify->add_option("suite", suite, "thm1|thm2|thm5|thm6|thm7|thm8|claim4|claim6|claim7|k9")
        ->required();
    int pv = 5, pdelta = 3;
    cmd_verify->add_option("--v", pv);
    cmd_verify->add_option("--delta", pdelta);
    cmd_verify->add_option("--n-max", n_max);
    add_common(cmd_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (int code = reject_induced(induced); code != 0) return code;

    wsat::SolveOptions solve_opts;
    solve_opts.budget = {budget_nodes, budget_ms};
    solve_opts.use_constructions = !no_constructions;
    solve_opts.canonical_rejection = canonical;
    solve_opts.workers = workers;

    try {
        if (cmd_inv->parsed()) {
            PatternGraph f = parse_pattern_source(pattern_spec);
            std::cout << wsat::to_json(wsat::build_profile(f, imax)) << "\n";
            return 0;
        }
        if (cmd_closure->parsed()) {
            PatternGraph f = parse_pattern_source(pattern_spec);
            LabeledGraph h = parse_graph_source(host_spec);
            wsat::PercolationTrace t = wsat::trace(f, h);
            if (format == "g6")
                std::cout << wsat::to_graph6(t.final) << "\n";
            else
                std::cout << t.to_json_lines();
            return 0;
        }
        if (cmd_check->parsed()) {
            PatternGraph f = parse_pattern_source(pattern_spec);
            LabeledGraph h = parse_graph_source(host_spec);
            const int order = n > 0 ? n : h.vertex_count();
            wsat::PercolationTrace t = wsat::trace(f, h);
            const bool sat = t.final.is_complete() && h.vertex_count() == order;
            nlohmann::json j;
            j["weakly_saturated"] = sat;
            j["n"] = order;
            j["final_edges"] = t.final.edge_count();
            auto arr = nlohmann::json::array();
            for (const auto& step : t.steps)
                arr.push_back({{"edge", {step.edge.first, step.edge.second}},
                               {"embedding", step.embedding}});
            j["certificate"] = std::move(arr);
            std::cout << j.dump() << "\n";
            return sat ? 0 : 1;
        }
        if (cmd_bounds->parsed()) {
            PatternGraph f = parse_pattern_source(pattern_spec);
            wsat::BoundProfile profile = wsat::build_profile(f);
            std::optional<wsat::Rational> cf;
            if (!cf_spec.empty()) {
                auto slash = cf_spec.find('/');
                cf = slash == std::string::npos
                         ? wsat::Rational(std::stoll(cf_spec))
                         : wsat::Rational(std::stoll(cf_spec.substr(0, slash)),
                                          std::stoll(cf_spec.substr(slash + 1)));
            }
            int lo = n_min > 0 ? n_min : (n > 0 ? n : f.vertex_count());
            int hi = n_max > 0 ? n_max : (n > 0 ? n : lo);
            auto arr = nlohmann::json::array();
            for (int k = lo; k <= hi; ++k)
                arr.push_back(nlohmann::json::parse(wsat::to_json(bound_report(f, profile, k, cf))));
            std::cout << arr.dump() << "\n";
            return 0;
        }
        if (cmd_construct->parsed()) {
            ConstructionResult c = [&] {
                auto colon = pattern_spec.find(':');
                const std::string head =
                    colon == std::string::npos ? pattern_spec : pattern_spec.substr(0, colon);
                auto args = colon == std::string::npos
                                ? std::vector<long long>{}
                                : parse_int_list(pattern_spec.substr(colon + 1));
                if (head == "hvn") {  // clique witness: hvn:v and --n
                    if (args.size() != 1 || n < 0)
                        throw std::invalid_argument("hvn:v requires --n");
                    return wsat::saturator_clique_witness(static_cast<int>(args[0]), n);
                }
                if (head == "gstar-witness") {
                    if (args.empty() || n < 0)
                        throw std::invalid_argument("gstar-witness:<pattern args...> requires --n");
                    return wsat::saturator_gstar_witness(
                        PatternGraph(parse_graph_source(pattern_spec.substr(colon + 1))), n);
                }
                return build_named(head, args);
            }();
            if (do_verify && c.claimed_property == wsat::ClaimedProperty::weakly_saturated &&
                !wsat::verify_weakly_saturated(c)) {
                std::cerr << "construction failed closure verification\n";
                return 1;
            }
            if (format == "g6")
                std::cout << wsat::to_graph6(c.graph) << "\n";
            else
                std::cout << wsat::claim_json(c) << "\n";
            return 0;
        }
        if (cmd_solve->parsed()) {
            PatternGraph f = parse_pattern_source(pattern_spec);
            wsat::SolveResult res = wsat::wsat_exact(f, n, solve_opts);
            std::cerr << "time_ms=" << res.time_ms << " nodes=" << res.nodes_expanded << "\n";
            if (format == "g6" && res.exact)
                std::cout << wsat::to_graph6(res.witness) << "\n";
            else
                std::cout << wsat::to_json(res) << "\n";
            return res.exact ? 0 : 3;
        }
        if (cmd_verify->parsed()) {
            wsat::VerifyParams params;
            params.v = pv;
            params.delta = pdelta;
            params.n_max = n_max;
            params.solve = solve_opts;
            wsat::SuiteResult res = wsat::run_verify_suite(suite, params);
            std::cout << wsat::to_json(res) << "\n";
            for (const auto& c : res.checks)
                if (!c.pass) std::cerr << "FAIL " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
            return res.all_pass() ? 0 : 1;
        }
    } catch (const wsat::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wsat::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
