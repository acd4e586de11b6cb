// hydra: command-line front end for hydra-number computations.
//
// Exit codes: 0 success, 1 verification/property failure, 2 usage or input
// error, 3 resource cap exceeded.

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hydra/bounds.hpp"
#include "hydra/families.hpp"
#include "hydra/horn.hpp"
#include "hydra/io.hpp"
#include "hydra/kclosure.hpp"
#include "hydra/line_graph.hpp"
#include "hydra/represent.hpp"
#include "hydra/solver.hpp"

namespace {

using nlohmann::json;

constexpr const char* kSchema = "hydralab.v1";

struct GlobalOpts {
    bool json = false;
    int threads = 1;
    unsigned seed = 20240901;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw hydra::ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

hydra::Graph load_graph(const std::string& path) { return hydra::parse_graph(slurp(path)); }

hydra::DirectedHypergraph load_certificate(const std::string& path) {
    return hydra::parse_certificate(slurp(path));
}

std::vector<hydra::Vertex> parse_vertex_list(const std::string& text) {
    std::vector<hydra::Vertex> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

std::map<hydra::Vertex, int> parse_caps(const std::vector<std::string>& entries) {
    std::map<hydra::Vertex, int> caps;
    for (const std::string& e : entries) {
        auto eq = e.find('=');
        if (eq == std::string::npos) {
            throw CLI::ValidationError("--caps entries must look like vertex=cap");
        }
        caps[std::stoi(e.substr(0, eq))] = std::stoi(e.substr(eq + 1));
    }
    return caps;
}

void emit_certificate(const hydra::DirectedHypergraph& h, const std::string& out_path) {
    std::string text = hydra::write_certificate(h);
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path);
        out << text << "\n";
    }
}

json rule_json(const hydra::LowerWitness& w) {
    static const std::map<hydra::LowerRule, std::string> names = {
        {hydra::LowerRule::Trivial, "trivial"},
        {hydra::LowerRule::Bridge, "bridge"},
        {hydra::LowerRule::Components, "components"},
        {hydra::LowerRule::PendantEll, "pendant-ell"},
    };
    return json{{"rule", names.at(w.rule)}, {"value", w.value}, {"detail", w.detail}};
}

int cmd_closure(const GlobalOpts& g, const std::string& cert_path,
                const std::string& vertex_list) {
    auto h = load_certificate(cert_path);
    auto seeds = parse_vertex_list(vertex_list);
    auto cl = hydra::closure(h, seeds);
    if (g.json) {
        std::cout << json{{"schema", kSchema},
                          {"command", "closure"},
                          {"seeds", seeds},
                          {"closure", cl},
                          {"full", static_cast<int>(cl.size()) == h.n()}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "closure:";
        for (auto v : cl) std::cout << ' ' << v;
        std::cout << "\n";
    }
    return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& cert_path,
               const std::string& graph_path) {
    auto h = load_certificate(cert_path);
    auto graph = load_graph(graph_path);
    auto report = hydra::represents(h, graph);
    if (g.json) {
        json violations = json::array();
        for (const auto& v : report.violations) {
            violations.push_back(
                {{"pair", {v.pair.u, v.pair.v}},
                 {"kind", v.kind == hydra::ViolationKind::EdgeClosureIncomplete
                              ? "edge-closure-incomplete"
                              : "nonedge-closure-leaks"},
                 {"closure", v.witness}});
        }
        std::cout << json{{"schema", kSchema},
                          {"command", "verify"},
                          {"ok", report.ok},
                          {"arcs", h.size()},
                          {"violations", violations}}
                         .dump()
                  << "\n";
    } else if (report.ok) {
        std::cout << "ok: " << h.size() << " arcs represent the graph\n";
    } else {
        std::cout << "FAIL: " << report.violations.size() << " violating pair(s)\n";
        size_t shown = 0;
        for (const auto& v : report.violations) {
            if (++shown > 10) {
                std::cout << "  ...\n";
                break;
            }
            std::cout << "  (" << v.pair.u << "," << v.pair.v << ") "
                      << (v.kind == hydra::ViolationKind::EdgeClosureIncomplete
                              ? "closure incomplete"
                              : "non-edge closure leaks")
                      << ", closure size " << v.witness.size() << "\n";
        }
    }
    return report.ok ? 0 : 1;
}

struct ExactArgs {
    std::string graph_path;
    bool single_headed = false;
    bool all_optima = false;
    std::vector<std::string> caps;
    long long limit_nodes = 10'000'000;
    double limit_secs = 60.0;
    std::string out_path;
};

int cmd_exact(const GlobalOpts& g, const ExactArgs& args) {
    auto raw = load_graph(args.graph_path);
    auto norm = hydra::normalize(raw);
    const int removed = norm.removed;
    const auto& graph = norm.graph;

    hydra::SolverOptions opts;
    opts.node_limit = args.limit_nodes;
    opts.time_limit_secs = args.limit_secs;
    opts.threads = g.threads;
    opts.head_caps = parse_caps(args.caps);

    if (args.single_headed) {
        auto [ok, cert] = hydra::is_single_headed(graph, opts);
        if (g.json) {
            json j{{"schema", kSchema},
                   {"command", "exact"},
                   {"single_headed", ok},
                   {"isolated_removed", removed}};
            if (cert) j["certificate"] = json::parse(hydra::write_certificate(*cert));
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "single-headed: " << (ok ? "true" : "false") << "\n";
            if (cert && !args.out_path.empty()) emit_certificate(*cert, args.out_path);
        }
        return 0;
    }

    if (args.all_optima) {
        auto optima = hydra::enumerate_optima(graph, opts);
        if (g.json) {
            json list = json::array();
            for (const auto& h : optima)
                list.push_back(json::parse(hydra::write_certificate(h)));
            std::cout << json{{"schema", kSchema},
                              {"command", "exact"},
                              {"optima", list},
                              {"count", optima.size()},
                              {"value", optima.front().size()},
                              {"isolated_removed", removed}}
                             .dump()
                      << "\n";
        } else {
            std::cout << "optima: " << optima.size() << " certificates of size "
                      << optima.front().size() << "\n";
            for (const auto& h : optima) std::cout << hydra::write_certificate(h) << "\n";
        }
        return 0;
    }

    auto result = hydra::hydra_number(graph, opts);
    if (g.json) {
        json j{{"schema", kSchema},
               {"command", "exact"},
               {"exact", result.exact},
               {"isolated_removed", removed},
               {"nodes", result.stats.nodes}};
        if (result.exact) {
            j["value"] = result.value;
            j["value_with_isolated"] = result.value + removed;
            j["excess"] = result.value - graph.edge_count();
            j["certificate"] = json::parse(hydra::write_certificate(*result.certificate));
        } else {
            j["lower"] = result.lower;
            j["upper"] = result.upper;
        }
        std::cout << j.dump() << "\n";
    } else if (result.exact) {
        std::cout << "h = " << result.value;
        if (removed > 0) {
            std::cout << "  (+" << removed << " for isolated vertices: "
                      << result.value + removed << " total)";
        }
        std::cout << "  excess " << result.value - graph.edge_count() << "\n";
        if (!args.out_path.empty()) emit_certificate(*result.certificate, args.out_path);
    } else {
        std::cout << "inexact: " << result.lower << " <= h <= " << result.upper
                  << " (resource cap hit)\n";
    }
    return result.exact || args.single_headed ? 0 : 3;
}

int cmd_bounds(const GlobalOpts& g, const std::string& graph_path,
               const std::string& strategy, int edge_cap) {
    auto graph = hydra::normalize(load_graph(graph_path)).graph;
    hydra::POptions popts;
    if (edge_cap > 0) popts.edge_cap = edge_cap;

    hydra::LowerBoundReport lower = hydra::lower_bound(graph);
    hydra::UpperBound upper;
    std::optional<hydra::PResult> presult;
    if (strategy == "auto") {
        upper = hydra::upper_bound(graph, popts);
    } else {
        hydra::PStrategy ps;
        if (strategy == "exhaustive")
            ps = hydra::PStrategy::Exhaustive;
        else if (strategy == "tree")
            ps = hydra::PStrategy::Tree;
        else if (strategy == "binary-4level")
            ps = hydra::PStrategy::Binary4Level;
        else
            throw CLI::ValidationError("unknown --p-strategy: " + strategy);
        presult = hydra::p_of(graph, ps, popts);
        auto trivial = hydra::trivial_bounds(graph);
        int via_p = graph.edge_count() + presult->value;
        if (via_p <= trivial.upper) {
            auto cert = hydra::extend_spanning(
                hydra::build_from_path_cover(presult->subgraph, presult->cover),
                presult->subgraph, graph);
            upper = {via_p, std::move(cert), "path-cover"};
        } else {
            upper = {trivial.upper, trivial.certificate, "trivial"};
        }
    }

    if (g.json) {
        json rules = json::array();
        for (const auto& w : lower.fired) rules.push_back(rule_json(w));
        json j{{"schema", kSchema},
               {"command", "bounds"},
               {"edges", graph.edge_count()},
               {"lower", lower.value},
               {"lower_rules", rules},
               {"upper", upper.value},
               {"upper_method", upper.method},
               {"certificate", json::parse(hydra::write_certificate(upper.certificate))}};
        if (presult) {
            j["p"] = presult->value;
            j["p_exact"] = presult->exact;
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << lower.value << " <= h <= " << upper.value << "  (|E| = "
                  << graph.edge_count() << ", upper via " << upper.method << ")\n";
        for (const auto& w : lower.fired) {
            std::cout << "  lower rule " << rule_json(w)["rule"].get<std::string>() << " -> "
                      << w.value << "\n";
        }
        if (presult) {
            std::cout << "  p = " << presult->value
                      << (presult->exact ? " (exact)" : " (upper bound)") << "\n";
        }
    }
    return 0;
}

int cmd_construct(const GlobalOpts& g, const std::string& graph_path,
                  const std::string& method, const std::string& out_path) {
    auto graph = hydra::normalize(load_graph(graph_path)).graph;
    std::optional<hydra::DirectedHypergraph> cert;
    std::string how = method;
    if (method == "auto") {
        auto ub = hydra::upper_bound(graph);
        cert = ub.certificate;
        how = ub.method;
    } else if (method == "path-cover") {
        hydra::POptions popts;
        if (graph.edge_count() <= popts.edge_cap) {
            auto pr = hydra::p_of(graph, hydra::PStrategy::Exhaustive, popts);
            cert = hydra::extend_spanning(
                hydra::build_from_path_cover(pr.subgraph, pr.cover), pr.subgraph, graph);
        } else if (graph.is_tree() && graph.edge_count() <= 16) {
            auto pr = hydra::p_of(graph, hydra::PStrategy::Tree, popts);
            cert = hydra::build_from_path_cover(graph, pr.cover);
        } else {
            // large general graph: cover L(G) directly (possibly non-minimum)
            auto pc = hydra::min_path_cover(hydra::line_graph(graph), 16, false);
            cert = hydra::build_from_path_cover(graph, pc.cover);
        }
    } else if (method == "line-ham") {
        auto found = hydra::line_ham_spanning_subgraph(graph);
        if (found) {
            cert = hydra::extend_spanning(
                hydra::build_from_line_cycle(found->first, found->second), found->first,
                graph);
        }
    } else {
        throw CLI::ValidationError("unknown --method: " + method);
    }

    if (!cert) {
        if (g.json) {
            std::cout << json{{"schema", kSchema},
                              {"command", "construct"},
                              {"found", false}}
                             .dump()
                      << "\n";
        } else {
            std::cout << "not-found\n";
        }
        return 1;
    }
    // self-check is wired in: never emit an unverified certificate
    if (!hydra::represents(*cert, graph).ok) {
        std::cerr << "internal error: construction failed verification\n";
        return 1;
    }
    if (g.json) {
        std::cout << json{{"schema", kSchema},
                          {"command", "construct"},
                          {"found", true},
                          {"method", how},
                          {"arcs", cert->size()},
                          {"certificate", json::parse(hydra::write_certificate(*cert))}}
                         .dump()
                  << "\n";
    } else {
        emit_certificate(*cert, out_path);
    }
    return 0;
}

int cmd_family(const GlobalOpts& g, const std::string& kind,
               const std::vector<int>& params) {
    static const std::map<std::string, hydra::FamilyKind> kinds = {
        {"star", hydra::FamilyKind::Star},
        {"path", hydra::FamilyKind::Path},
        {"cycle", hydra::FamilyKind::Cycle},
        {"matching", hydra::FamilyKind::Matching},
        {"caterpillar", hydra::FamilyKind::Caterpillar},
        {"spider", hydra::FamilyKind::Spider},
        {"tk", hydra::FamilyKind::Tk},
        {"binary-tree", hydra::FamilyKind::BinaryTree},
        {"gk", hydra::FamilyKind::Gk},
        {"turan", hydra::FamilyKind::Turan},
        {"forbidden-caterpillar", hydra::FamilyKind::ForbiddenCaterpillarSubgraph},
    };
    auto it = kinds.find(kind);
    if (it == kinds.end()) throw CLI::ValidationError("unknown family kind: " + kind);
    auto graph = hydra::generate({it->second, params});
    if (g.json) {
        json edges = json::array();
        for (const auto& e : graph.edges()) edges.push_back({e.u, e.v});
        std::cout << json{{"schema", kSchema},
                          {"command", "family"},
                          {"kind", kind},
                          {"n", graph.n()},
                          {"edges", edges}}
                         .dump()
                  << "\n";
    } else {
        std::cout << hydra::write_graph(graph);
    }
    return 0;
}

int cmd_fkn(const GlobalOpts& g, int n, int k, bool exact) {
    auto report = hydra::fkn_report(n, k, exact);
    auto check = hydra::verify_k_closure(report.construction, k);
    if (!check.ok) {
        std::cerr << "internal error: construction failed k-closure verification\n";
        return 1;
    }
    if (g.json) {
        json j{{"schema", kSchema},
               {"command", "fkn"},
               {"n", n},
               {"k", k},
               {"lower", report.lower},
               {"upper", report.upper},
               {"construction_arcs", report.construction.size()},
               {"construction", json::parse(hydra::write_certificate(report.construction))},
               {"verified", true}};
        if (report.exact) j["exact"] = *report.exact;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "f(" << n << "," << k << "): " << report.lower
                  << " <= f <= " << report.upper << "; construction has "
                  << report.construction.size() << " arcs (verified)";
        if (report.exact) std::cout << "; exact " << *report.exact;
        std::cout << "\n" << hydra::write_certificate(report.construction) << "\n";
    }
    return 0;
}

int cmd_horn(const GlobalOpts& g, const std::string& action, const std::string& path) {
    auto formula = hydra::parse_horn(slurp(path));
    if (action == "check") {
        bool hydra_formula = false;
        std::string note;
        try {
            hydra_formula = hydra::is_hydra(formula);
        } catch (const std::invalid_argument& e) {
            note = e.what();
        }
        if (g.json) {
            std::cout << json{{"schema", kSchema},
                              {"command", "horn-check"},
                              {"variables", formula.variable_count()},
                              {"clauses", formula.size()},
                              {"hydra", hydra_formula},
                              {"note", note}}
                             .dump()
                      << "\n";
        } else {
            std::cout << "variables: " << formula.variable_count()
                      << ", clauses: " << formula.size() << ", hydra: "
                      << (hydra_formula ? "true" : "false") << "\n";
            if (!note.empty()) std::cout << "  " << note << "\n";
        }
        return hydra_formula ? 0 : 1;
    }

    hydra::SolverOptions opts;
    opts.threads = g.threads;
    auto result = hydra::minimize_hydra(formula, opts);
    if (g.json) {
        std::cout << json{{"schema", kSchema},
                          {"command", "horn-minimize"},
                          {"input_clauses", formula.size()},
                          {"output_clauses", result.formula.size()},
                          {"optimal", result.optimal},
                          {"lower", result.lower},
                          {"upper", result.upper},
                          {"formula", hydra::format_horn(result.formula)}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "# " << formula.size() << " -> " << result.formula.size()
                  << " clauses" << (result.optimal ? " (minimum)" : " (upper bound)")
                  << "\n"
                  << hydra::format_horn(result.formula);
    }
    return result.optimal ? 0 : 3;
}

int cmd_experiment_edge_add(const GlobalOpts& g, const std::string& graph_path, int limit) {
    auto graph = hydra::normalize(load_graph(graph_path)).graph;
    hydra::SolverOptions opts;
    opts.threads = g.threads;
    auto base = hydra::hydra_number(graph, opts);
    if (!base.exact) {
        std::cerr << "resource cap while solving the base graph\n";
        return 3;
    }
    std::vector<hydra::Edge> non_edges;
    for (int u = 0; u < graph.n(); ++u)
        for (int v = u + 1; v < graph.n(); ++v)
            if (!graph.has_edge(u, v)) non_edges.emplace_back(u, v);
    if (limit > 0 && static_cast<int>(non_edges.size()) > limit) {
        std::mt19937 rng(g.seed);
        std::shuffle(non_edges.begin(), non_edges.end(), rng);
        non_edges.resize(limit);
        std::sort(non_edges.begin(), non_edges.end());
    }
    json rows = json::array();
    int min_delta = std::numeric_limits<int>::max();
    for (const auto& e : non_edges) {
        std::vector<hydra::Edge> edges(graph.edges().begin(), graph.edges().end());
        edges.push_back(e);
        auto added = hydra::hydra_number(hydra::Graph(graph.n(), std::move(edges)), opts);
        if (!added.exact) {
            std::cerr << "resource cap while solving an augmented graph\n";
            return 3;
        }
        int delta = added.value - base.value;
        min_delta = std::min(min_delta, delta);
        rows.push_back({{"edge", {e.u, e.v}}, {"h", added.value}, {"delta", delta}});
        if (!g.json) {
            std::cout << "+(" << e.u << "," << e.v << "): h = " << added.value
                      << " (delta " << (delta >= 0 ? "+" : "") << delta << ")\n";
        }
    }
    bool decrease = !non_edges.empty() && min_delta < 0;
    if (g.json) {
        std::cout << json{{"schema", kSchema},
                          {"command", "experiment-edge-add"},
                          {"h", base.value},
                          {"rows", rows},
                          {"any_decrease", decrease}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "h(G) = " << base.value << "; "
                  << (decrease ? "some edge DECREASES the hydra number"
                               : "no tested edge decreases the hydra number")
                  << "\n";
    }
    return 0;
}

int cmd_experiment_components(const GlobalOpts& g, const std::string& graph_path) {
    auto graph = hydra::normalize(load_graph(graph_path)).graph;
    auto comp = graph.component_ids();
    int k = graph.component_count();
    if (k < 2) {
        throw CLI::ValidationError("experiment components needs a disconnected graph");
    }
    hydra::SolverOptions opts;
    opts.threads = g.threads;

    int sum = 0, single = 0;
    json parts = json::array();
    for (int c = 0; c < k; ++c) {
        std::vector<hydra::Vertex> verts;
        for (int v = 0; v < graph.n(); ++v)
            if (comp[v] == c) verts.push_back(v);
        auto [sub, ids] = graph.induced(verts);
        if (sub.n() < 3) {
            throw CLI::ValidationError(
                "experiment components needs every component to have >= 3 vertices");
        }
        auto r = hydra::hydra_number(sub, opts);
        if (!r.exact) {
            std::cerr << "resource cap while solving a component\n";
            return 3;
        }
        bool sh = r.value == sub.edge_count();
        if (sh) ++single;
        sum += r.value;
        parts.push_back({{"vertices", sub.n()}, {"h", r.value}, {"single_headed", sh}});
    }
    auto whole = hydra::hydra_number(graph, opts);
    if (!whole.exact) {
        std::cerr << "resource cap while solving the whole graph\n";
        return 3;
    }
    int conjecture = sum + single;
    if (g.json) {
        std::cout << json{{"schema", kSchema},
                          {"command", "experiment-components"},
                          {"h", whole.value},
                          {"components", parts},
                          {"sum_h", sum},
                          {"single_headed_components", single},
                          {"sum_plus_s", conjecture},
                          {"equal", whole.value == conjecture}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "h(G) = " << whole.value << ", sum h(G_i) + s = " << sum << " + "
                  << single << " = " << conjecture
                  << (whole.value == conjecture ? " (equal)" : " (DIFFERENT)") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hydra numbers of graphs: exact values, bounds, certificates"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_flag("--json", g.json, "structured output");
    app.add_option("--threads", g.threads, "solver worker threads")
        ->envname("HYDRALAB_THREADS");
    app.add_option("--seed", g.seed, "seed for sampled experiment corpora");

    std::string cert_path, graph_path, vertex_list, out_path;
    std::string strategy = "auto", method = "auto", horn_action;
    int edge_cap = 0, fkn_n = 0, fkn_k = 0, limit = 0;
    bool fkn_exact = false;
    std::string family_kind;
    std::vector<int> family_params;
    ExactArgs exact_args;

    auto* closure = app.add_subcommand("closure", "forward-chaining closure of a vertex set");
    closure->add_option("hypergraph", cert_path)->required();
    closure->add_option("vertices", vertex_list, "comma-separated seed vertices")->required();

    auto* verify = app.add_subcommand("verify", "check that a certificate represents a graph");
    verify->add_option("hypergraph", cert_path)->required();
    verify->add_option("graph", graph_path)->required();

    auto* exact = app.add_subcommand("exact", "exact hydra number with certificate");
    exact->add_option("graph", exact_args.graph_path)->required();
    exact->add_flag("--single-headed", exact_args.single_headed, "excess-0 decision only");
    exact->add_flag("--all-optima", exact_args.all_optima, "enumerate every optimum");
    exact->add_option("--caps", exact_args.caps, "per-vertex head caps, vertex=cap");
    exact->add_option("--limit-nodes", exact_args.limit_nodes, "search node budget");
    exact->add_option("--limit-secs", exact_args.limit_secs, "search time budget");
    exact->add_option("--out", exact_args.out_path, "write certificate JSON here");

    auto* bounds = app.add_subcommand("bounds", "lower/upper bounds with witnesses");
    bounds->add_option("graph", graph_path)->required();
    bounds->add_option("--p-strategy", strategy, "auto|exhaustive|tree|binary-4level");
    bounds->add_option("--edge-cap", edge_cap, "raise the exhaustive strategy edge cap");

    auto* construct = app.add_subcommand("construct", "emit a verified certificate");
    construct->add_option("graph", graph_path)->required();
    construct->add_option("--method", method, "path-cover|line-ham|auto");
    construct->add_option("--out", out_path, "write certificate JSON here");

    auto* family = app.add_subcommand("family", "generate a named graph family");
    family->add_option("kind", family_kind)->required();
    family->add_option("params", family_params);

    auto* fkn = app.add_subcommand("fkn", "k-closure minimization report f(n,k)");
    fkn->add_option("n", fkn_n)->required();
    fkn->add_option("k", fkn_k)->required();
    fkn->add_flag("--exact", fkn_exact, "run the exact oracle (n <= 6)");

    auto* horn = app.add_subcommand("horn", "hydra formula tools");
    horn->add_option("action", horn_action, "minimize|check")->required();
    horn->add_option("file", cert_path)->required();

    auto* experiment = app.add_subcommand("experiment", "drivers for the open questions");
    std::string exp_kind;
    experiment->add_option("kind", exp_kind, "edge-add|components")->required();
    experiment->add_option("graph", graph_path)->required();
    experiment->add_option("--limit", limit, "sample at most this many non-edges");

    // let global flags (--json, --threads, --seed) appear after the subcommand
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (closure->parsed()) return cmd_closure(g, cert_path, vertex_list);
        if (verify->parsed()) return cmd_verify(g, cert_path, graph_path);
        if (exact->parsed()) return cmd_exact(g, exact_args);
        if (bounds->parsed()) return cmd_bounds(g, graph_path, strategy, edge_cap);
        if (construct->parsed()) return cmd_construct(g, graph_path, method, out_path);
        if (family->parsed()) return cmd_family(g, family_kind, family_params);
        if (fkn->parsed()) return cmd_fkn(g, fkn_n, fkn_k, fkn_exact);
        if (horn->parsed()) {
            if (horn_action != "minimize" && horn_action != "check") {
                throw CLI::ValidationError("horn action must be minimize or check");
            }
            return cmd_horn(g, horn_action, cert_path);
        }
        if (experiment->parsed()) {
            if (exp_kind == "edge-add") return cmd_experiment_edge_add(g, graph_path, limit);
            if (exp_kind == "components") return cmd_experiment_components(g, graph_path);
            throw CLI::ValidationError("experiment kind must be edge-add or components");
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const hydra::CapExceeded& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const hydra::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
