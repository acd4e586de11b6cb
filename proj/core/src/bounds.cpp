#include "hydra/bounds.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hydra/line_graph.hpp"
#include "hydra/represent.hpp"

namespace hydra {

namespace {

void require_hydra_instance(const Graph& g, const char* what) {
    if (g.n() < 3) {
        throw std::invalid_argument(std::string(what) +
                                    ": hydra-number bounds need n >= 3 (got n=" +
                                    std::to_string(g.n()) +
                                    "); normalize() the graph first");
    }
    if (g.has_isolated_vertex()) {
        throw std::invalid_argument(std::string(what) +
                                    ": graph has isolated vertices; normalize() first");
    }
}

}  // namespace

int ell(const Graph& g) {
    auto [core, ids] = g.minus_degree_one();
    int count = 0;
    for (int v = 0; v < core.n(); ++v)
        if (core.degree(v) == 1) ++count;
    return count;
}

TrivialBounds trivial_bounds(const Graph& g) {
    require_hydra_instance(g, "trivial_bounds");
    const int m = g.edge_count();
    if (m == 0) throw std::invalid_argument("trivial_bounds: graph has no edges");

    bool matching = true;
    for (int v = 0; v < g.n() && matching; ++v)
        if (g.degree(v) > 1) matching = false;

    // Ordered-edge construction: each edge points at the endpoints of the next
    // edge in a cyclic order.  For a non-matching, start the order with an
    // adjacent pair so the first edge needs only one head.
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    if (!matching) {
        int a = -1, b = -1;
        for (int i = 0; i < m && a < 0; ++i) {
            for (int j = i + 1; j < m && a < 0; ++j) {
                const Edge&e = g.edge(i), &f = g.edge(j);
                if (f.contains(e.u) || f.contains(e.v)) {
                    a = i;
                    b = j;
                }
            }
        }
        order.clear();
        order.push_back(a);
        order.push_back(b);
        for (int i = 0; i < m; ++i)
            if (i != a && i != b) order.push_back(i);
    }
    std::vector<Hyperarc> arcs;
    for (int i = 0; i < m; ++i) {
        const Edge& body = g.edge(order[i]);
        const Edge& next = g.edge(order[(i + 1) % m]);
        for (Vertex head : {next.u, next.v}) {
            if (!body.contains(head)) arcs.emplace_back(body.u, body.v, head);
        }
    }
    TrivialBounds tb;
    tb.lower = m;
    tb.upper = matching ? 2 * m : 2 * m - 1;
    tb.certificate = DirectedHypergraph(g.n(), std::move(arcs));
    return tb;
}

LowerBoundReport lower_bound(const Graph& g) {
    require_hydra_instance(g, "lower_bound");
    const int m = g.edge_count();
    LowerBoundReport report;
    report.fired.push_back({LowerRule::Trivial, m, {}});
    report.value = m;

    // cut edge with at least two vertices on each side
    auto comp_of = g.component_ids();
    for (const Edge& e : g.bridges()) {
        // side sizes in G - e, counted from e.u by BFS avoiding the bridge
        std::vector<char> seen(g.n(), 0);
        std::vector<Vertex> stack{e.u};
        seen[e.u] = 1;
        int side_u = 0;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            ++side_u;
            for (Vertex y : g.neighbors(x)) {
                if ((x == e.u && y == e.v) || (x == e.v && y == e.u)) continue;
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        int comp_size = 0;
        for (int v = 0; v < g.n(); ++v)
            if (comp_of[v] == comp_of[e.u]) ++comp_size;
        int side_v = comp_size - side_u;
        if (side_u >= 2 && side_v >= 2) {
            report.fired.push_back({LowerRule::Bridge, m + 1, {e.u, e.v}});
            report.value = std::max(report.value, m + 1);
            break;
        }
    }

    int k = g.component_count();
    if (k >= 2) {
        std::vector<int> sizes(k, 0);
        for (int v = 0; v < g.n(); ++v) ++sizes[comp_of[v]];
        report.fired.push_back({LowerRule::Components, m + k, sizes});
        report.value = std::max(report.value, m + k);
    }

    auto [core, ids] = g.minus_degree_one();
    std::vector<Vertex> leaves;
    for (int v = 0; v < core.n(); ++v)
        if (core.degree(v) == 1) leaves.push_back(ids[v]);
    int l = static_cast<int>(leaves.size());
    if (l > 1) {
        int val = m + (l + 1) / 2;
        report.fired.push_back({LowerRule::PendantEll, val, leaves});
        report.value = std::max(report.value, val);
    }
    return report;
}

// ---------------------------------------------------------------------------
// p(G): complete search over (spanning subgraph, path cover of its line
// graph) pairs.  A path cover of L(G') is the same thing as a set of
// edge-disjoint chains (sequences of distinct edges in which consecutive
// edges share an endpoint) partitioning E(G'); G' spanning with no isolated
// vertices means the chains together cover every vertex of G.  The search
// builds chains one at a time, each new chain required to cover the lowest
// currently uncovered vertex.
// ---------------------------------------------------------------------------

namespace {

struct ChainSearch {
    const Graph& g;
    long long node_cap;
    bool require_cycle;  // single chain whose ends share an endpoint

    long long nodes = 0;
    std::vector<std::vector<int>> incident;  // per vertex: edge ids, ascending
    std::vector<char> used;
    std::vector<int> covered;
    int uncovered;
    std::vector<std::vector<int>> done;  // completed chains
    std::vector<int> current;
    std::vector<std::vector<int>> solution;

    ChainSearch(const Graph& graph, long long cap, bool cycle)
        : g(graph), node_cap(cap), require_cycle(cycle) {
        incident.assign(g.n(), {});
        for (int i = 0; i < g.edge_count(); ++i) {
            incident[g.edge(i).u].push_back(i);
            incident[g.edge(i).v].push_back(i);
        }
        used.assign(g.edge_count(), 0);
        covered.assign(g.n(), 0);
        uncovered = g.n();
    }

    void take(int ei) {
        used[ei] = 1;
        for (Vertex x : {g.edge(ei).u, g.edge(ei).v})
            if (covered[x]++ == 0) --uncovered;
    }
    void drop(int ei) {
        used[ei] = 0;
        for (Vertex x : {g.edge(ei).u, g.edge(ei).v})
            if (--covered[x] == 0) ++uncovered;
    }

    bool share_endpoint(int a, int b) const {
        const Edge&e = g.edge(a), &f = g.edge(b);
        return f.contains(e.u) || f.contains(e.v);
    }

    void tick() {
        if (++nodes > node_cap)
            throw CapExceeded("p_of: chain-cover search exceeded its node budget");
    }

    // Chains still needed at least the number of unused-edge components that
    // contain an uncovered vertex (a chain's edges are connected in G).
    bool feasible(int chains_left) {
        if (uncovered == 0) return true;
        if (chains_left <= 0) return false;
        std::vector<char> seen(g.n(), 0);
        int needed = 0;
        for (int s = 0; s < g.n(); ++s) {
            if (seen[s] || covered[s] > 0) continue;
            bool has_edge = false;
            std::vector<Vertex> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                Vertex x = stack.back();
                stack.pop_back();
                for (int ei : incident[x]) {
                    if (used[ei]) continue;
                    has_edge = true;
                    Vertex y = g.edge(ei).other(x);
                    if (!seen[y]) {
                        seen[y] = 1;
                        stack.push_back(y);
                    }
                }
            }
            if (!has_edge) return false;  // stranded vertex
            ++needed;
        }
        return needed <= chains_left;
    }

    bool cover(int budget) {
        tick();
        if (uncovered == 0) {
            solution = done;
            return true;
        }
        if (budget == 0 || !feasible(budget)) return false;
        Vertex v0 = 0;
        while (covered[v0] > 0) ++v0;
        for (int seed : incident[v0]) {
            if (used[seed]) continue;
            take(seed);
            current.assign(1, seed);
            if (grow_right(budget, v0)) return true;
            drop(seed);
        }
        return false;
    }

    bool grow_right(int budget, Vertex v0) {
        tick();
        int end = current.back();
        for (Vertex x : {g.edge(end).u, g.edge(end).v}) {
            for (int f : incident[x]) {
                if (used[f]) continue;
                if (g.edge(f).contains(g.edge(end).u) && g.edge(f).contains(g.edge(end).v))
                    continue;  // simple graph: cannot happen
                take(f);
                current.push_back(f);
                if (grow_right(budget, v0)) return true;
                current.pop_back();
                drop(f);
            }
        }
        return require_cycle ? close_cycle() : grow_left(budget, v0);
    }

    // Left extensions never reuse the seed vertex (each chain is generated
    // from its first seed-vertex edge), which prunes duplicate orderings.
    bool grow_left(int budget, Vertex v0) {
        tick();
        int front = current.front();
        for (Vertex x : {g.edge(front).u, g.edge(front).v}) {
            for (int f : incident[x]) {
                if (used[f] || g.edge(f).contains(v0)) continue;
                take(f);
                current.insert(current.begin(), f);
                if (grow_left(budget, v0)) return true;
                current.erase(current.begin());
                drop(f);
            }
        }
        return finish_chain(budget, v0);
    }

    bool finish_chain(int budget, Vertex v0) {
        done.push_back(current);
        std::vector<int> saved;
        bool ok = cover(budget - 1);
        if (!ok) done.pop_back();
        return ok;
    }

    bool close_cycle() {
        if (uncovered != 0 || current.size() < 3) return false;
        if (!share_endpoint(current.front(), current.back())) return false;
        done.push_back(current);
        solution = done;
        return true;
    }
};

// NOTE: grow_right/grow_left above enumerate "extend" before "stop", so long
// chains are tried first; every stop point is still explored on backtrack,
// which keeps the search complete.

PResult chains_to_presult(const Graph& g, const std::vector<std::vector<int>>& chains) {
    std::vector<Edge> sub_edges;
    for (const auto& c : chains)
        for (int ei : c) sub_edges.push_back(g.edge(ei));
    Graph sub(g.n(), sub_edges);
    PathCover cover;
    for (const auto& c : chains) {
        std::vector<int> path;
        for (int ei : c) {
            const Edge& e = g.edge(ei);
            path.push_back(sub.edge_index(e.u, e.v));
        }
        cover.paths.push_back(std::move(path));
    }
    PResult r;
    r.value = static_cast<int>(chains.size());
    r.subgraph = std::move(sub);
    r.cover = std::move(cover);
    return r;
}

PResult p_exhaustive(const Graph& g, const POptions& opts) {
    if (g.edge_count() > opts.edge_cap) {
        throw CapExceeded("p_of: exhaustive strategy capped at " +
                          std::to_string(opts.edge_cap) + " edges (instance has " +
                          std::to_string(g.edge_count()) + ")");
    }
    for (int s = 1; s <= g.edge_count(); ++s) {
        ChainSearch search(g, opts.node_cap, false);
        if (search.cover(s)) {
            PResult r = chains_to_presult(g, search.solution);
            r.exact = true;
            return r;
        }
    }
    throw std::logic_error("p_of: no cover found");  // unreachable: singletons cover
}

bool binary_tree_shape(const Graph& g, int& depth) {
    int n = g.n();
    int d = 0;
    while ((1 << (d + 1)) - 1 < n) ++d;
    if ((1 << (d + 1)) - 1 != n || n < 3) return false;
    if (g.edge_count() != n - 1) return false;
    for (int i = 0; 2 * i + 2 < n; ++i) {
        if (!g.has_edge(i, 2 * i + 1) || !g.has_edge(i, 2 * i + 2)) return false;
    }
    depth = d;
    return true;
}

int heap_depth(int i) {
    int d = 0;
    while (i > 0) {
        i = (i - 1) / 2;
        ++d;
    }
    return d;
}

PResult p_binary_4level(const Graph& g, const POptions& opts) {
    int d = 0;
    if (!binary_tree_shape(g, d)) {
        throw std::invalid_argument("p_of: binary-4level strategy requires a heap-labeled "
                                    "complete binary tree");
    }
    std::optional<PResult> best;
    auto consider = [&](const std::vector<int>& delete_levels) {
        std::vector<Edge> kept;
        for (const Edge& e : g.edges()) {
            int level = std::max(heap_depth(e.u), heap_depth(e.v));
            if (std::find(delete_levels.begin(), delete_levels.end(), level) ==
                delete_levels.end())
                kept.push_back(e);
        }
        Graph sub(g.n(), kept);
        if (sub.has_isolated_vertex()) return;
        // cover each block (component) of the forest exactly
        auto comp = sub.component_ids();
        int ncomp = sub.component_count();
        PathCover cover;
        for (int c = 0; c < ncomp; ++c) {
            std::vector<Vertex> verts;
            for (int v = 0; v < g.n(); ++v)
                if (comp[v] == c) verts.push_back(v);
            auto [block, ids] = sub.induced(verts);
            if (block.edge_count() > 16) return;  // block too deep for exact pcn
            auto pc = min_path_cover(line_graph(block), 16, true);
            for (const auto& path : pc.cover.paths) {
                std::vector<int> mapped;
                for (int bi : path) {
                    const Edge& be = block.edge(bi);
                    mapped.push_back(sub.edge_index(ids[be.u], ids[be.v]));
                }
                cover.paths.push_back(std::move(mapped));
            }
        }
        PResult r;
        r.value = cover.size();
        r.exact = false;  // upper bound on p(G) only
        r.subgraph = std::move(sub);
        r.cover = std::move(cover);
        if (!best || r.value < best->value) best = std::move(r);
    };

    if (g.edge_count() <= 16) consider({});
    for (int r = 2; r <= std::min(4, d - 1); ++r) {
        std::vector<int> levels;
        for (int l = r; l <= d - 1; l += 4) levels.push_back(l);
        if (d - levels.back() > 3) continue;  // leftover block too deep
        consider(levels);
    }
    if (!best) {
        throw CapExceeded("p_of: no feasible four-level deletion for depth " +
                          std::to_string(d));
    }
    return *best;
}

}  // namespace

PResult p_of(const Graph& g, PStrategy strategy, const POptions& opts) {
    require_hydra_instance(g, "p_of");
    switch (strategy) {
        case PStrategy::Exhaustive:
            return p_exhaustive(g, opts);
        case PStrategy::Tree: {
            if (!g.is_tree()) throw std::invalid_argument("p_of: tree strategy on non-tree");
            if (g.edge_count() <= opts.edge_cap) return p_exhaustive(g, opts);
            if (g.edge_count() <= 16) {
                auto pc = min_path_cover(line_graph(g), 16, true);
                PResult r;
                r.value = pc.cover.size();
                r.exact = false;  // pcn(L(T)) upper-bounds p(T)
                r.subgraph = g;
                r.cover = pc.cover;
                return r;
            }
            throw CapExceeded("p_of: tree strategy capped at 16 edges");
        }
        case PStrategy::Binary4Level:
            return p_binary_4level(g, opts);
    }
    throw std::logic_error("p_of: unknown strategy");
}

std::optional<std::pair<Graph, std::vector<int>>> line_ham_spanning_subgraph(
    const Graph& g, const POptions& opts) {
    require_hydra_instance(g, "line_ham_spanning_subgraph");
    if (g.edge_count() > opts.edge_cap) {
        throw CapExceeded("line_ham_spanning_subgraph: capped at " +
                          std::to_string(opts.edge_cap) + " edges");
    }
    ChainSearch search(g, opts.node_cap, true);
    if (!search.cover(1)) return std::nullopt;
    const auto& cycle = search.solution.front();
    std::vector<Edge> sub_edges;
    for (int ei : cycle) sub_edges.push_back(g.edge(ei));
    Graph sub(g.n(), sub_edges);
    std::vector<int> mapped;
    for (int ei : cycle) {
        const Edge& e = g.edge(ei);
        mapped.push_back(sub.edge_index(e.u, e.v));
    }
    return std::make_pair(std::move(sub), std::move(mapped));
}

// ---------------------------------------------------------------------------
// constructions
// ---------------------------------------------------------------------------

namespace {

// Head candidates for the arcs that ignite `path`: the endpoints of its first
// edge, then the remaining path vertices in order, then every vertex.  The
// caller takes the first two not lying in the arc body; skipped body vertices
// are already marked, so igniting the survivors still fires the whole chain.
std::vector<Vertex> ignition_candidates(const Graph& gp, const std::vector<int>& path) {
    std::vector<Vertex> out;
    for (int ei : path) {
        out.push_back(gp.edge(ei).u);
        out.push_back(gp.edge(ei).v);
    }
    for (int v = 0; v < gp.n(); ++v) out.push_back(v);
    return out;
}

}  // namespace

DirectedHypergraph build_from_path_cover(const Graph& gprime, const PathCover& cover) {
    if (gprime.has_isolated_vertex()) {
        throw std::invalid_argument("build_from_path_cover: subgraph has isolated vertices");
    }
    if (!is_valid_path_cover(line_graph(gprime), cover)) {
        throw std::invalid_argument("build_from_path_cover: invalid path cover of L(G')");
    }
    const int k = cover.size();
    std::vector<Hyperarc> arcs;
    // chain arcs along each path
    for (const auto& path : cover.paths) {
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            const Edge&e = gprime.edge(path[i]), &f = gprime.edge(path[i + 1]);
            Vertex shared = f.contains(e.u) ? e.u : e.v;
            arcs.emplace_back(e.u, e.v, f.other(shared));
        }
    }
    // wrap-around (k == 1) or cyclic linking arcs (k > 1)
    for (int i = 0; i < k; ++i) {
        const auto& path = cover.paths[i];
        const auto& target = cover.paths[(i + 1) % k];
        const Edge& body = gprime.edge(path.back());
        int emitted = 0;
        for (Vertex h : ignition_candidates(gprime, target)) {
            if (body.contains(h)) continue;
            Hyperarc a(body.u, body.v, h);
            if (std::find(arcs.begin(), arcs.end(), a) != arcs.end()) continue;
            arcs.push_back(a);
            if (++emitted == 2) break;
        }
    }
    return DirectedHypergraph(gprime.n(), std::move(arcs));
}

DirectedHypergraph build_from_line_cycle(const Graph& gprime,
                                         const std::vector<int>& edge_cycle) {
    const int m = gprime.edge_count();
    if (static_cast<int>(edge_cycle.size()) != m || m < 3) {
        throw std::invalid_argument("build_from_line_cycle: cycle must visit every edge");
    }
    std::vector<char> seen(m, 0);
    for (int ei : edge_cycle) {
        if (ei < 0 || ei >= m || seen[ei])
            throw std::invalid_argument("build_from_line_cycle: not a permutation of edges");
        seen[ei] = 1;
    }
    std::vector<Hyperarc> arcs;
    for (int i = 0; i < m; ++i) {
        const Edge&e = gprime.edge(edge_cycle[i]), &f = gprime.edge(edge_cycle[(i + 1) % m]);
        Vertex shared;
        if (f.contains(e.u))
            shared = e.u;
        else if (f.contains(e.v))
            shared = e.v;
        else
            throw std::invalid_argument(
                "build_from_line_cycle: consecutive edges do not share an endpoint");
        arcs.emplace_back(e.u, e.v, f.other(shared));
    }
    return DirectedHypergraph(gprime.n(), std::move(arcs));
}

std::optional<DirectedHypergraph> build_from_line_ham_cycle(const Graph& gprime,
                                                            const POptions& opts) {
    if (gprime.has_isolated_vertex()) {
        throw std::invalid_argument("build_from_line_ham_cycle: isolated vertices");
    }
    if (gprime.edge_count() > opts.ham_cap) {
        throw CapExceeded("build_from_line_ham_cycle: capped at " +
                          std::to_string(opts.ham_cap) + " edges");
    }
    if (gprime.edge_count() < 3) return std::nullopt;
    auto cyc = hamiltonian_cycle(line_graph(gprime));
    if (!cyc) return std::nullopt;
    return build_from_line_cycle(gprime, *cyc);
}

DirectedHypergraph extend_spanning(const DirectedHypergraph& hprime, const Graph& gprime,
                                   const Graph& g) {
    if (gprime.n() != g.n() || hprime.n() != g.n()) {
        throw std::invalid_argument("extend_spanning: vertex count mismatch");
    }
    if (gprime.has_isolated_vertex() || g.has_isolated_vertex()) {
        throw std::invalid_argument("extend_spanning: isolated vertices");
    }
    std::vector<Hyperarc> extra;
    for (const Edge& e : g.edges()) {
        if (gprime.has_edge(e.u, e.v)) continue;
        if (!g.has_edge(e.u, e.v)) continue;
        Vertex w = gprime.neighbors(e.v).front();  // smallest-index G'-neighbor
        extra.emplace_back(e.u, e.v, w);
    }
    for (const Edge& e : gprime.edges()) {
        if (!g.has_edge(e.u, e.v)) {
            throw std::invalid_argument("extend_spanning: G' is not a subgraph of G");
        }
    }
    return hprime.merged(extra);
}

ExtendedGraph extend_with_new_vertex(const DirectedHypergraph& h, const Graph& g,
                                     Vertex u, Vertex v) {
    if (!g.is_connected()) {
        throw std::invalid_argument("extend_with_new_vertex: graph must be connected");
    }
    if (u == v || u < 0 || v < 0 || u >= g.n() || v >= g.n() || g.has_edge(u, v)) {
        throw std::invalid_argument("extend_with_new_vertex: (u,v) must be a non-edge");
    }
    if (h.size() != g.edge_count()) {
        throw std::invalid_argument("extend_with_new_vertex: certificate is not single-headed");
    }
    if (!represents(h, g).ok) {
        throw std::invalid_argument("extend_with_new_vertex: certificate does not represent G");
    }
    Vertex w = g.n();
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    edges.emplace_back(u, v);
    edges.emplace_back(v, w);
    Graph ghat(g.n() + 1, std::move(edges));
    Vertex z = g.neighbors(v).front();
    DirectedHypergraph hhat =
        h.widened(g.n() + 1).merged({Hyperarc(u, v, w), Hyperarc(v, w, z)});
    return {std::move(hhat), std::move(ghat), w};
}

UpperBound upper_bound(const Graph& g, const POptions& opts) {
    require_hydra_instance(g, "upper_bound");
    const int m = g.edge_count();
    std::optional<UpperBound> best;
    auto consider = [&](int value, DirectedHypergraph cert, const std::string& method) {
        if (best && best->value <= value) return;
        best = UpperBound{value, std::move(cert), method};
    };

    TrivialBounds tb = trivial_bounds(g);
    consider(tb.upper, tb.certificate, "trivial");

    if (m <= opts.edge_cap) {
        if (auto ham = line_ham_spanning_subgraph(g, opts)) {
            auto cert = extend_spanning(build_from_line_cycle(ham->first, ham->second),
                                        ham->first, g);
            consider(m, std::move(cert), "line-hamiltonian");
        }
        if (!best || best->value > m) {
            PResult pr = p_of(g, PStrategy::Exhaustive, opts);
            auto cert =
                extend_spanning(build_from_path_cover(pr.subgraph, pr.cover), pr.subgraph, g);
            consider(m + pr.value, std::move(cert), "path-cover");
        }
    } else {
        int depth = 0;
        if (binary_tree_shape(g, depth)) {
            PResult pr = p_of(g, PStrategy::Binary4Level, opts);
            auto cert =
                extend_spanning(build_from_path_cover(pr.subgraph, pr.cover), pr.subgraph, g);
            consider(m + pr.value, std::move(cert), "binary-4level");
        } else if (g.is_tree() && m <= 16) {
            PResult pr = p_of(g, PStrategy::Tree, opts);
            auto cert = build_from_path_cover(g, pr.cover);
            consider(m + pr.value, std::move(cert), "tree-pcn");
        } else {
            if (m <= opts.ham_cap) {
                if (auto cert = build_from_line_ham_cycle(g, opts)) {
                    consider(m, std::move(*cert), "line-hamiltonian");
                }
            }
            auto pc = min_path_cover(line_graph(g), 16, false);
            auto cert = build_from_path_cover(g, pc.cover);
            consider(m + pc.cover.size(), std::move(cert),
                     pc.optimal ? "pcn" : "greedy-cover");
        }
    }

    if (!represents(best->certificate, g).ok) {
        throw std::logic_error("upper_bound: internal construction failed verification");
    }
    return *best;
}

BoundReport bounds_report(const Graph& g, const POptions& opts) {
    return {lower_bound(g), upper_bound(g, opts)};
}

}  // namespace hydra
