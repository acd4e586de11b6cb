#include "hydra/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <future>
#include <limits>
#include <stdexcept>

#include "hydra/bounds.hpp"
#include "hydra/represent.hpp"

namespace hydra {

namespace {

using Clock = std::chrono::steady_clock;

struct Shared {
    std::atomic<long long> nodes{0};
    std::atomic<bool> found{false};
    long long node_limit;
    Clock::time_point deadline;
};

struct Interrupted {};  // node/time budget exhausted mid-level

// One branch-and-bound worker.  All candidate orders are ascending, so with a
// single worker the first solution is the canonical (lexicographically least)
// optimum.
struct Worker {
    const Graph& g;
    const SolverOptions& opts;
    Shared& shared;

    int n, m;
    uint64_t full;
    std::vector<uint64_t> body_mask;      // per edge
    std::vector<uint64_t> neighbor_mask;  // per edge: N(u) | N(v) minus the body
    std::vector<std::vector<Vertex>> candidates;  // per edge, ascending

    // assignment state
    std::vector<std::vector<Vertex>> heads;  // per edge
    std::vector<int> head_budget;            // remaining per-vertex head cap
    std::vector<char> settled;               // edge closure reached V with real arcs
    SolveStats stats;

    bool enumerate_all = false;
    std::vector<DirectedHypergraph> solutions;

    Worker(const Graph& graph, const SolverOptions& o, Shared& s)
        : g(graph), opts(o), shared(s) {
        n = g.n();
        m = g.edge_count();
        full = (n == 64) ? ~0ull : ((1ull << n) - 1);
        body_mask.resize(m);
        neighbor_mask.resize(m);
        candidates.resize(m);
        for (int i = 0; i < m; ++i) {
            const Edge& e = g.edge(i);
            body_mask[i] = (1ull << e.u) | (1ull << e.v);
            uint64_t nb = 0;
            for (Vertex x : g.neighbors(e.u)) nb |= 1ull << x;
            for (Vertex x : g.neighbors(e.v)) nb |= 1ull << x;
            neighbor_mask[i] = nb & ~body_mask[i];
            for (Vertex v = 0; v < n; ++v)
                if (!e.contains(v)) candidates[i].push_back(v);
        }
        heads.assign(m, {});
        head_budget.assign(n, std::numeric_limits<int>::max());
        for (auto [v, cap] : opts.head_caps) {
            if (v < 0 || v >= n) throw std::invalid_argument("head cap on unknown vertex");
            if (cap < 0) throw std::invalid_argument("negative head cap");
            head_budget[v] = cap;
        }
        settled.assign(m, 0);
        enumerate_all = opts.enumerate_all;
    }

    void tick() {
        long long seen = shared.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        ++stats.nodes;
        if (seen > shared.node_limit) throw Interrupted{};
        if ((seen & 0xfff) == 0 && Clock::now() > shared.deadline) throw Interrupted{};
        if (!enumerate_all && shared.found.load(std::memory_order_relaxed)) throw Interrupted{};
    }

    // Closure of `start` under the arcs assigned to edges [0, assigned), with
    // every unassigned edge treated as a wildcard that can reach everything.
    // Returns full on wildcard contact.
    uint64_t optimistic_closure(uint64_t start, int assigned) {
        uint64_t cl = start;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int a = 0; a < assigned; ++a) {
                if ((cl & body_mask[a]) != body_mask[a]) continue;
                for (Vertex h : heads[a]) {
                    uint64_t bit = 1ull << h;
                    if (!(cl & bit)) {
                        cl |= bit;
                        changed = true;
                    }
                }
            }
            for (int b = assigned; b < m; ++b) {
                if ((cl & body_mask[b]) == body_mask[b]) return full;
            }
        }
        return cl;
    }

    // After assigning edge `i`, every already-assigned edge must still be able
    // to reach V.  Edges whose closure is full under real arcs alone never
    // need rechecking deeper in this branch.
    bool prefix_feasible(int i, std::vector<int>& newly_settled) {
        for (int j = 0; j <= i; ++j) {
            if (settled[j]) continue;
            uint64_t cl = optimistic_closure(body_mask[j], i + 1);
            if (cl != full) {
                ++stats.pruned_stuck_closure;
                return false;
            }
            // re-run without the wildcard shortcut to see if j is settled
            uint64_t real = body_mask[j];
            bool changed = true;
            while (changed) {
                changed = false;
                for (int a = 0; a <= i; ++a) {
                    if ((real & body_mask[a]) != body_mask[a]) continue;
                    for (Vertex h : heads[a]) {
                        uint64_t bit = 1ull << h;
                        if (!(real & bit)) {
                            real |= bit;
                            changed = true;
                        }
                    }
                }
            }
            if (real == full) {
                settled[j] = 1;
                newly_settled.push_back(j);
            }
        }
        return true;
    }

    void record_solution() {
        std::vector<Hyperarc> arcs;
        for (int i = 0; i < m; ++i) {
            const Edge& e = g.edge(i);
            for (Vertex h : heads[i]) arcs.emplace_back(e.u, e.v, h);
        }
        solutions.emplace_back(n, std::move(arcs));
    }

    /// Assign heads to edges i.. with exactly `budget` arcs remaining.
    bool dfs(int i, int budget) {
        tick();
        if (i == m) {
            if (budget != 0) return false;
            // prefix_feasible at depth m-1 had no wildcards left, so the
            // assignment is already verified.
            record_solution();
            if (!enumerate_all) shared.found.store(true, std::memory_order_relaxed);
            return !enumerate_all;
        }
        int open = m - i - 1;
        int smax = std::min<int>(budget - open, static_cast<int>(candidates[i].size()));
        if (smax < 1) {
            ++stats.pruned_budget;
            return false;
        }
        std::vector<int> combo;
        for (int s = 1; s <= smax; ++s) {
            combo.assign(s, 0);
            if (enumerate_combo(i, budget, s, 0, 0, combo)) return true;
        }
        return false;
    }

    bool enumerate_combo(int i, int budget, int s, int depth, int from,
                         std::vector<int>& combo) {
        if (depth == s) {
            return try_assignment(i, budget, s, combo);
        }
        const auto& cand = candidates[i];
        for (int idx = from; idx < static_cast<int>(cand.size()); ++idx) {
            Vertex v = cand[idx];
            if (head_budget[v] == 0) continue;
            if (s == 1 && n >= 4 && !(neighbor_mask[i] >> v & 1)) {
                // a single-headed body's head must neighbor the body
                ++stats.pruned_neighbor_rule;
                continue;
            }
            combo[depth] = idx;
            --head_budget[v];
            bool done = enumerate_combo(i, budget, s, depth + 1, idx + 1, combo);
            ++head_budget[v];
            if (done) return true;
        }
        return false;
    }

    bool try_assignment(int i, int budget, int s, const std::vector<int>& combo) {
        heads[i].clear();
        for (int idx : combo) heads[i].push_back(candidates[i][idx]);
        std::vector<int> newly_settled;
        bool ok = false;
        if (prefix_feasible(i, newly_settled)) {
            ok = dfs(i + 1, budget - s);
        }
        for (int j : newly_settled) settled[j] = 0;
        heads[i].clear();
        return ok;
    }
};

int deepening_ceiling(const Graph& g, const SolverOptions& opts) {
    const int m = g.edge_count();
    bool matching = true;
    for (int v = 0; v < g.n() && matching; ++v)
        if (g.degree(v) > 1) matching = false;
    int ceiling = matching ? 2 * m : 2 * m - 1;
    // Head caps invalidate the trivial 2|E|-1 construction; search the full
    // 2|E| range before reporting no-solution-within-2|E|.
    if (!opts.head_caps.empty()) ceiling = 2 * m;
    if (opts.max_excess) ceiling = std::min(ceiling, m + *opts.max_excess);
    return ceiling;
}

void validate_options(const SolverOptions& opts) {
    if (opts.node_limit <= 0) throw std::invalid_argument("node_limit must be positive");
    if (opts.threads < 1) throw std::invalid_argument("threads must be >= 1");
}

void validate_instance(const Graph& g) {
    if (g.n() < 3) {
        throw std::invalid_argument(
            "hydra_number: needs n >= 3; hydra numbers degenerate below three "
            "vertices (normalize() the graph and check first)");
    }
    if (g.has_isolated_vertex()) {
        throw std::invalid_argument("hydra_number: graph must be normalized (isolated "
                                    "vertices present)");
    }
    if (g.edge_count() < 1) throw std::invalid_argument("hydra_number: graph has no edges");
    if (g.n() > 63) throw std::invalid_argument("hydra_number: supports n <= 63");
}

// Run one deepening level, possibly splitting the first edge's head choices
// across threads.  Returns solutions found at this level (canonical-least
// first in single-threaded mode).
struct LevelOutcome {
    std::vector<DirectedHypergraph> solutions;
    bool interrupted = false;
};

LevelOutcome run_level(const Graph& g, const SolverOptions& opts, Shared& shared, int t,
                       SolveStats& stats) {
    LevelOutcome out;
    int threads = std::max(1, opts.threads);
    if (threads == 1 || opts.enumerate_all || g.edge_count() == 0) {
        Worker w(g, opts, shared);
        try {
            w.dfs(0, t);
        } catch (const Interrupted&) {
            out.interrupted = true;
        }
        out.solutions = std::move(w.solutions);
        stats.nodes += w.stats.nodes;
        stats.pruned_neighbor_rule += w.stats.pruned_neighbor_rule;
        stats.pruned_stuck_closure += w.stats.pruned_stuck_closure;
        stats.pruned_budget += w.stats.pruned_budget;
        return out;
    }

    // Parallel mode: enumerate the first edge's head sets, then fan the
    // resulting subtrees out over a small task pool.
    struct Job {
        std::vector<Vertex> first_heads;
    };
    std::vector<Job> jobs;
    {
        Worker probe(g, opts, shared);
        const auto& cand = probe.candidates[0];
        int open = g.edge_count() - 1;
        int smax = std::min<int>(t - open, static_cast<int>(cand.size()));
        std::vector<Vertex> combo;
        auto rec = [&](auto&& self, int s, int from) -> void {
            if (static_cast<int>(combo.size()) == s) {
                jobs.push_back({combo});
                return;
            }
            for (int idx = from; idx < static_cast<int>(cand.size()); ++idx) {
                Vertex v = cand[idx];
                if (s == 1 && g.n() >= 4 && !(probe.neighbor_mask[0] >> v & 1)) continue;
                combo.push_back(v);
                self(self, s, idx + 1);
                combo.pop_back();
            }
        };
        for (int s = 1; s <= smax; ++s) rec(rec, s, 0);
    }

    std::atomic<size_t> next{0};
    std::vector<std::future<LevelOutcome>> futs;
    for (int tid = 0; tid < threads; ++tid) {
        futs.push_back(std::async(std::launch::async, [&]() {
            LevelOutcome local;
            for (;;) {
                size_t j = next.fetch_add(1);
                if (j >= jobs.size()) break;
                Worker w(g, opts, shared);
                bool feasible = true;
                for (Vertex h : jobs[j].first_heads) {
                    if (w.head_budget[h] == 0) {
                        feasible = false;
                        break;
                    }
                    --w.head_budget[h];
                }
                if (!feasible) continue;
                try {
                    w.heads[0] = jobs[j].first_heads;
                    std::vector<int> settled_unused;
                    if (w.prefix_feasible(0, settled_unused)) {
                        w.dfs(1, t - static_cast<int>(w.heads[0].size()));
                    }
                } catch (const Interrupted&) {
                    if (!shared.found.load()) local.interrupted = true;
                }
                for (auto& s : w.solutions) local.solutions.push_back(std::move(s));
                if (!local.solutions.empty()) break;
            }
            return local;
        }));
    }
    for (auto& f : futs) {
        LevelOutcome local = f.get();
        out.interrupted = out.interrupted || local.interrupted;
        for (auto& s : local.solutions) out.solutions.push_back(std::move(s));
    }
    std::sort(out.solutions.begin(), out.solutions.end(),
              [](const DirectedHypergraph& a, const DirectedHypergraph& b) {
                  return std::lexicographical_compare(a.arcs().begin(), a.arcs().end(),
                                                      b.arcs().begin(), b.arcs().end());
              });
    if (!out.solutions.empty()) out.interrupted = false;
    return out;
}

HydraResult solve(const Graph& g, const SolverOptions& opts) {
    validate_options(opts);
    validate_instance(g);
    const int m = g.edge_count();

    HydraResult result;
    TrivialBounds trivial = trivial_bounds(g);
    // Under head caps the trivial construction may be inadmissible, so no
    // finite upper bound is known for the capped problem; -1 marks that.
    const int known_upper = opts.head_caps.empty() ? trivial.upper : -1;
    int start = std::max(m, lower_bound(g).value);
    int ceiling = deepening_ceiling(g, opts);

    Shared shared;
    shared.node_limit = opts.node_limit;
    shared.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                         std::chrono::duration<double>(opts.time_limit_secs));

    for (int t = start; t <= ceiling; ++t) {
        LevelOutcome level = run_level(g, opts, shared, t, result.stats);
        if (!level.solutions.empty()) {
            result.exact = true;
            result.value = t;
            result.lower = result.upper = t;
            result.certificate = level.solutions.front();
            if (opts.enumerate_all) result.optima = std::move(level.solutions);
            return result;
        }
        if (level.interrupted) {
            result.exact = false;
            result.cap_hit = true;
            result.lower = t;  // levels below t were exhausted
            result.upper = known_upper;
            result.certificate.reset();
            return result;
        }
        result.stats.deepest_level_completed = t;
    }

    // Exhausted every level up to the ceiling without a solution.  Without
    // caps this cannot happen (the trivial construction fits the ceiling).
    result.exact = false;
    result.infeasible_within_ceiling = true;
    result.lower = std::max(start, ceiling + 1);
    result.upper = known_upper;
    return result;
}

}  // namespace

HydraResult hydra_number(const Graph& g, const SolverOptions& opts) {
    return solve(g, opts);
}

std::pair<bool, std::optional<DirectedHypergraph>> is_single_headed(
    const Graph& g, const SolverOptions& opts) {
    SolverOptions o = opts;
    o.max_excess = 0;
    o.enumerate_all = false;
    HydraResult r = solve(g, o);
    if (r.cap_hit) throw CapExceeded("is_single_headed: resource cap exceeded");
    if (r.exact) return {true, r.certificate};
    return {false, std::nullopt};
}

HydraResult hydra_number_restricted(const Graph& g, const std::map<Vertex, int>& head_caps,
                                    const SolverOptions& opts) {
    SolverOptions o = opts;
    o.head_caps = head_caps;
    return solve(g, o);
}

std::vector<DirectedHypergraph> enumerate_optima(const Graph& g, const SolverOptions& opts,
                                                 int edge_cap) {
    if (g.edge_count() > edge_cap) {
        throw CapExceeded("enumerate_optima: capped at " + std::to_string(edge_cap) +
                          " edges");
    }
    SolverOptions o = opts;
    o.enumerate_all = true;
    o.threads = 1;
    HydraResult r = solve(g, o);
    if (!r.exact) throw CapExceeded("enumerate_optima: resource cap exceeded");
    return std::move(r.optima);
}

}  // namespace hydra
