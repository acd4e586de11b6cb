#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hydra/errors.hpp"
#include "hydra/graph.hpp"
#include "hydra/hypergraph.hpp"

namespace hydra {

struct SolverOptions {
    /// Cap iterative deepening at |E| + max_excess instead of the trivial
    /// upper bound (excess 0 gives the single-headedness decision).
    std::optional<int> max_excess;
    /// Per-vertex cap on the number of arcs with that head.
    std::map<Vertex, int> head_caps;
    /// Collect every optimal certificate instead of stopping at the first.
    bool enumerate_all = false;
    long long node_limit = 10'000'000;
    double time_limit_secs = 60.0;
    /// Sibling branches of the first edge may be explored in parallel.  The
    /// optimal value is schedule-independent; the certificate is canonical
    /// only with threads == 1 (parallel mode returns some optimal one).
    int threads = 1;
};

struct SolveStats {
    long long nodes = 0;
    long long pruned_neighbor_rule = 0;  // single head must neighbor its body
    long long pruned_stuck_closure = 0;  // some edge closure stuck below V
    long long pruned_budget = 0;         // not enough arcs left for open edges
    int deepest_level_completed = -1;    // largest t fully exhausted w/o solution
};

/// Exact result, or a sound interval when resource caps interrupt the
/// search.  lower <= h(G) <= upper always holds; a wrong exact value is
/// never reported.  Under head caps no generic upper bound exists, so
/// interval results carry upper == -1 there.
struct HydraResult {
    bool exact = false;
    int value = -1;  // h(G), defined when exact
    int lower = 0;
    int upper = 0;
    bool cap_hit = false;                  // node/time budget interrupted level `lower`
    bool infeasible_within_ceiling = false;  // no solution up to the deepening ceiling
    std::optional<DirectedHypergraph> certificate;  // verified optimum when exact
    std::vector<DirectedHypergraph> optima;         // with enumerate_all
    SolveStats stats;
};

/// Minimum number of hyperarcs representing g, with a verified certificate.
///
/// Iterative deepening on the total arc count t, starting at the bounds
/// module's lower bound and capped by the trivial upper bound.  At each t,
/// head multisets are assigned to edges in sorted order with candidate heads
/// ascending; the first solution found — equivalently the optimum whose
/// per-edge (head count, heads) tuples are lexicographically least — is
/// returned, which keeps golden outputs stable.
///
/// Requires a normalized graph: n >= 3, no isolated vertices, at least one
/// edge (and n <= 63 in this implementation).
HydraResult hydra_number(const Graph& g, const SolverOptions& opts = {});

/// Excess-0 specialization: exactly one head per edge.
std::pair<bool, std::optional<DirectedHypergraph>> is_single_headed(
    const Graph& g, const SolverOptions& opts = {});

/// Same search with per-vertex head caps enforced while branching.  Caps that
/// admit no representation within 2|E| arcs yield infeasible_within_ceiling.
HydraResult hydra_number_restricted(const Graph& g, const std::map<Vertex, int>& head_caps,
                                    const SolverOptions& opts = {});

/// Every optimal certificate, in canonical order.  Tiny instances only.
std::vector<DirectedHypergraph> enumerate_optima(const Graph& g,
                                                 const SolverOptions& opts = {},
                                                 int edge_cap = 10);

}  // namespace hydra
