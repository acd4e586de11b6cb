#pragma once

#include <optional>
#include <vector>

#include "hydra/errors.hpp"
#include "hydra/graph.hpp"

namespace hydra {

/// A vertex-disjoint path cover of a host graph: every host vertex lies on
/// exactly one path, and consecutive path entries are host edges.  Singleton
/// paths are allowed (and required for isolated host vertices).
struct PathCover {
    std::vector<std::vector<Vertex>> paths;

    int size() const { return static_cast<int>(paths.size()); }
};

bool is_valid_path_cover(const Graph& host, const PathCover& cover);

struct PathCoverResult {
    PathCover cover;
    bool optimal = false;
};

/// Minimum vertex-disjoint path cover.  Exact via DP over vertex subsets up
/// to `exact_cap` vertices; larger hosts fall back to greedy path stripping
/// with optimal=false, or throw CapExceeded when `require_exact`.
PathCoverResult min_path_cover(const Graph& host, int exact_cap = 16,
                               bool require_exact = false);

/// Deterministic greedy stripping; always a valid cover, no optimality claim.
PathCover greedy_path_cover(const Graph& host);

/// Exact backtracking Hamiltonian cycle search (vertex sequence, first vertex
/// smallest).  nullopt when none exists; CapExceeded past the node budget.
std::optional<std::vector<Vertex>> hamiltonian_cycle(const Graph& g,
                                                     long long node_cap = 50'000'000);

/// Size of a maximum linear forest (edge set with max degree 2 and no cycle)
/// by exhaustive branch and bound; |V| minus this is the path cover number.
/// nullopt when the node budget runs out before the search completes.
std::optional<int> max_linear_forest(const Graph& g, long long node_cap = 200'000'000);

}  // namespace hydra
