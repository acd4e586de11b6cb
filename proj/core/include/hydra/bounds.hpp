#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hydra/graph.hpp"
#include "hydra/hypergraph.hpp"
#include "hydra/path_cover.hpp"

namespace hydra {

/// Number of degree-1 vertices of G-minus (G after deleting all its degree-1
/// vertices once).
int ell(const Graph& g);

struct TrivialBounds {
    int lower = 0;
    int upper = 0;
    DirectedHypergraph certificate;  // ordered-edge construction; witnesses <= upper
};

/// |E| <= h(G) <= 2|E|, with the upper bound refined to 2|E|-1 unless G is a
/// perfect matching of its vertex set.  Requires n >= 3 and no isolated
/// vertices.
TrivialBounds trivial_bounds(const Graph& g);

enum class LowerRule { Trivial, Bridge, Components, PendantEll };

struct LowerWitness {
    LowerRule rule;
    int value;
    std::vector<Vertex> detail;  // bridge endpoints / component sizes / leaf set
};

struct LowerBoundReport {
    int value = 0;
    std::vector<LowerWitness> fired;
};

/// Max over: |E|; |E|+1 when a cut edge splits G into sides of >= 2 vertices;
/// |E|+k for k >= 2 components; |E|+ceil(ell/2) when ell(G) > 1.
LowerBoundReport lower_bound(const Graph& g);

enum class PStrategy { Exhaustive, Tree, Binary4Level };

struct POptions {
    int edge_cap = 14;                   // exhaustive strategy instance cap
    long long node_cap = 500'000'000;    // search node budget
    int ham_cap = 16;                    // |E| cap for Hamiltonian line-cycle search
};

struct PResult {
    int value = 0;
    bool exact = false;  // true only when value is provably p(G)
    Graph subgraph;      // chosen spanning subgraph G'
    PathCover cover;     // path cover of L(G'), paths index into subgraph.edges()
};

/// p(G) = min pcn(L(G')) over spanning subgraphs G' without isolated
/// vertices.  Exhaustive mode performs a complete search over (subgraph,
/// cover) pairs; Tree mode falls back to pcn(L(T)) when the tree is too big
/// to enumerate; Binary4Level emits the delete-every-fourth-level
/// construction for complete binary trees (an upper bound on p).
PResult p_of(const Graph& g, PStrategy strategy, const POptions& opts = {});

/// Spanning subgraph of `g` whose line graph has a Hamiltonian cycle, found
/// by complete search, together with the cycle (as indices into g.edges()).
std::optional<std::pair<Graph, std::vector<int>>> line_ham_spanning_subgraph(
    const Graph& g, const POptions& opts = {});

/// The path-cover construction: chain arcs along every path of the cover,
/// then wrap-around arcs (one path) or cyclic linking arcs (k > 1 paths).
/// Output size is |E(G')|+1 for a single path and |E(G')|+k for k > 1
/// whenever the vertex count permits, and always represents G'.
DirectedHypergraph build_from_path_cover(const Graph& gprime, const PathCover& cover);

/// Directs an explicitly given Hamiltonian cycle of L(G') (validated) and
/// emits one arc per line-graph edge: |E(G')| arcs, single-headed.
DirectedHypergraph build_from_line_cycle(const Graph& gprime,
                                         const std::vector<int>& edge_cycle);

/// Searches L(G') for a Hamiltonian cycle (exact backtracking, |E(G')| capped)
/// and applies build_from_line_cycle.  not-found is a regular outcome.
std::optional<DirectedHypergraph> build_from_line_ham_cycle(const Graph& gprime,
                                                            const POptions& opts = {});

/// Prop-style spanning extension: every edge of G missing from G' gets one
/// arc u,v -> w with w the smallest-index G'-neighbor of the larger endpoint.
DirectedHypergraph extend_spanning(const DirectedHypergraph& hprime, const Graph& gprime,
                                   const Graph& g);

struct ExtendedGraph {
    DirectedHypergraph hypergraph;
    Graph graph;
    Vertex added;
};

/// Single-headed extension step: adds a fresh vertex w, edges (u,v) and
/// (v,w), and arcs u,v -> w and v,w -> z with z the smallest-index
/// G-neighbor of v.  Requires a single-headed certificate for connected G
/// and a non-edge (u,v).
ExtendedGraph extend_with_new_vertex(const DirectedHypergraph& h, const Graph& g,
                                     Vertex u, Vertex v);

struct UpperBound {
    int value = 0;
    DirectedHypergraph certificate;  // verified, |certificate| <= value
    std::string method;
};

/// Best available upper bound with a verified certificate: min of the trivial
/// bound, |E|+p via the best feasible p_of strategy, and |E| when some
/// spanning subgraph has a Hamiltonian line graph (within caps).
UpperBound upper_bound(const Graph& g, const POptions& opts = {});

struct BoundReport {
    LowerBoundReport lower;
    UpperBound upper;
};

BoundReport bounds_report(const Graph& g, const POptions& opts = {});

}  // namespace hydra
