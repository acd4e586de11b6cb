#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hydra {

using Vertex = int;

/// Unordered pair of distinct vertices, stored canonically with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b);

    bool contains(Vertex x) const { return x == u || x == v; }
    Vertex other(Vertex x) const { return x == u ? v : u; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted and deduplicated; instances are immutable after
/// construction and safe to share across threads.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    static Graph from_pairs(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[i]; }

    bool has_edge(Vertex a, Vertex b) const;
    /// Index of {a,b} in the sorted edge list, or -1.
    int edge_index(Vertex a, Vertex b) const;

    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

    bool has_isolated_vertex() const;
    std::vector<Vertex> isolated_vertices() const;

    /// Component id per vertex, ids 0..k-1 assigned in order of smallest member.
    std::vector<int> component_ids() const;
    int component_count() const;
    bool is_connected() const;
    bool is_tree() const;

    /// Cut edges (bridges), sorted.
    std::vector<Edge> bridges() const;

    /// Induced subgraph on `keep` (order preserved); second element maps new
    /// index -> old vertex id.
    std::pair<Graph, std::vector<Vertex>> induced(const std::vector<Vertex>& keep) const;

    /// G-minus: the graph obtained by deleting all degree-1 vertices (once),
    /// with the new->old vertex map.
    std::pair<Graph, std::vector<Vertex>> minus_degree_one() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

struct Normalized {
    Graph graph;
    int removed = 0;
    std::vector<Vertex> kept;  // new index -> old vertex id
};

/// Strips isolated vertices and reindexes contiguously. Removing an isolated
/// vertex lowers the hydra number by exactly one, so callers can recover the
/// original value from `removed`.
Normalized normalize(const Graph& g);

}  // namespace hydra
