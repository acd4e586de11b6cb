#pragma once

#include <compare>
#include <span>
#include <vector>

#include "hydra/graph.hpp"

namespace hydra {

/// Directed size-3 hyperarc u,v -> w.  The body {u,v} is unordered (stored
/// u < v) and the head w never lies in the body: redundant arcs like
/// x,y -> x are rejected at construction.
struct Hyperarc {
    Vertex u = 0;
    Vertex v = 0;
    Vertex w = 0;

    Hyperarc() = default;
    Hyperarc(Vertex a, Vertex b, Vertex head);

    Edge body() const { return Edge(u, v); }

    friend auto operator<=>(const Hyperarc&, const Hyperarc&) = default;
};

/// A set of hyperarcs over vertices 0..n-1; duplicates are collapsed.
/// Arcs are kept sorted by (body, head), which makes serialized output and
/// certificate comparisons deterministic. Immutable after construction.
class DirectedHypergraph {
public:
    DirectedHypergraph() = default;
    DirectedHypergraph(int n, std::vector<Hyperarc> arcs);

    int n() const { return n_; }
    int size() const { return static_cast<int>(arcs_.size()); }
    std::span<const Hyperarc> arcs() const { return arcs_; }

    /// Copy with extra arcs added (set union).
    DirectedHypergraph merged(const std::vector<Hyperarc>& extra) const;
    /// Copy over a larger vertex set.
    DirectedHypergraph widened(int new_n) const;

    friend bool operator==(const DirectedHypergraph&, const DirectedHypergraph&) = default;

private:
    int n_ = 0;
    std::vector<Hyperarc> arcs_;
};

/// Forward-chaining closure: the least superset T of `seeds` such that every
/// arc with body inside T has its head in T.  Runs in time linear in the
/// total arc size using a pending-body counter per arc; the result does not
/// depend on any processing order.
std::vector<Vertex> closure(const DirectedHypergraph& h, std::span<const Vertex> seeds);

std::vector<Vertex> closure(const DirectedHypergraph& h, std::initializer_list<Vertex> seeds);

/// True iff closure(h, seeds) is the whole vertex set.
bool closure_is_full(const DirectedHypergraph& h, std::span<const Vertex> seeds);

}  // namespace hydra
