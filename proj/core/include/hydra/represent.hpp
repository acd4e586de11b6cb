#pragma once

#include <vector>

#include "hydra/graph.hpp"
#include "hydra/hypergraph.hpp"

namespace hydra {

enum class ViolationKind {
    EdgeClosureIncomplete,  // (u,v) in E but cl(u,v) != V
    NonedgeClosureLeaks,    // (u,v) not in E but cl(u,v) != {u,v}
};

struct Violation {
    Edge pair;
    ViolationKind kind;
    std::vector<Vertex> witness;  // the actual closure
};

struct RepresentationReport {
    bool ok = false;
    std::vector<Violation> violations;
};

/// Checks whether `h` represents `g`: every edge pair must close to the whole
/// vertex set and every non-adjacent pair must close to itself.  All O(n^2)
/// pairs are checked explicitly; every violating pair is reported together
/// with its actual closure.
RepresentationReport represents(const DirectedHypergraph& h, const Graph& g);

struct CertificateProfile {
    bool bodies_are_edges = true;
    std::vector<Hyperarc> foreign_body_arcs;        // arcs whose body is not an edge of g
    std::vector<std::pair<Edge, int>> head_counts;  // per edge of g, sorted edge order
    std::vector<Edge> uncovered;                    // edges with no arc
    std::vector<Edge> single_headed;                // edges with exactly one head
    std::vector<Edge> multi_headed;                 // edges with two or more heads
    int excess = 0;                                 // |arcs| - |E(g)|
};

/// Classifies each edge of `g` as uncovered / single-headed / multi-headed
/// with respect to `h` and flags arcs whose body is not an edge of `g`.
CertificateProfile certificate_profile(const DirectedHypergraph& h, const Graph& g);

}  // namespace hydra
