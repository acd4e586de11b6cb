#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hydra/bounds.hpp"
#include "hydra/graph.hpp"
#include "hydra/hypergraph.hpp"
#include "hydra/path_cover.hpp"

namespace hydra {

enum class FamilyKind {
    Star,
    Path,
    Cycle,
    Matching,
    Caterpillar,
    Spider,
    Tk,
    BinaryTree,
    Gk,
    Turan,
    ForbiddenCaterpillarSubgraph,
};

struct FamilySpec {
    FamilyKind kind;
    std::vector<int> params;
};

/// Canonical labeled generator for every family: trees are labeled root-first
/// BFS (binary trees heap-style), G_k is cycle vertices, then the x_i, y_i,
/// z_i pendant groups.
Graph generate(const FamilySpec& spec);

Graph make_star(int leaves);
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_matching(int edges);
/// Spine vertices 0..s-1 with pendants[i] legs of length one at spine vertex i.
Graph make_caterpillar(const std::vector<int>& pendants);
/// Center 0; legs laid out one after another, each a path of the given length.
Graph make_spider(const std::vector<int>& leg_lengths);
/// Spider with k legs of length exactly 2.
Graph make_tk(int k);
/// Complete binary tree of depth d: 2^(d+1)-1 vertices, heap labeling.
Graph make_binary_tree(int d);
/// The 8k-cycle with pendant x_i/y_i edges plus the (x_i,y_i),(y_i,z_i)
/// attachments; the single-headed family.
Graph make_gk(int k);
/// Balanced complete multipartite graph on n vertices with r parts.
Graph make_turan(int n, int r);
/// The 7-vertex tree whose absence characterizes caterpillars, with its
/// textbook labeling.
Graph make_forbidden_caterpillar();

struct TreeShape {
    bool is_star = false;
    bool is_caterpillar = false;
    bool is_spider = false;
    int spider_legs_ge2 = 0;  // number of legs of length >= 2
};

/// Classifies a tree.  Caterpillars are recognized by spine extraction; the
/// forbidden-subgraph recognizer is exposed separately so the two can be
/// cross-checked.
TreeShape recognize(const Graph& tree);

/// True iff the tree contains the forbidden caterpillar subgraph, i.e. some
/// vertex has three or more neighbors of degree >= 2.
bool contains_forbidden_caterpillar(const Graph& tree);

enum class ClosedFormRule { Star, Caterpillar, Spider };

/// Closed-form hydra numbers for trees: stars |E|, non-star caterpillars
/// |E|+1, spiders |E| + ceil(legs/2); nullopt otherwise (solver required).
std::optional<std::pair<int, ClosedFormRule>> closed_form_hydra(const Graph& tree);

/// floor((5n-3)/4): the maximum hydra number over n-vertex trees.
int max_tree_hydra(int n);

struct GkCertificate {
    Graph graph;                          // G_k
    DirectedHypergraph hypergraph;        // single-headed certificate, |E(G_k)| arcs
    Graph base_graph;                     // 8k-cycle plus pendant edges
    DirectedHypergraph base_hypergraph;   // its Hamiltonian line-cycle certificate
    std::vector<int> base_line_cycle;     // edge indices of the explicit L-cycle
};

/// Builds G_k's excess-0 certificate: the explicit Hamiltonian cycle of the
/// base's line graph (cycle edges in order, each pendant edge inserted
/// between its two incident cycle edges), then k single-headed
/// vertex-extension steps attaching z_i to (x_i, y_i).
GkCertificate gk_certificate(int k);

enum class PcnEvidence { ExactSearch, ConstructedVerified, PropertyOnly };

struct BinaryTreeReport {
    int depth = 0;
    int edges = 0;
    // hydra-number bounds (populated for d >= 3)
    int lower = 0;                 // |E| + 2^(d-2)
    int upper = 0;                 // verified four-level-deletion certificate size
    std::optional<DirectedHypergraph> upper_certificate;
    int four_level_paths = 0;      // cover size behind `upper`
    // path cover number of L(B_d)
    int g_formula = 0;             // ceil(|E|/7)
    std::optional<int> g_value;    // established value when evidence permits
    PcnEvidence g_evidence = PcnEvidence::PropertyOnly;
    std::optional<PathCover> g_cover;  // witness cover of L(B_d) of size g_formula
};

struct BinaryTreeOptions {
    long long forest_node_cap = 150'000'000;  // exhaustive pcn lower-bound budget
    POptions p;
};

/// Bounds for complete binary trees: the pendant-peel lower bound, the
/// verified delete-every-fourth-level upper construction (d >= 3), and
/// pcn(L(B_d)) — exact by search for small d, by explicit verified cover plus
/// exhaustive lower bound for d = 4 when the budget allows.
BinaryTreeReport binary_tree_report(int d, const BinaryTreeOptions& opts = {});

}  // namespace hydra
