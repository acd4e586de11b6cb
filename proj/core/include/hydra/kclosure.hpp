#pragma once

#include <optional>
#include <vector>

#include "hydra/errors.hpp"
#include "hydra/graph.hpp"
#include "hydra/hypergraph.hpp"

namespace hydra {

/// Edge count of the balanced complete multipartite graph T(n, r), computed
/// from the actual part sizes.
long long turan_count(int n, int r);

/// The clique-partition construction: k-1 near-equal cliques (the complement
/// of T(n, k-1)); inside each clique a directed Hamiltonian-path chain, one
/// head per remaining edge, and a double-headed linking edge igniting the
/// next clique cyclically.  k = 2 degenerates to the single-headed
/// certificate of K_n.  Requires 2 <= k and 2(k-1) <= n.
DirectedHypergraph f_construct(int n, int k);

struct KClosureCheck {
    bool ok = false;
    std::optional<std::vector<Vertex>> witness;  // lexicographically least failing k-set
};

/// Checks cl(S) = V for every k-element subset S.
KClosureCheck verify_k_closure(const DirectedHypergraph& h, int k,
                               long long subset_cap = 1'000'000);

/// Necessary condition behind the lower bound: the body graph of h has no
/// independent set of size k.
bool f_lower_check(const DirectedHypergraph& h, int k, long long subset_cap = 1'000'000);

/// Exact f(n, k) for desk-scale n (<= 6): iterative deepening over the total
/// arc count, with candidate body sets restricted to graphs without a
/// k-independent set.
int f_exact(int n, int k, long long node_cap = 50'000'000);

struct FknReport {
    int n = 0;
    int k = 0;
    long long lower = 0;  // C(n,2) - t(n,k-1)
    long long upper = 0;  // lower + (k-1)
    DirectedHypergraph construction;
    std::optional<int> exact;
};

FknReport fkn_report(int n, int k, bool compute_exact = false);

}  // namespace hydra
