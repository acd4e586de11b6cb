#include "hydra/kclosure.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace hydra {

namespace {

long long binom2(long long n) { return n * (n - 1) / 2; }

std::vector<int> part_sizes(int n, int r) {
    std::vector<int> sizes(r, n / r);
    for (int i = 0; i < n % r; ++i) ++sizes[i];
    return sizes;
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long out = 1;
    for (int i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
        if (out > (1ll << 62) / n) return 1ll << 62;  // saturate
    }
    return out;
}

// visit all k-subsets of 0..n-1 in lexicographic order until f returns false
template <typename F>
bool for_each_subset(int n, int k, long long cap, F&& f) {
    if (binom(n, k) > cap) {
        throw CapExceeded("k-subset enumeration: C(" + std::to_string(n) + "," +
                          std::to_string(k) + ") exceeds the cap of " + std::to_string(cap));
    }
    std::vector<Vertex> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        if (!f(pick)) return false;
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) return true;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace

long long turan_count(int n, int r) {
    if (r < 1 || r > n) throw std::invalid_argument("turan_count: needs 1 <= r <= n");
    long long within = 0;
    for (int s : part_sizes(n, r)) within += binom2(s);
    return binom2(n) - within;
}

DirectedHypergraph f_construct(int n, int k) {
    if (k < 2 || 2 * (k - 1) > n || n < 3) {
        throw std::invalid_argument("f_construct: needs 2 <= k <= n/2 + 1 and n >= 3");
    }
    std::vector<Hyperarc> arcs;
    if (k == 2) {
        // hydra of K_n: directed Hamiltonian cycle plus one arc per chord
        for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n, (i + 2) % n);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (v == u + 1 || (u == 0 && v == n - 1)) continue;
                arcs.emplace_back(u, v, u + 1);
            }
        }
        return DirectedHypergraph(n, std::move(arcs));
    }

    // cliques = parts of the complement of T(n, k-1), consecutive ranges,
    // cyclic order by smallest member
    auto sizes = part_sizes(n, k - 1);
    std::vector<std::vector<Vertex>> cliques;
    int at = 0;
    for (int s : sizes) {
        std::vector<Vertex> c(s);
        std::iota(c.begin(), c.end(), at);
        at += s;
        cliques.push_back(std::move(c));
    }
    const int q = static_cast<int>(cliques.size());
    for (int ci = 0; ci < q; ++ci) {
        const auto& c = cliques[ci];
        const auto& next = cliques[(ci + 1) % q];
        const int s = static_cast<int>(c.size());
        if (s >= 3) {
            // ascending Hamiltonian path chain, wrapping onto the path start
            for (int i = 0; i + 2 < s; ++i) arcs.emplace_back(c[i], c[i + 1], c[i + 2]);
            arcs.emplace_back(c[s - 2], c[s - 1], c[0]);
            // other clique edges: head = path successor of the smaller endpoint
            for (int i = 0; i < s; ++i) {
                for (int j = i + 2; j < s; ++j) {
                    if (i == 0 && j == s - 1) continue;  // cycle-closing edge
                    arcs.emplace_back(c[i], c[j], c[i + 1]);
                }
            }
            // cycle-closing edge ignites the next clique
            arcs.emplace_back(c[0], c[s - 1], next[0]);
            arcs.emplace_back(c[0], c[s - 1], next[1]);
        } else {
            // size-2 clique: its only edge plays the linking role
            arcs.emplace_back(c[0], c[1], next[0]);
            arcs.emplace_back(c[0], c[1], next[1]);
        }
    }
    return DirectedHypergraph(n, std::move(arcs));
}

KClosureCheck verify_k_closure(const DirectedHypergraph& h, int k, long long subset_cap) {
    if (k < 1 || k > h.n()) throw std::invalid_argument("verify_k_closure: bad k");
    KClosureCheck out;
    out.ok = for_each_subset(h.n(), k, subset_cap, [&](const std::vector<Vertex>& pick) {
        if (!closure_is_full(h, pick)) {
            out.witness = pick;
            return false;
        }
        return true;
    });
    return out;
}

bool f_lower_check(const DirectedHypergraph& h, int k, long long subset_cap) {
    if (k < 1 || k > h.n()) throw std::invalid_argument("f_lower_check: bad k");
    std::vector<std::vector<char>> body(h.n(), std::vector<char>(h.n(), 0));
    for (const Hyperarc& a : h.arcs()) body[a.u][a.v] = body[a.v][a.u] = 1;
    return for_each_subset(h.n(), k, subset_cap, [&](const std::vector<Vertex>& pick) {
        for (size_t i = 0; i < pick.size(); ++i)
            for (size_t j = i + 1; j < pick.size(); ++j)
                if (body[pick[i]][pick[j]]) return true;
        return false;  // independent k-set found
    });
}

namespace {

struct FExactSearch {
    int n, k;
    long long node_cap;
    long long nodes = 0;

    std::vector<Edge> all_edges;             // candidate bodies, sorted
    std::vector<std::vector<Vertex>> ksets;  // all k-subsets

    std::vector<int> bodies;                      // chosen body edge indices
    std::vector<std::vector<Vertex>> heads;       // per chosen body
    std::vector<uint64_t> body_mask;

    void tick() {
        if (++nodes > node_cap) throw CapExceeded("f_exact: node budget exceeded");
    }

    bool independent_free(uint64_t edge_set) {
        // no k vertices pairwise non-adjacent in the body graph
        std::vector<uint64_t> adj(n, 0);
        for (size_t i = 0; i < all_edges.size(); ++i) {
            if (!(edge_set >> i & 1)) continue;
            adj[all_edges[i].u] |= 1ull << all_edges[i].v;
            adj[all_edges[i].v] |= 1ull << all_edges[i].u;
        }
        for (const auto& pick : ksets) {
            bool has_edge = false;
            for (size_t i = 0; i < pick.size() && !has_edge; ++i)
                for (size_t j = i + 1; j < pick.size(); ++j)
                    if (adj[pick[i]] >> pick[j] & 1) {
                        has_edge = true;
                        break;
                    }
            if (!has_edge) return false;
        }
        return true;
    }

    // closure of `start` under assigned arcs, unassigned bodies as wildcards
    bool kset_feasible(int assigned) {
        uint64_t full = (1ull << n) - 1;
        for (const auto& pick : ksets) {
            uint64_t cl = 0;
            for (Vertex v : pick) cl |= 1ull << v;
            bool changed = true;
            bool wild = false;
            while (changed && !wild) {
                changed = false;
                for (int a = 0; a < assigned; ++a) {
                    uint64_t bm = (1ull << all_edges[bodies[a]].u) |
                                  (1ull << all_edges[bodies[a]].v);
                    if ((cl & bm) != bm) continue;
                    for (Vertex h : heads[a]) {
                        if (!(cl >> h & 1)) {
                            cl |= 1ull << h;
                            changed = true;
                        }
                    }
                }
                for (size_t b = assigned; b < bodies.size(); ++b) {
                    uint64_t bm = (1ull << all_edges[bodies[b]].u) |
                                  (1ull << all_edges[bodies[b]].v);
                    if ((cl & bm) == bm) {
                        wild = true;
                        break;
                    }
                }
            }
            if (!wild && cl != full) return false;
        }
        return true;
    }

    bool assign_heads(int bi, int budget) {
        tick();
        if (bi == static_cast<int>(bodies.size())) {
            return budget == 0;  // kset_feasible with no wildcards is a full check
        }
        int open = static_cast<int>(bodies.size()) - bi - 1;
        const Edge& e = all_edges[bodies[bi]];
        std::vector<Vertex> cand;
        for (Vertex v = 0; v < n; ++v)
            if (!e.contains(v)) cand.push_back(v);
        int smax = std::min<int>(budget - open, static_cast<int>(cand.size()));
        std::vector<Vertex> combo;
        auto rec = [&](auto&& self, int s, int from) -> bool {
            if (static_cast<int>(combo.size()) == s) {
                heads[bi] = combo;
                bool ok = kset_feasible(bi + 1) && assign_heads(bi + 1, budget - s);
                heads[bi].clear();
                return ok;
            }
            for (int idx = from; idx < static_cast<int>(cand.size()); ++idx) {
                combo.push_back(cand[idx]);
                if (self(self, s, idx + 1)) return true;
                combo.pop_back();
            }
            return false;
        };
        for (int s = 1; s <= smax; ++s) {
            if (rec(rec, s, 0)) return true;
        }
        return false;
    }

    bool level(int t, long long min_bodies) {
        const int total = static_cast<int>(all_edges.size());
        for (uint64_t mask = 1; mask < (1ull << total); ++mask) {
            int b = std::popcount(mask);
            if (b < min_bodies || b > t) continue;
            if (!independent_free(mask)) continue;
            bodies.clear();
            for (int i = 0; i < total; ++i)
                if (mask >> i & 1) bodies.push_back(i);
            heads.assign(bodies.size(), {});
            if (assign_heads(0, t)) return true;
        }
        return false;
    }
};

}  // namespace

int f_exact(int n, int k, long long node_cap) {
    if (n > 6) throw CapExceeded("f_exact: capped at n <= 6");
    if (n < 3 || k < 2 || k > n - 1) {
        throw std::invalid_argument("f_exact: needs 3 <= n <= 6 and 2 <= k <= n-1");
    }
    FExactSearch search;
    search.n = n;
    search.k = k;
    search.node_cap = node_cap;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) search.all_edges.emplace_back(u, v);
    for_each_subset(n, k, 1'000'000, [&](const std::vector<Vertex>& pick) {
        search.ksets.push_back(pick);
        return true;
    });
    long long min_bodies = binom2(n) - turan_count(n, k - 1);
    for (int t = static_cast<int>(min_bodies); t <= static_cast<int>(binom2(n)); ++t) {
        if (search.level(t, min_bodies)) return t;
    }
    throw std::logic_error("f_exact: no hypergraph found");  // f(n,k) <= C(n,2) always
}

FknReport fkn_report(int n, int k, bool compute_exact) {
    FknReport report;
    report.n = n;
    report.k = k;
    report.lower = binom2(n) - turan_count(n, k - 1);
    report.upper = report.lower + (k - 1);
    report.construction = f_construct(n, k);
    if (compute_exact && n <= 6) report.exact = f_exact(n, k);
    return report;
}

}  // namespace hydra
