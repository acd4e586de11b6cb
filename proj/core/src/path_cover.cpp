#include "hydra/path_cover.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>

namespace hydra {

bool is_valid_path_cover(const Graph& host, const PathCover& cover) {
    std::vector<char> seen(host.n(), 0);
    int covered = 0;
    for (const auto& path : cover.paths) {
        if (path.empty()) return false;
        for (size_t i = 0; i < path.size(); ++i) {
            Vertex v = path[i];
            if (v < 0 || v >= host.n() || seen[v]) return false;
            seen[v] = 1;
            ++covered;
            if (i > 0 && !host.has_edge(path[i - 1], v)) return false;
        }
    }
    return covered == host.n();
}

PathCover greedy_path_cover(const Graph& host) {
    PathCover cover;
    std::vector<char> used(host.n(), 0);
    for (Vertex s = 0; s < host.n(); ++s) {
        if (used[s]) continue;
        std::vector<Vertex> path{s};
        used[s] = 1;
        // grow at the back, then at the front
        for (;;) {
            Vertex ext = -1;
            for (Vertex nb : host.neighbors(path.back()))
                if (!used[nb]) {
                    ext = nb;
                    break;
                }
            if (ext < 0) break;
            path.push_back(ext);
            used[ext] = 1;
        }
        for (;;) {
            Vertex ext = -1;
            for (Vertex nb : host.neighbors(path.front()))
                if (!used[nb]) {
                    ext = nb;
                    break;
                }
            if (ext < 0) break;
            path.insert(path.begin(), ext);
            used[ext] = 1;
        }
        cover.paths.push_back(std::move(path));
    }
    return cover;
}

namespace {

PathCover min_path_cover_dp(const Graph& host) {
    const int k = host.n();
    if (k == 0) return {};
    const uint32_t full = (k == 32) ? 0xffffffffu : ((1u << k) - 1);
    std::vector<uint32_t> adj(k, 0);
    for (const Edge& e : host.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    const uint8_t INF = 0xff;
    // dp[mask*k+last]: min paths covering `mask`, current path open at `last`
    std::vector<uint8_t> dp(static_cast<size_t>(full + 1) * k, INF);
    // parent: previous `last` (low nibble unused for roots), +0x40 = new path, 0x80 = root
    std::vector<uint8_t> par(dp.size(), 0);
    for (int v = 0; v < k; ++v) {
        dp[(1u << v) * k + v] = 1;
        par[(1u << v) * k + v] = 0x80;
    }
    for (uint32_t mask = 1; mask <= full; ++mask) {
        for (int last = 0; last < k; ++last) {
            uint8_t cur = dp[mask * k + last];
            if (cur == INF) continue;
            uint32_t rest = full & ~mask;
            while (rest) {
                int u = std::countr_zero(rest);
                rest &= rest - 1;
                uint32_t nmask = mask | (1u << u);
                bool ext = (adj[last] >> u) & 1;
                uint8_t val = ext ? cur : cur + 1;
                size_t id = nmask * static_cast<size_t>(k) + u;
                if (val < dp[id]) {
                    dp[id] = val;
                    par[id] = static_cast<uint8_t>(last) | (ext ? 0 : 0x40);
                }
            }
        }
    }
    int best_last = 0;
    uint8_t best = INF;
    for (int v = 0; v < k; ++v) {
        if (dp[full * static_cast<size_t>(k) + v] < best) {
            best = dp[full * static_cast<size_t>(k) + v];
            best_last = v;
        }
    }
    // walk back, splitting paths at new-path markers
    PathCover cover;
    std::vector<Vertex> path;
    uint32_t mask = full;
    int last = best_last;
    for (;;) {
        path.push_back(last);
        uint8_t p = par[mask * static_cast<size_t>(k) + last];
        mask &= ~(1u << last);
        if (p & 0x80) break;
        if (p & 0x40) {
            std::reverse(path.begin(), path.end());
            cover.paths.push_back(std::move(path));
            path.clear();
        }
        last = p & 0x3f;
    }
    std::reverse(path.begin(), path.end());
    cover.paths.push_back(std::move(path));
    std::reverse(cover.paths.begin(), cover.paths.end());
    return cover;
}

}  // namespace

PathCoverResult min_path_cover(const Graph& host, int exact_cap, bool require_exact) {
    if (host.n() <= exact_cap && host.n() <= 24) {
        return {min_path_cover_dp(host), true};
    }
    if (require_exact) {
        throw CapExceeded("min_path_cover: host with " + std::to_string(host.n()) +
                          " vertices exceeds exact cap " + std::to_string(exact_cap));
    }
    return {greedy_path_cover(host), false};
}

namespace {

struct HamSearch {
    const Graph& g;
    long long nodes = 0;
    long long cap;
    std::vector<char> used;
    std::vector<Vertex> path;

    HamSearch(const Graph& graph, long long node_cap) : g(graph), cap(node_cap) {}

    bool dfs() {
        if (++nodes > cap) throw CapExceeded("hamiltonian_cycle: node budget exceeded");
        if (static_cast<int>(path.size()) == g.n()) {
            return g.has_edge(path.back(), path.front());
        }
        for (Vertex nb : g.neighbors(path.back())) {
            if (used[nb]) continue;
            used[nb] = 1;
            path.push_back(nb);
            if (dfs()) return true;
            path.pop_back();
            used[nb] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<Vertex>> hamiltonian_cycle(const Graph& g, long long node_cap) {
    if (g.n() < 3) return std::nullopt;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) < 2) return std::nullopt;
    if (!g.is_connected()) return std::nullopt;
    HamSearch s(g, node_cap);
    s.used.assign(g.n(), 0);
    s.used[0] = 1;
    s.path.push_back(0);
    if (s.dfs()) return s.path;
    return std::nullopt;
}

namespace {

struct ForestSearch {
    const Graph& g;
    long long nodes = 0;
    long long cap;
    bool aborted = false;
    std::vector<int> deg;
    std::vector<int> dsu;
    int best = 0;

    ForestSearch(const Graph& graph, long long node_cap) : g(graph), cap(node_cap) {
        deg.assign(g.n(), 0);
        dsu.resize(g.n());
        std::iota(dsu.begin(), dsu.end(), 0);
    }

    int find(int x) {
        while (dsu[x] != x) x = dsu[x];
        return x;
    }

    void dfs(int idx, int taken) {
        if (aborted) return;
        if (++nodes > cap) {
            aborted = true;
            return;
        }
        best = std::max(best, taken);
        if (idx == g.edge_count()) return;
        // capacity bound: each vertex accepts at most 2 incident forest edges
        int slack = 0;
        for (int v = 0; v < g.n(); ++v) slack += std::max(0, 2 - deg[v]);
        int limit = std::min(g.edge_count() - idx, slack / 2);
        if (taken + limit <= best) return;

        const Edge& e = g.edge(idx);
        int ru = find(e.u), rv = find(e.v);
        if (deg[e.u] < 2 && deg[e.v] < 2 && ru != rv) {
            ++deg[e.u];
            ++deg[e.v];
            dsu[ru] = rv;
            dfs(idx + 1, taken + 1);
            dsu[ru] = ru;
            --deg[e.u];
            --deg[e.v];
        }
        dfs(idx + 1, taken);
    }
};

}  // namespace

std::optional<int> max_linear_forest(const Graph& g, long long node_cap) {
    ForestSearch s(g, node_cap);
    s.dfs(0, 0);
    if (s.aborted) return std::nullopt;
    return s.best;
}

}  // namespace hydra
