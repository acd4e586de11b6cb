#include "hydra/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hydra {

Edge::Edge(Vertex a, Vertex b) {
    if (a == b) {
        throw std::invalid_argument("self-loop edge (" + std::to_string(a) + "," +
                                    std::to_string(b) + ")");
    }
    u = std::min(a, b);
    v = std::max(a, b);
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.v >= n_) {
            throw std::invalid_argument("edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ") out of range for n=" +
                                        std::to_string(n_));
        }
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adj_.assign(n_, {});
    for (const Edge& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::from_pairs(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [a, b] : pairs) edges.emplace_back(a, b);
    return Graph(n, std::move(edges));
}

bool Graph::has_edge(Vertex a, Vertex b) const { return edge_index(a, b) >= 0; }

int Graph::edge_index(Vertex a, Vertex b) const {
    if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) return -1;
    Edge e(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return static_cast<int>(it - edges_.begin());
    return -1;
}

bool Graph::has_isolated_vertex() const {
    for (int v = 0; v < n_; ++v)
        if (adj_[v].empty()) return true;
    return false;
}

std::vector<Vertex> Graph::isolated_vertices() const {
    std::vector<Vertex> out;
    for (int v = 0; v < n_; ++v)
        if (adj_[v].empty()) out.push_back(v);
    return out;
}

std::vector<int> Graph::component_ids() const {
    std::vector<int> comp(n_, -1);
    int next = 0;
    std::vector<Vertex> stack;
    for (int s = 0; s < n_; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : adj_[x]) {
                if (comp[y] < 0) {
                    comp[y] = next;
                    stack.push_back(y);
                }
            }
        }
        ++next;
    }
    return comp;
}

int Graph::component_count() const {
    if (n_ == 0) return 0;
    auto comp = component_ids();
    return *std::max_element(comp.begin(), comp.end()) + 1;
}

bool Graph::is_connected() const { return n_ <= 1 || component_count() == 1; }

bool Graph::is_tree() const {
    return n_ >= 1 && edge_count() == n_ - 1 && is_connected();
}

std::vector<Edge> Graph::bridges() const {
    // Tarjan lowlink over the (small) graph.
    std::vector<int> disc(n_, -1), low(n_, 0);
    std::vector<Edge> out;
    int timer = 0;
    // iterative DFS with explicit parent-edge tracking
    struct Frame {
        Vertex v;
        Vertex parent;
        size_t next_child = 0;
    };
    for (int root = 0; root < n_; ++root) {
        if (disc[root] >= 0) continue;
        std::vector<Frame> stack{{root, -1}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next_child < adj_[f.v].size()) {
                Vertex to = adj_[f.v][f.next_child++];
                if (to == f.parent) continue;  // simple graph: at most one parent edge
                if (disc[to] >= 0) {
                    low[f.v] = std::min(low[f.v], disc[to]);
                } else {
                    disc[to] = low[to] = timer++;
                    stack.push_back({to, f.v});
                }
            } else {
                Vertex v = f.v, p = f.parent;
                stack.pop_back();
                if (p >= 0) {
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] > disc[p]) out.emplace_back(p, v);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<Graph, std::vector<Vertex>> Graph::induced(const std::vector<Vertex>& keep) const {
    std::vector<int> newid(n_, -1);
    for (size_t i = 0; i < keep.size(); ++i) newid[keep[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const Edge& e : edges_) {
        if (newid[e.u] >= 0 && newid[e.v] >= 0) edges.emplace_back(newid[e.u], newid[e.v]);
    }
    return {Graph(static_cast<int>(keep.size()), std::move(edges)), keep};
}

std::pair<Graph, std::vector<Vertex>> Graph::minus_degree_one() const {
    std::vector<Vertex> keep;
    for (int v = 0; v < n_; ++v)
        if (degree(v) != 1) keep.push_back(v);
    return induced(keep);
}

Normalized normalize(const Graph& g) {
    std::vector<Vertex> keep;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 0) keep.push_back(v);
    auto [sub, kept] = g.induced(keep);
    return {std::move(sub), g.n() - static_cast<int>(keep.size()), std::move(kept)};
}

}  // namespace hydra
