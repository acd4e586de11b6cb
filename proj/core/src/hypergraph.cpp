#include "hydra/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hydra {

Hyperarc::Hyperarc(Vertex a, Vertex b, Vertex head) {
    if (a == b) {
        throw std::invalid_argument("hyperarc body is not a pair: (" + std::to_string(a) +
                                    "," + std::to_string(b) + ")");
    }
    if (head == a || head == b) {
        throw std::invalid_argument("redundant hyperarc " + std::to_string(a) + "," +
                                    std::to_string(b) + "->" + std::to_string(head));
    }
    u = std::min(a, b);
    v = std::max(a, b);
    w = head;
}

DirectedHypergraph::DirectedHypergraph(int n, std::vector<Hyperarc> arcs)
    : n_(n), arcs_(std::move(arcs)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    for (const Hyperarc& a : arcs_) {
        if (a.u < 0 || a.v >= n_ || a.w < 0 || a.w >= n_) {
            throw std::invalid_argument("hyperarc " + std::to_string(a.u) + "," +
                                        std::to_string(a.v) + "->" + std::to_string(a.w) +
                                        " out of range for n=" + std::to_string(n_));
        }
    }
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
}

DirectedHypergraph DirectedHypergraph::merged(const std::vector<Hyperarc>& extra) const {
    std::vector<Hyperarc> all(arcs_.begin(), arcs_.end());
    all.insert(all.end(), extra.begin(), extra.end());
    return DirectedHypergraph(n_, std::move(all));
}

DirectedHypergraph DirectedHypergraph::widened(int new_n) const {
    if (new_n < n_) throw std::invalid_argument("widened() cannot shrink the vertex set");
    return DirectedHypergraph(new_n, {arcs_.begin(), arcs_.end()});
}

std::vector<Vertex> closure(const DirectedHypergraph& h, std::span<const Vertex> seeds) {
    const int n = h.n();
    std::vector<char> marked(n, 0);
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (Vertex s : seeds) {
        if (s < 0 || s >= n) {
            throw std::out_of_range("closure seed " + std::to_string(s) +
                                    " out of range for n=" + std::to_string(n));
        }
        if (!marked[s]) {
            marked[s] = 1;
            queue.push_back(s);
        }
    }

    auto arcs = h.arcs();
    std::vector<int> pending(arcs.size());
    // incidence lists: arcs whose body contains v, laid out flat
    std::vector<int> head_count(n, 0);
    for (const Hyperarc& a : arcs) {
        ++head_count[a.u];
        ++head_count[a.v];
    }
    std::vector<int> start(n + 1, 0);
    for (int v = 0; v < n; ++v) start[v + 1] = start[v] + head_count[v];
    std::vector<int> incident(start[n]);
    {
        std::vector<int> cursor(start.begin(), start.end() - 1);
        for (size_t i = 0; i < arcs.size(); ++i) {
            incident[cursor[arcs[i].u]++] = static_cast<int>(i);
            incident[cursor[arcs[i].v]++] = static_cast<int>(i);
        }
    }
    // Every vertex enters the queue exactly once, decrementing each incident
    // arc once; an arc fires when both body vertices have been marked.
    std::fill(pending.begin(), pending.end(), 2);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        Vertex x = queue[qi];
        for (int ai = start[x]; ai < start[x + 1]; ++ai) {
            int a = incident[ai];
            if (--pending[a] == 0) {
                Vertex w = arcs[a].w;
                if (!marked[w]) {
                    marked[w] = 1;
                    queue.push_back(w);
                }
            }
        }
    }

    std::vector<Vertex> out;
    out.reserve(queue.size());
    for (int v = 0; v < n; ++v)
        if (marked[v]) out.push_back(v);
    return out;
}

std::vector<Vertex> closure(const DirectedHypergraph& h, std::initializer_list<Vertex> seeds) {
    std::vector<Vertex> s(seeds);
    return closure(h, std::span<const Vertex>(s));
}

bool closure_is_full(const DirectedHypergraph& h, std::span<const Vertex> seeds) {
    return static_cast<int>(closure(h, seeds).size()) == h.n();
}

}  // namespace hydra
