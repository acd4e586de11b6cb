#include "hydra/line_graph.hpp"

#include <vector>

namespace hydra {

Graph line_graph(const Graph& g) {
    std::vector<Edge> edges;
    // group edge indices by shared endpoint
    std::vector<std::vector<int>> at(g.n());
    for (int i = 0; i < g.edge_count(); ++i) {
        at[g.edge(i).u].push_back(i);
        at[g.edge(i).v].push_back(i);
    }
    for (int v = 0; v < g.n(); ++v) {
        const auto& ids = at[v];
        for (size_t a = 0; a < ids.size(); ++a)
            for (size_t b = a + 1; b < ids.size(); ++b) edges.emplace_back(ids[a], ids[b]);
    }
    return Graph(g.edge_count(), std::move(edges));
}

}  // namespace hydra
