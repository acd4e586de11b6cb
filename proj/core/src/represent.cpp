#include "hydra/represent.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace hydra {

RepresentationReport represents(const DirectedHypergraph& h, const Graph& g) {
    if (h.n() != g.n()) {
        throw std::invalid_argument("represents: vertex count mismatch (" +
                                    std::to_string(h.n()) + " vs " + std::to_string(g.n()) +
                                    ")");
    }
    RepresentationReport report;
    const int n = g.n();
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            std::vector<Vertex> cl = closure(h, {u, v});
            if (g.has_edge(u, v)) {
                if (static_cast<int>(cl.size()) != n) {
                    report.violations.push_back(
                        {Edge(u, v), ViolationKind::EdgeClosureIncomplete, std::move(cl)});
                }
            } else {
                if (cl.size() != 2) {
                    report.violations.push_back(
                        {Edge(u, v), ViolationKind::NonedgeClosureLeaks, std::move(cl)});
                }
            }
        }
    }
    report.ok = report.violations.empty();
    return report;
}

CertificateProfile certificate_profile(const DirectedHypergraph& h, const Graph& g) {
    CertificateProfile p;
    std::vector<int> counts(g.edge_count(), 0);
    for (const Hyperarc& a : h.arcs()) {
        int idx = g.edge_index(a.u, a.v);
        if (idx < 0) {
            p.foreign_body_arcs.push_back(a);
        } else {
            ++counts[idx];
        }
    }
    p.bodies_are_edges = p.foreign_body_arcs.empty();
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        p.head_counts.emplace_back(e, counts[i]);
        if (counts[i] == 0)
            p.uncovered.push_back(e);
        else if (counts[i] == 1)
            p.single_headed.push_back(e);
        else
            p.multi_headed.push_back(e);
    }
    p.excess = h.size() - g.edge_count();
    return p;
}

}  // namespace hydra
