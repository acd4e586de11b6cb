#include "hydra/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "hydra/line_graph.hpp"
#include "hydra/represent.hpp"

namespace hydra {

namespace {

std::invalid_argument bad_params(const std::string& what) {
    return std::invalid_argument("generate: " + what);
}

}  // namespace

Graph make_star(int leaves) {
    if (leaves < 1) throw bad_params("star needs >= 1 leaf");
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph(leaves + 1, std::move(edges));
}

Graph make_path(int n) {
    if (n < 1) throw bad_params("path needs >= 1 vertex");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw bad_params("cycle needs >= 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

Graph make_matching(int m) {
    if (m < 1) throw bad_params("matching needs >= 1 edge");
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) edges.emplace_back(2 * i, 2 * i + 1);
    return Graph(2 * m, std::move(edges));
}

Graph make_caterpillar(const std::vector<int>& pendants) {
    if (pendants.empty()) throw bad_params("caterpillar needs a spine");
    const int s = static_cast<int>(pendants.size());
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < s; ++i) edges.emplace_back(i, i + 1);
    int next = s;
    for (int i = 0; i < s; ++i) {
        if (pendants[i] < 0) throw bad_params("negative pendant count");
        for (int j = 0; j < pendants[i]; ++j) edges.emplace_back(i, next++);
    }
    return Graph(next, std::move(edges));
}

Graph make_spider(const std::vector<int>& leg_lengths) {
    if (leg_lengths.size() < 1) throw bad_params("spider needs legs");
    for (int len : leg_lengths)
        if (len < 1) throw bad_params("spider legs need length >= 1");
    // BFS labeling: center 0, then one vertex per leg level by level
    int maxlen = *std::max_element(leg_lengths.begin(), leg_lengths.end());
    int next = 1;
    std::vector<std::vector<Vertex>> leg(leg_lengths.size());
    for (int depth = 1; depth <= maxlen; ++depth) {
        for (size_t i = 0; i < leg_lengths.size(); ++i) {
            if (leg_lengths[i] >= depth) leg[i].push_back(next++);
        }
    }
    std::vector<Edge> edges;
    for (size_t i = 0; i < leg.size(); ++i) {
        Vertex prev = 0;
        for (Vertex v : leg[i]) {
            edges.emplace_back(prev, v);
            prev = v;
        }
    }
    return Graph(next, std::move(edges));
}

Graph make_tk(int k) {
    if (k < 1) throw bad_params("T_k needs k >= 1");
    return make_spider(std::vector<int>(k, 2));
}

Graph make_binary_tree(int d) {
    if (d < 1) throw bad_params("binary tree needs depth >= 1");
    const int n = (1 << (d + 1)) - 1;
    std::vector<Edge> edges;
    for (int i = 0; 2 * i + 2 < n; ++i) {
        edges.emplace_back(i, 2 * i + 1);
        edges.emplace_back(i, 2 * i + 2);
    }
    return Graph(n, std::move(edges));
}

Graph make_gk(int k) {
    if (k < 2) throw bad_params("G_k needs k >= 2");
    const int cycle = 8 * k;
    std::vector<Edge> edges;
    for (int j = 0; j < cycle; ++j) edges.emplace_back(j, (j + 1) % cycle);
    for (int i = 0; i < k; ++i) {
        Vertex x = cycle + i, y = cycle + k + i, z = cycle + 2 * k + i;
        edges.emplace_back(4 * i, x);
        edges.emplace_back(4 * k + 4 * i, y);
        edges.emplace_back(x, y);
        edges.emplace_back(y, z);
    }
    return Graph(11 * k, std::move(edges));
}

Graph make_turan(int n, int r) {
    if (r < 1 || r > n) throw bad_params("turan needs 1 <= r <= n");
    // part sizes as even as possible, larger parts first
    std::vector<int> part_of(n);
    int q = n / r, rem = n % r, v = 0;
    for (int p = 0; p < r; ++p) {
        int size = q + (p < rem ? 1 : 0);
        for (int i = 0; i < size; ++i) part_of[v++] = p;
    }
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (part_of[a] != part_of[b]) edges.emplace_back(a, b);
    return Graph(n, std::move(edges));
}

Graph make_forbidden_caterpillar() {
    return Graph::from_pairs(7, {{0, 1}, {1, 2}, {2, 3}, {3, 5}, {2, 4}, {4, 6}});
}

Graph generate(const FamilySpec& spec) {
    const auto& p = spec.params;
    auto need = [&](size_t count, const char* what) {
        if (p.size() != count) throw bad_params(what);
    };
    switch (spec.kind) {
        case FamilyKind::Star:
            need(1, "star <leaves>");
            return make_star(p[0]);
        case FamilyKind::Path:
            need(1, "path <n>");
            return make_path(p[0]);
        case FamilyKind::Cycle:
            need(1, "cycle <n>");
            return make_cycle(p[0]);
        case FamilyKind::Matching:
            need(1, "matching <edges>");
            return make_matching(p[0]);
        case FamilyKind::Caterpillar:
            if (p.empty()) throw bad_params("caterpillar <pendants per spine vertex...>");
            return make_caterpillar(p);
        case FamilyKind::Spider:
            if (p.empty()) throw bad_params("spider <leg lengths...>");
            return make_spider(p);
        case FamilyKind::Tk:
            need(1, "tk <k>");
            return make_tk(p[0]);
        case FamilyKind::BinaryTree:
            need(1, "binary-tree <depth>");
            return make_binary_tree(p[0]);
        case FamilyKind::Gk:
            need(1, "gk <k>");
            return make_gk(p[0]);
        case FamilyKind::Turan:
            need(2, "turan <n> <parts>");
            return make_turan(p[0], p[1]);
        case FamilyKind::ForbiddenCaterpillarSubgraph:
            need(0, "forbidden-caterpillar takes no parameters");
            return make_forbidden_caterpillar();
    }
    throw bad_params("unknown family kind");
}

bool contains_forbidden_caterpillar(const Graph& tree) {
    if (!tree.is_tree()) {
        throw std::invalid_argument("contains_forbidden_caterpillar: input is not a tree");
    }
    // For a tree, an embedding of the forbidden subgraph exists iff some
    // vertex has >= 3 neighbors whose degree is >= 2.
    for (int v = 0; v < tree.n(); ++v) {
        int deep = 0;
        for (Vertex nb : tree.neighbors(v))
            if (tree.degree(nb) >= 2) ++deep;
        if (deep >= 3) return true;
    }
    return false;
}

namespace {

bool is_path_graph(const Graph& g) {
    if (g.n() == 0) return true;
    if (!g.is_connected() || g.edge_count() != g.n() - 1) return false;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

}  // namespace

TreeShape recognize(const Graph& tree) {
    if (!tree.is_tree()) throw std::invalid_argument("recognize: input is not a tree");
    TreeShape shape;

    int big = 0;  // vertices of degree >= 2 / > 2
    int over = 0;
    Vertex center = -1;
    for (int v = 0; v < tree.n(); ++v) {
        if (tree.degree(v) >= 2) ++big;
        if (tree.degree(v) > 2) {
            ++over;
            center = v;
        }
    }
    shape.is_star = big <= 1;  // no length-3 path
    auto [core, ids] = tree.minus_degree_one();
    shape.is_caterpillar = is_path_graph(core);
    shape.is_spider = over <= 1;
    if (shape.is_spider) {
        if (center >= 0) {
            for (Vertex nb : tree.neighbors(center))
                if (tree.degree(nb) >= 2) ++shape.spider_legs_ge2;
        } else {
            // a bare path: both directions from any internal vertex
            shape.spider_legs_ge2 = tree.n() >= 5 ? 2 : (tree.n() == 4 ? 1 : 0);
        }
    }
    return shape;
}

std::optional<std::pair<int, ClosedFormRule>> closed_form_hydra(const Graph& tree) {
    if (!tree.is_tree()) throw std::invalid_argument("closed_form_hydra: input is not a tree");
    if (tree.n() < 3) {
        throw std::invalid_argument("closed_form_hydra: hydra numbers need n >= 3");
    }
    TreeShape shape = recognize(tree);
    const int m = tree.edge_count();
    if (shape.is_star) return std::make_pair(m, ClosedFormRule::Star);
    if (shape.is_caterpillar) return std::make_pair(m + 1, ClosedFormRule::Caterpillar);
    if (shape.is_spider) {
        int l = shape.spider_legs_ge2;
        return std::make_pair(m + (l + 1) / 2, ClosedFormRule::Spider);
    }
    return std::nullopt;
}

int max_tree_hydra(int n) {
    if (n < 3) throw std::invalid_argument("max_tree_hydra: needs n >= 3");
    return (5 * n - 3) / 4;
}

GkCertificate gk_certificate(int k) {
    if (k < 2) throw std::invalid_argument("gk_certificate: needs k >= 2");
    const int cycle = 8 * k;

    // base: the 8k-cycle with the pendant x_i, y_i edges
    std::vector<Edge> base_edges;
    for (int j = 0; j < cycle; ++j) base_edges.emplace_back(j, (j + 1) % cycle);
    std::vector<Vertex> pendant_at(cycle, -1);
    for (int i = 0; i < k; ++i) {
        Vertex x = cycle + i, y = cycle + k + i;
        base_edges.emplace_back(4 * i, x);
        base_edges.emplace_back(4 * k + 4 * i, y);
        pendant_at[4 * i] = x;
        pendant_at[4 * k + 4 * i] = y;
    }
    Graph base(10 * k, std::move(base_edges));

    // Hamiltonian cycle of L(base): walk the cycle edges in order, inserting
    // each pendant edge between its two incident cycle edges.
    std::vector<int> lcycle;
    for (int j = 0; j < cycle; ++j) {
        if (pendant_at[j] >= 0) lcycle.push_back(base.edge_index(j, pendant_at[j]));
        lcycle.push_back(base.edge_index(j, (j + 1) % cycle));
    }
    DirectedHypergraph base_cert = build_from_line_cycle(base, lcycle);

    // k vertex-extension steps: attach z_i via the non-edge (x_i, y_i)
    Graph g = base;
    DirectedHypergraph h = base_cert;
    for (int i = 0; i < k; ++i) {
        Vertex x = cycle + i, y = cycle + k + i;
        ExtendedGraph step = extend_with_new_vertex(h, g, x, y);
        g = std::move(step.graph);
        h = std::move(step.hypergraph);
    }

    GkCertificate out;
    out.graph = std::move(g);
    out.hypergraph = std::move(h);
    out.base_graph = std::move(base);
    out.base_hypergraph = std::move(base_cert);
    out.base_line_cycle = std::move(lcycle);
    return out;
}

namespace {

// The bottom-up, left-to-right caterpillar cover of L(B_4): one caterpillar
// per depth-2 subtree plus its parent edge (7 edges each), one for the two
// root edges.
PathCover b4_caterpillar_cover(const Graph& b4) {
    PathCover cover;
    auto idx = [&](Vertex a, Vertex b) { return b4.edge_index(a, b); };
    for (Vertex c : {3, 4, 5, 6}) {
        Vertex p = (c - 1) / 2, a = 2 * c + 1, b = 2 * c + 2;
        cover.paths.push_back({idx(a, 2 * a + 1), idx(a, 2 * a + 2), idx(a, c), idx(c, p),
                               idx(c, b), idx(b, 2 * b + 1), idx(b, 2 * b + 2)});
    }
    cover.paths.push_back({idx(0, 1), idx(0, 2)});
    return cover;
}

}  // namespace

BinaryTreeReport binary_tree_report(int d, const BinaryTreeOptions& opts) {
    if (d < 1) throw std::invalid_argument("binary_tree_report: needs d >= 1");
    Graph bd = make_binary_tree(d);
    BinaryTreeReport report;
    report.depth = d;
    report.edges = bd.edge_count();
    report.g_formula = (report.edges + 6) / 7;

    if (d <= 3) {
        auto pc = min_path_cover(line_graph(bd), 16, true);
        report.g_value = pc.cover.size();
        report.g_evidence = PcnEvidence::ExactSearch;
        report.g_cover = pc.cover;
    } else if (d == 4) {
        PathCover cover = b4_caterpillar_cover(bd);
        Graph lbd = line_graph(bd);
        if (!is_valid_path_cover(lbd, cover)) {
            throw std::logic_error("binary_tree_report: constructed cover is invalid");
        }
        report.g_cover = cover;
        auto forest = max_linear_forest(lbd, opts.forest_node_cap);
        if (forest) {
            report.g_value = lbd.n() - *forest;
            report.g_evidence = PcnEvidence::ExactSearch;
        } else {
            // cover witnesses pcn <= its size; the matching lower bound did
            // not finish within budget
            report.g_evidence = PcnEvidence::ConstructedVerified;
        }
    } else {
        report.g_evidence = PcnEvidence::PropertyOnly;
    }

    if (d >= 3) {
        report.lower = report.edges + (1 << (d - 2));
        PResult p4 = p_of(bd, PStrategy::Binary4Level, opts.p);
        report.four_level_paths = p4.value;
        DirectedHypergraph cert =
            extend_spanning(build_from_path_cover(p4.subgraph, p4.cover), p4.subgraph, bd);
        if (!represents(cert, bd).ok) {
            throw std::logic_error("binary_tree_report: upper certificate failed verification");
        }
        report.upper = cert.size();
        report.upper_certificate = std::move(cert);
    }
    return report;
}

}  // namespace hydra
