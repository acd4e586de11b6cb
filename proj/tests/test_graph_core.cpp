#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "hydra/graph.hpp"
#include "hydra/hypergraph.hpp"
#include "hydra/io.hpp"
#include "hydra/represent.hpp"
#include "oracles.hpp"

using namespace hydra;

namespace {

// the 7-arc hypergraph representing the depth-2 binary tree (heap labels)
DirectedHypergraph b2_certificate() {
    return DirectedHypergraph(7, {
                                     Hyperarc(1, 4, 3),
                                     Hyperarc(1, 3, 0),
                                     Hyperarc(0, 1, 2),
                                     Hyperarc(0, 2, 6),
                                     Hyperarc(2, 6, 5),
                                     Hyperarc(2, 5, 1),
                                     Hyperarc(2, 5, 4),
                                 });
}

Graph b2_graph() {
    return Graph::from_pairs(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
}

}  // namespace

TEST_CASE("edges canonicalize and reject self-loops") {
    Edge e(5, 2);
    CHECK(e.u == 2);
    CHECK(e.v == 5);
    CHECK(e.other(2) == 5);
    CHECK_THROWS_AS(Edge(3, 3), std::invalid_argument);
}

TEST_CASE("graph basics: dedup, adjacency, components, bridges") {
    Graph g = Graph::from_pairs(5, {{0, 1}, {1, 0}, {1, 2}, {3, 4}});
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.component_count() == 2);
    CHECK(!g.is_connected());

    auto bridges = g.bridges();
    CHECK(bridges.size() == 3);  // every edge of a forest

    Graph cycle = Graph::from_pairs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(cycle.bridges().empty());
    CHECK(cycle.is_connected());
    CHECK(!cycle.is_tree());

    Graph with_pendant = Graph::from_pairs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    auto b = with_pendant.bridges();
    REQUIRE(b.size() == 1);
    CHECK(b[0] == Edge(0, 4));
}

TEST_CASE("hyperarc invariants") {
    Hyperarc a(4, 1, 3);
    CHECK(a.u == 1);
    CHECK(a.v == 4);
    CHECK(a.w == 3);
    // redundant arcs like x,y -> x are rejected outright
    CHECK_THROWS_AS(Hyperarc(1, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(Hyperarc(1, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(Hyperarc(1, 1, 0), std::invalid_argument);
}

TEST_CASE("closure on the binary-tree example marks everything from any edge") {
    auto h = b2_certificate();
    auto cl = closure(h, {0, 1});
    CHECK(cl == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6});
    // and from the deepest edge too
    CHECK(closure(h, {2, 5}).size() == 7);
}

TEST_CASE("closure with no applicable arcs returns the seeds") {
    DirectedHypergraph empty(5, {});
    CHECK(closure(empty, {1, 3}) == std::vector<Vertex>{1, 3});
    auto h = b2_certificate();
    CHECK(closure(h, {3, 6}) == std::vector<Vertex>{3, 6});  // non-adjacent pair
    CHECK_THROWS_AS(closure(empty, {7}), std::out_of_range);
}

TEST_CASE("closure equals the naive fixpoint oracle on random instances") {
    std::mt19937 rng(1337);
    DirectedHypergraph h = oracle::random_hypergraph(rng, 6, 8);
    std::vector<Vertex> seeds{0, 3};
    auto fast = closure(h, seeds);

    std::vector<int> order(h.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    for (int trial = 0; trial < 100; ++trial) {
        std::shuffle(order.begin(), order.end(), rng);
        CHECK(oracle::naive_closure(h, seeds, order) == fast);
    }
}

TEST_CASE("closure properties hold on seeded random instances") {
    std::mt19937 rng(20240901);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 3 + static_cast<int>(rng() % 8);
        int arcs = static_cast<int>(rng() % (3 * n));
        DirectedHypergraph h = oracle::random_hypergraph(rng, n, arcs);
        std::vector<Vertex> s;
        for (int v = 0; v < n; ++v)
            if (rng() % 3 == 0) s.push_back(v);
        auto cl = closure(h, s);

        // extensivity
        for (Vertex v : s) CHECK(std::binary_search(cl.begin(), cl.end(), v));
        // idempotence
        CHECK(closure(h, cl) == cl);
        // monotonicity: add one more seed
        std::vector<Vertex> bigger = s;
        bigger.push_back(static_cast<int>(rng() % n));
        auto cl2 = closure(h, bigger);
        CHECK(std::includes(cl2.begin(), cl2.end(), cl.begin(), cl.end()));
        // arc monotonicity: dropping an arc never grows the closure
        if (h.size() > 0) {
            std::vector<Hyperarc> fewer(h.arcs().begin(), h.arcs().end() - 1);
            auto cl3 = closure(DirectedHypergraph(n, fewer), s);
            CHECK(std::includes(cl.begin(), cl.end(), cl3.begin(), cl3.end()));
        }
        // confluence vs. the naive oracle
        CHECK(oracle::naive_closure(h, s) == cl);
    }
}

TEST_CASE("represents: binary-tree example and failure modes") {
    auto h = b2_certificate();
    auto g = b2_graph();
    CHECK(represents(h, g).ok);

    SUBCASE("empty hypergraph violates condition (i) on every edge") {
        auto report = represents(DirectedHypergraph(7, {}), g);
        CHECK(!report.ok);
        CHECK(report.violations.size() == 6);
        for (const auto& v : report.violations) {
            CHECK(v.kind == ViolationKind::EdgeClosureIncomplete);
            CHECK(v.witness.size() == 2);
        }
    }
    SUBCASE("an arc with a non-edge body leaks through condition (ii)") {
        auto bad = h.merged({Hyperarc(3, 4, 0)});
        auto report = represents(bad, g);
        CHECK(!report.ok);
        bool found = false;
        for (const auto& v : report.violations) {
            if (v.pair == Edge(3, 4)) {
                CHECK(v.kind == ViolationKind::NonedgeClosureLeaks);
                found = true;
            }
        }
        CHECK(found);
    }
    SUBCASE("dimension mismatch is an error") {
        CHECK_THROWS_AS(represents(DirectedHypergraph(6, {}), g), std::invalid_argument);
    }
}

TEST_CASE("the cyclic chain construction represents a cycle") {
    // v1,v2->v3; v2,v3->v4; ...; wrapping around the 5-cycle
    std::vector<Hyperarc> arcs;
    for (int i = 0; i < 5; ++i) arcs.emplace_back(i, (i + 1) % 5, (i + 2) % 5);
    Graph c5 = Graph::from_pairs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(represents(DirectedHypergraph(5, arcs), c5).ok);
}

TEST_CASE("certificate_profile classifies the binary-tree certificate") {
    auto profile = certificate_profile(b2_certificate(), b2_graph());
    CHECK(profile.bodies_are_edges);
    CHECK(profile.excess == 1);
    CHECK(profile.uncovered.empty());
    REQUIRE(profile.multi_headed.size() == 1);
    CHECK(profile.multi_headed[0] == Edge(2, 5));
    CHECK(profile.single_headed.size() == 5);
}

TEST_CASE("certificate_profile on an empty hypergraph against a star") {
    Graph star = Graph::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}});
    auto profile = certificate_profile(DirectedHypergraph(4, {}), star);
    CHECK(profile.uncovered.size() == 3);
    CHECK(profile.excess == -3);
    CHECK(profile.bodies_are_edges);
}

TEST_CASE("normalize strips isolated vertices and reindexes") {
    Graph g = Graph::from_pairs(5, {{0, 1}, {1, 3}});  // 2 and 4 isolated
    auto norm = normalize(g);
    CHECK(norm.removed == 2);
    CHECK(norm.graph.n() == 3);
    CHECK(norm.graph.edge_count() == 2);
    CHECK(norm.kept == std::vector<Vertex>{0, 1, 3});

    SUBCASE("identity on graphs with no isolated vertices") {
        auto again = normalize(norm.graph);
        CHECK(again.removed == 0);
        CHECK(again.graph == norm.graph);
    }
    SUBCASE("edgeless graph collapses entirely") {
        auto empty = normalize(Graph(3, {}));
        CHECK(empty.removed == 3);
        CHECK(empty.graph.n() == 0);
    }
}

TEST_CASE("graph text format round-trips and reports malformed input") {
    Graph g = b2_graph();
    CHECK(parse_graph(write_graph(g)) == g);

    CHECK(parse_graph("3 1  # triangle minus two edges\n0 1\n") ==
          Graph::from_pairs(3, {{0, 1}}));
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1\n0 2\n"), ParseError);   // out of range
    CHECK_THROWS_AS(parse_graph("3 1\n1 1\n"), ParseError);   // self-loop
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), ParseError);   // edge count mismatch
    CHECK_THROWS_AS(parse_graph("3 1\n0 1 9\n"), ParseError); // trailing tokens
}

TEST_CASE("certificate JSON round-trips bit-exactly") {
    auto h = b2_certificate();
    std::string text = write_certificate(h);
    CHECK(parse_certificate(text) == h);
    CHECK(write_certificate(parse_certificate(text)) == text);
    // arcs in the serialized form are sorted by (body, head)
    CHECK(text == "{\"arcs\":[[0,1,2],[0,2,6],[1,3,0],[1,4,3],[2,5,1],[2,5,4],[2,6,5]],"
                  "\"n\":7}");
    CHECK_THROWS_AS(parse_certificate("{\"n\": 3}"), ParseError);
    CHECK_THROWS_AS(parse_certificate("{\"n\": 3, \"arcs\": [[0,1,1]]}"), ParseError);
    CHECK_THROWS_AS(parse_certificate("not json"), ParseError);
}

TEST_CASE("single-headed-neighbor rule on verified certificates") {
    // In every verified certificate with n >= 4, a single-headed edge's head
    // neighbors one of its endpoints.
    auto check_rule = [](const DirectedHypergraph& h, const Graph& g) {
        REQUIRE(represents(h, g).ok);
        if (g.n() < 4) return;
        auto profile = certificate_profile(h, g);
        for (const Edge& e : profile.single_headed) {
            Vertex head = -1;
            for (const Hyperarc& a : h.arcs()) {
                if (a.body() == e) head = a.w;
            }
            bool neighbor = g.has_edge(head, e.u) || g.has_edge(head, e.v);
            CHECK(neighbor);
        }
    };
    check_rule(b2_certificate(), b2_graph());
    std::vector<Hyperarc> cyc;
    for (int i = 0; i < 6; ++i) cyc.emplace_back(i, (i + 1) % 6, (i + 2) % 6);
    check_rule(DirectedHypergraph(6, cyc),
               Graph::from_pairs(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}));
}

TEST_CASE("bodies restricted to edges make condition (ii) vacuous") {
    // one-time property: arcs whose bodies are edges of g can never leak a
    // non-edge pair's closure, because such a closure never contains a body
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph g = oracle::random_graph(rng, n, 1 + static_cast<int>(rng() % (2 * n)));
        std::vector<Hyperarc> arcs;
        for (const Edge& e : g.edges()) {
            for (int tries = 0; tries < 2; ++tries) {
                Vertex w = static_cast<int>(rng() % n);
                if (!e.contains(w)) arcs.emplace_back(e.u, e.v, w);
            }
        }
        DirectedHypergraph h(n, arcs);
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (g.has_edge(u, v)) continue;
                CHECK(closure(h, {u, v}).size() == 2);
            }
        }
    }
}
