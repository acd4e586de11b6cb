#include <doctest.h>

#include <algorithm>

#include "hydra/bounds.hpp"
#include "hydra/families.hpp"
#include "hydra/line_graph.hpp"
#include "hydra/path_cover.hpp"
#include "hydra/represent.hpp"
#include "hydra/solver.hpp"
#include "oracles.hpp"

using namespace hydra;

TEST_CASE("generators produce the documented shapes") {
    SUBCASE("binary trees") {
        Graph b2 = generate({FamilyKind::BinaryTree, {2}});
        CHECK(b2.n() == 7);
        CHECK(b2.edge_count() == 6);
        for (int d = 1; d <= 10; ++d) {
            Graph bd = make_binary_tree(d);
            CHECK(bd.n() == (1 << (d + 1)) - 1);
            CHECK(bd.edge_count() == (1 << (d + 1)) - 2);
            CHECK(bd.is_tree());
        }
    }
    SUBCASE("G_k layout matches the cycle-pendant-attachment description") {
        Graph g4 = make_gk(4);
        CHECK(g4.n() == 44);  // 32 cycle + 4 each of x, y, z
        CHECK(g4.edge_count() == 48);
        // x_1 hangs at v_4, y_0 at v_16, and the z attachments close the hooks
        CHECK(g4.has_edge(4, 33));
        CHECK(g4.has_edge(16, 36));
        CHECK(g4.has_edge(32, 36));  // (x_0, y_0)
        CHECK(g4.has_edge(36, 40));  // (y_0, z_0)
        CHECK(g4.degree(40) == 1);
    }
    SUBCASE("T_k spiders") {
        Graph t3 = make_tk(3);
        CHECK(t3.n() == 7);
        CHECK(t3.edge_count() == 6);
        CHECK(t3.degree(0) == 3);
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(make_gk(1), std::invalid_argument);
        CHECK_THROWS_AS(make_binary_tree(0), std::invalid_argument);
        CHECK_THROWS_AS(make_spider({0, 2}), std::invalid_argument);
        CHECK_THROWS_AS(generate({FamilyKind::Turan, {3}}), std::invalid_argument);
    }
}

TEST_CASE("recognize") {
    SUBCASE("paths are caterpillars and two-legged spiders") {
        auto shape = recognize(make_path(6));
        CHECK(shape.is_caterpillar);
        CHECK(!shape.is_star);
        CHECK(shape.is_spider);
        CHECK(shape.spider_legs_ge2 == 2);
    }
    SUBCASE("the forbidden subgraph itself is no caterpillar") {
        auto shape = recognize(make_forbidden_caterpillar());
        CHECK(!shape.is_caterpillar);
        CHECK(shape.is_spider);
        CHECK(shape.spider_legs_ge2 == 3);
        CHECK(contains_forbidden_caterpillar(make_forbidden_caterpillar()));
    }
    SUBCASE("large stars") {
        auto shape = recognize(make_star(7));
        CHECK(shape.is_star);
        CHECK(shape.is_caterpillar);  // stars are caterpillars too
        CHECK(shape.spider_legs_ge2 == 0);
    }
    SUBCASE("spine extraction and forbidden-subgraph recognizers agree on all trees") {
        for (int n = 1; n <= 10; ++n) {
            for (const Graph& t : oracle::all_trees(n)) {
                CHECK(recognize(t).is_caterpillar == !contains_forbidden_caterpillar(t));
            }
        }
    }
    SUBCASE("non-trees are rejected") {
        CHECK_THROWS_AS(recognize(make_cycle(4)), std::invalid_argument);
    }
}

TEST_CASE("closed-form hydra numbers") {
    auto t3 = closed_form_hydra(make_tk(3));
    REQUIRE(t3.has_value());
    CHECK(t3->first == 8);
    CHECK(t3->second == ClosedFormRule::Spider);

    auto p5 = closed_form_hydra(make_path(5));
    REQUIRE(p5.has_value());
    CHECK(p5->first == 5);
    CHECK(p5->second == ClosedFormRule::Caterpillar);

    CHECK(!closed_form_hydra(make_binary_tree(3)).has_value());

    SUBCASE("closed forms agree with the solver on small families") {
        for (int m = 3; m <= 6; ++m) {
            CHECK(closed_form_hydra(make_star(m))->first == hydra_number(make_star(m)).value);
        }
        for (int n = 3; n <= 8; ++n) {
            for (const Graph& t : oracle::all_trees(n)) {
                auto shape = recognize(t);
                if (!shape.is_caterpillar || shape.is_star) continue;
                CHECK(closed_form_hydra(t)->first == hydra_number(t).value);
            }
        }
        for (int k = 3; k <= 4; ++k) {
            Graph tk = make_tk(k);
            CHECK(closed_form_hydra(tk)->first == hydra_number(tk).value);
        }
        Graph mixed = make_spider({2, 2, 3});
        CHECK(closed_form_hydra(mixed)->first == hydra_number(mixed).value);
    }
}

TEST_CASE("max_tree_hydra") {
    CHECK(max_tree_hydra(7) == 8);
    CHECK(max_tree_hydra(9) == 10);
    CHECK(max_tree_hydra(3) == 3);
    SUBCASE("attained by T_k at n = 2k+1") {
        for (int k = 2; k <= 4; ++k) {
            CHECK(max_tree_hydra(2 * k + 1) == 2 * k + (k + 1) / 2);
            CHECK(max_tree_hydra(2 * k + 1) == closed_form_hydra(make_tk(k))->first);
        }
    }
    SUBCASE("no tree on <= 8 vertices exceeds the formula") {
        for (int n = 3; n <= 8; ++n) {
            for (const Graph& t : oracle::all_trees(n)) {
                CHECK(hydra_number(t).value <= max_tree_hydra(n));
            }
        }
    }
}

TEST_CASE("gk_certificate is a verified excess-0 witness") {
    for (int k : {2, 3, 4}) {
        auto gc = gk_certificate(k);
        CHECK(gc.graph == make_gk(k));
        CHECK(gc.graph.n() == 11 * k);
        CHECK(gc.hypergraph.size() == gc.graph.edge_count());
        CHECK(represents(gc.hypergraph, gc.graph).ok);
        auto profile = certificate_profile(gc.hypergraph, gc.graph);
        CHECK(profile.bodies_are_edges);
        CHECK(profile.multi_headed.empty());
        CHECK(profile.uncovered.empty());

        // the base (cycle plus pendants) is single-headed on its own
        CHECK(gc.base_hypergraph.size() == gc.base_graph.edge_count());
        CHECK(represents(gc.base_hypergraph, gc.base_graph).ok);
    }
}

TEST_CASE("gk_certificate(4) realizes the expected line-cycle arrows") {
    auto gc = gk_certificate(4);
    auto has = [&](Vertex a, Vertex b, Vertex w) {
        Hyperarc arc(a, b, w);
        auto arcs = gc.hypergraph.arcs();
        return std::find(arcs.begin(), arcs.end(), arc) != arcs.end();
    };
    // chain arcs along the cycle
    CHECK(has(0, 1, 2));
    CHECK(has(1, 2, 3));
    // pendant insertions: ...v31v0 -> x0v0 -> v0v1... and around x_1 at v_4
    CHECK(has(31, 0, 32));
    CHECK(has(0, 32, 1));
    CHECK(has(3, 4, 33));
    CHECK(has(4, 33, 5));
    // extension-step arcs: x_0,y_0 -> z_0 and y_0,z_0 -> v_16
    CHECK(has(32, 36, 40));
    CHECK(has(36, 40, 16));
}

TEST_CASE("binary_tree_report") {
    SUBCASE("d = 3: both hydra bounds meet at 16 and pcn is exactly 2") {
        auto rep = binary_tree_report(3);
        CHECK(rep.edges == 14);
        CHECK(rep.lower == 16);
        CHECK(rep.lower >= (9 * rep.edges + 7) / 8);
        CHECK(rep.upper == 16);
        CHECK(rep.upper <= (17 * rep.edges) / 15 + 1);
        REQUIRE(rep.upper_certificate.has_value());
        CHECK(represents(*rep.upper_certificate, make_binary_tree(3)).ok);
        CHECK(rep.g_formula == 2);
        REQUIRE(rep.g_value.has_value());
        CHECK(*rep.g_value == 2);
        CHECK(rep.g_evidence == PcnEvidence::ExactSearch);
    }
    SUBCASE("d = 4: verified construction, pcn 5 via cover plus exhaustive search") {
        auto rep = binary_tree_report(4);
        CHECK(rep.edges == 30);
        CHECK(rep.lower == 34);
        CHECK(rep.lower >= (9 * rep.edges + 7) / 8);
        CHECK(rep.upper <= (17 * rep.edges) / 15 + 1);
        REQUIRE(rep.upper_certificate.has_value());
        CHECK(represents(*rep.upper_certificate, make_binary_tree(4)).ok);
        CHECK(rep.g_formula == 5);
        REQUIRE(rep.g_cover.has_value());
        CHECK(is_valid_path_cover(line_graph(make_binary_tree(4)), *rep.g_cover));
        CHECK(rep.g_cover->size() == 5);
        if (rep.g_evidence == PcnEvidence::ExactSearch) {
            CHECK(*rep.g_value == 5);
        }
    }
    SUBCASE("the g vs four-level gap becomes visible at depth 7") {
        // ceil(254/7) = 37 caterpillar paths, but deleting every fourth level
        // needs only 34; formula-level evidence for the separation direction
        BinaryTreeOptions opts;
        auto rep = binary_tree_report(7, opts);
        CHECK(rep.g_formula == 37);
        CHECK(rep.four_level_paths == 34);
        CHECK(rep.g_formula - rep.four_level_paths > 0);
        CHECK(rep.g_evidence == PcnEvidence::PropertyOnly);
    }
}

TEST_CASE("turan graphs") {
    Graph t62 = make_turan(6, 2);
    CHECK(t62.edge_count() == 9);  // K_{3,3}
    CHECK(t62.degree(0) == 3);

    Graph t52 = make_turan(5, 2);
    CHECK(t52.edge_count() == 6);  // K_{2,3}

    Graph tnn = make_turan(5, 5);
    CHECK(tnn.edge_count() == 10);  // K_5
}
