#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "twotree/generator.hpp"
#include "twotree/twotree.hpp"

using namespace twotree;

TEST_CASE("is_two_tree on fixtures") {
    CHECK(is_two_tree(fixtures::k2()).ok);
    CHECK(is_two_tree(fixtures::triangle()).ok);
    CHECK(is_two_tree(fixtures::p3()).ok);
    CHECK(is_two_tree(fixtures::p4()).ok);
    CHECK(is_two_tree(fixtures::twin()).ok);
    CHECK(is_two_tree(fixtures::nohp()).ok);
    CHECK(is_two_tree(fixtures::fan6()).ok);
    for (int k = 1; k <= 5; ++k) CHECK(is_two_tree(fixtures::pyramid_chain(k)).ok);
}

TEST_CASE("rejects non-2-trees") {
    // 4-cycle
    Graph c4 = fixtures::build(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(!is_two_tree(c4).ok);
    // K4 has the right edge-density invariant broken
    Graph k4 = fixtures::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(!is_two_tree(k4).ok);
    // disconnected with matching edge count: two K2s plus padding fails anyway
    Graph disc = fixtures::build(4, {{0, 1}, {2, 3}});
    CHECK(!is_two_tree(disc).ok);
    // single vertex / empty
    Graph one = Graph::with_vertices(1);
    one.finalize();
    CHECK(!is_two_tree(one).ok);
    CHECK(!is_two_tree(Graph()).ok);
    // triangle plus pendant edge: right count of vertices/edges is not enough
    Graph pend = fixtures::build(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    CHECK(!is_two_tree(pend).ok);
}

TEST_CASE("elimination trace rebuilds the construction") {
    Graph g = fixtures::twin();
    auto check = is_two_tree(g);
    REQUIRE(check.ok);
    CHECK(check.trace.size() == g.vertex_count() - 2);
}

TEST_CASE("peo: degenerate sizes") {
    auto p2 = peo_with_degree2_endpoints(fixtures::k2());
    CHECK(p2.order == std::vector<VertexId>{0, 1});
    auto p3 = peo_with_degree2_endpoints(fixtures::triangle());
    CHECK(p3.order == std::vector<VertexId>{0, 1, 2});
    CHECK(p3.pos(2) == 2);
}

TEST_CASE("peo: fan ends at a degree-2 rim vertex") {
    Graph g = fixtures::fan6();
    auto peo = peo_with_degree2_endpoints(g);
    REQUIRE(peo.order.size() == 6);
    CHECK(g.degree(peo.order.front()) == 2);
    CHECK(g.degree(peo.order.back()) == 2);
    // After the first three rim vertices go, the hub itself drops to
    // degree 2 and is eliminated before rim vertex 4.
    CHECK(peo.order == std::vector<VertexId>{1, 2, 3, 0, 4, 5});
}

TEST_CASE("peo: simplicial property position by position") {
    auto verify_peo = [](const Graph& g) {
        auto peo = peo_with_degree2_endpoints(g);
        REQUIRE(peo.order.size() == g.vertex_count());
        std::vector<char> eliminated(g.id_bound(), 0);
        for (std::size_t i = 0; i + 2 < peo.order.size(); ++i) {
            VertexId v = peo.order[i];
            std::vector<VertexId> later;
            for (VertexId w : g.neighbors(v))
                if (!eliminated[w]) later.push_back(w);
            REQUIRE(later.size() == 2);
            CHECK(g.has_edge(later[0], later[1]));
            eliminated[v] = 1;
        }
        if (g.vertex_count() >= 3) {
            CHECK(g.degree(peo.order.front()) == 2);
            CHECK(g.degree(peo.order.back()) == 2);
        }
    };
    verify_peo(fixtures::p3());
    verify_peo(fixtures::twin());
    verify_peo(fixtures::nohp());
    verify_peo(fixtures::pyramid_chain(5));
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        GenSpec spec;
        spec.n = 12;
        spec.seed = seed;
        spec.profile = GenProfile::Any;
        verify_peo(generate(spec));
    }
}

TEST_CASE("peo rejects non-2-trees") {
    Graph c4 = fixtures::build(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK_THROWS_AS(peo_with_degree2_endpoints(c4), Error);
}

TEST_CASE("simplicial_degree2_vertices") {
    CHECK(simplicial_degree2_vertices(fixtures::p3()) == std::vector<VertexId>{2, 3, 4});
    CHECK(simplicial_degree2_vertices(fixtures::triangle()) == std::vector<VertexId>{0, 1, 2});
    CHECK(simplicial_degree2_vertices(fixtures::twin()) == std::vector<VertexId>{3, 4, 5, 6});
}

TEST_CASE("edge count invariant |E| = 2|V|-3 for generated 2-trees") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GenSpec spec;
        spec.n = 3 + static_cast<int>(seed);
        spec.seed = seed * 77 + 1;
        spec.profile = GenProfile::Any;
        Graph g = generate(spec);
        CHECK(g.edge_count() == 2 * g.vertex_count() - 3);
        CHECK(is_two_tree(g).ok);
    }
}
