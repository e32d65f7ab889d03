#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "twotree/graph.hpp"

using namespace twotree;

TEST_CASE("basic construction and queries") {
    Graph g = fixtures::p3();
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 7);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(2, 3));
    CHECK(g.degree(0) == 4);
    CHECK(g.degree(2) == 2);
    auto nb0 = g.neighbors(0);
    CHECK(std::vector<VertexId>(nb0.begin(), nb0.end()) == std::vector<VertexId>{1, 2, 3, 4});
    CHECK(g.edges().size() == 7);
}

TEST_CASE("self loops and parallel edges are rejected") {
    Graph g;
    CHECK_THROWS_AS(g.add_edge(1, 1), Error);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.finalize(), Error);
}

TEST_CASE("edge key canonical order") {
    EdgeKey e1(3, 1), e2(1, 3);
    CHECK(e1 == e2);
    CHECK(e1.a == 1);
    CHECK(e1.b == 3);
    CHECK(EdgeKey(0, 2) < EdgeKey(1, 2));
    CHECK(e1.other(1) == 3);
}

TEST_CASE("common_neighbors") {
    SUBCASE("p3 edge uv has the three apexes") {
        Graph g = fixtures::p3();
        CHECK(common_neighbors(g, EdgeKey(0, 1)) == std::vector<VertexId>{2, 3, 4});
    }
    SUBCASE("k2 has none") {
        Graph g = fixtures::k2();
        CHECK(common_neighbors(g, EdgeKey(0, 1)).empty());
    }
    SUBCASE("triangle edges see the opposite vertex") {
        Graph g = fixtures::triangle();
        CHECK(common_neighbors(g, EdgeKey(0, 1)) == std::vector<VertexId>{2});
        CHECK(common_neighbors(g, EdgeKey(0, 2)) == std::vector<VertexId>{1});
        CHECK(common_neighbors(g, EdgeKey(1, 2)) == std::vector<VertexId>{0});
    }
    SUBCASE("missing edge throws") {
        Graph g = fixtures::p3();
        CHECK_THROWS_AS(common_neighbors(g, EdgeKey(2, 3)), Error);
    }
}

TEST_CASE("close_of_vertex") {
    Graph g = fixtures::p3();
    CHECK(close_of_vertex(g, 2) == std::vector<EdgeKey>{EdgeKey(0, 1)});
    Graph t = fixtures::triangle();
    CHECK(close_of_vertex(t, 0) == std::vector<EdgeKey>{EdgeKey(1, 2)});
    Graph k = fixtures::k2();
    CHECK(close_of_vertex(k, 0).empty());
    CHECK_THROWS_AS(close_of_vertex(k, 7), Error);
}

TEST_CASE("components") {
    SUBCASE("p3 minus the base edge endpoints splits into three singletons") {
        Graph g = fixtures::p3();
        auto comps = components(g, {0, 1});
        REQUIRE(comps.size() == 3);
        CHECK(comps[0] == std::vector<VertexId>{2});
        CHECK(comps[1] == std::vector<VertexId>{3});
        CHECK(comps[2] == std::vector<VertexId>{4});
    }
    SUBCASE("nohp witness set yields five components") {
        Graph g = fixtures::nohp();
        CHECK(components(g, {0, 3, 4}).size() == 5);
    }
    SUBCASE("connected graph with nothing removed is one component") {
        Graph g = fixtures::twin();
        auto comps = components(g, {});
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].size() == g.vertex_count());
    }
    SUBCASE("empty remainder") {
        Graph g = fixtures::k2();
        CHECK(components(g, {0, 1}).empty());
    }
}

TEST_CASE("blocks and cut vertices") {
    SUBCASE("path graph") {
        Graph g = fixtures::build(3, {{0, 1}, {1, 2}});
        auto bd = blocks_and_cut_vertices(g);
        REQUIRE(bd.blocks.size() == 2);
        std::vector<std::vector<VertexId>> want{{0, 1}, {1, 2}};
        CHECK(std::is_permutation(bd.blocks.begin(), bd.blocks.end(), want.begin()));
        CHECK(bd.cut_vertices == std::vector<VertexId>{1});
    }
    SUBCASE("triangle is a single block") {
        auto bd = blocks_and_cut_vertices(fixtures::triangle());
        REQUIRE(bd.blocks.size() == 1);
        CHECK(bd.blocks[0] == std::vector<VertexId>{0, 1, 2});
        CHECK(bd.cut_vertices.empty());
    }
    SUBCASE("two triangles sharing a vertex") {
        Graph g = fixtures::build(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
        auto bd = blocks_and_cut_vertices(g);
        CHECK(bd.blocks.size() == 2);
        CHECK(bd.cut_vertices == std::vector<VertexId>{2});
    }
    SUBCASE("disconnected throws") {
        Graph g = fixtures::build(4, {{0, 1}, {2, 3}});
        CHECK_THROWS_AS(blocks_and_cut_vertices(g), Error);
    }
    SUBCASE("block data handles disconnected input") {
        Graph g = fixtures::build(4, {{0, 1}, {2, 3}});
        auto bd = detail::block_data(g);
        CHECK(bd.n_components == 2);
        CHECK(bd.block_vertices.size() == 2);
    }
    SUBCASE("blocks partition the edge set") {
        Graph g = fixtures::twin();
        auto bd = detail::block_data(g);
        std::size_t total = 0;
        for (const auto& be : bd.block_edges) total += be.size();
        CHECK(total == g.edge_count());
        for (EdgeKey e : g.edges()) CHECK(bd.block_of_edge(e) >= 0);
    }
    SUBCASE("removing a reported cut vertex disconnects") {
        Graph g = fixtures::build(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
        auto bd = blocks_and_cut_vertices(g);
        for (VertexId c : bd.cut_vertices) CHECK(components(g, {c}).size() > 1);
    }
}

TEST_CASE("vertex deletion keeps ids stable") {
    Graph g = fixtures::twin();
    Graph h = g.without_vertices({3, 5});
    CHECK(h.vertex_count() == 5);
    CHECK(!h.has_vertex(3));
    CHECK(h.has_vertex(6));
    CHECK(h.has_edge(0, 6));
    CHECK(!h.has_edge(0, 3));
    CHECK(h.vertices() == std::vector<VertexId>{0, 1, 2, 4, 6});
}

TEST_CASE("edge deletion") {
    Graph g = fixtures::triangle();
    Graph h = g.without_edges({EdgeKey(0, 1)});
    CHECK(h.vertex_count() == 3);
    CHECK(h.edge_count() == 2);
    CHECK(!h.has_edge(0, 1));
    CHECK(h.has_edge(0, 2));
}

TEST_CASE("induced subgraph") {
    Graph g = fixtures::p3();
    Graph h = g.induced({0, 1, 2});
    CHECK(h.vertex_count() == 3);
    CHECK(h.edge_count() == 3);
}

TEST_CASE("adjacency symmetry and handshake on fixtures") {
    for (const Graph& g : {fixtures::p3(), fixtures::twin(), fixtures::nohp(),
                           fixtures::fan6(), fixtures::pyramid_chain(4)}) {
        std::size_t degsum = 0;
        for (VertexId v : g.vertices()) {
            degsum += g.neighbors(v).size();
            for (VertexId w : g.neighbors(v)) {
                const auto& back = g.neighbors(w);
                CHECK(std::binary_search(back.begin(), back.end(), v));
            }
        }
        CHECK(degsum == 2 * g.edge_count());
    }
}
