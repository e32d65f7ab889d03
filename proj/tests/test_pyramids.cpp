#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "twotree/generator.hpp"
#include "twotree/graph.hpp"
#include "twotree/oracle.hpp"
#include "twotree/pyramids.hpp"

using namespace twotree;

TEST_CASE("pyramid_report counts") {
    SUBCASE("p3: base edge counts 3, all others 1") {
        auto report = pyramid_report(fixtures::p3());
        CHECK(report.count(EdgeKey(0, 1)) == 3);
        for (EdgeKey e : fixtures::p3().edges())
            if (e != EdgeKey(0, 1)) CHECK(report.count(e) == 1);
        CHECK(report.three_pyramid_edges == std::vector<EdgeKey>{EdgeKey(0, 1)});
        CHECK(report.four_plus_edges.empty());
    }
    SUBCASE("p4: base edge counts 4") {
        auto report = pyramid_report(fixtures::p4());
        CHECK(report.count(EdgeKey(0, 1)) == 4);
        CHECK(report.four_plus_edges == std::vector<EdgeKey>{EdgeKey(0, 1)});
    }
    SUBCASE("fan6: hub spokes to inner rim count 2") {
        auto report = pyramid_report(fixtures::fan6());
        int max_count = 0;
        report.for_each([&](EdgeKey, int c) { max_count = std::max(max_count, c); });
        CHECK(max_count == 2);
        CHECK(report.three_pyramid_edges.empty());
        CHECK(report.count(EdgeKey(0, 2)) == 2);
        CHECK(report.count(EdgeKey(0, 1)) == 1);
    }
    SUBCASE("counts agree with direct intersection") {
        for (const Graph& g : {fixtures::twin(), fixtures::nohp(), fixtures::pyramid_chain(4)}) {
            auto report = pyramid_report(g);
            for (EdgeKey e : g.edges())
                CHECK(report.count(e) == static_cast<int>(common_neighbors(g, e).size()));
        }
    }
    SUBCASE("non-2-tree throws") {
        Graph c4 = fixtures::build(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
        CHECK_THROWS_AS(pyramid_report(c4), Error);
    }
}

TEST_CASE("classify") {
    CHECK(classify(pyramid_report(fixtures::fan6())) == CaseLabel::ThreePyramidFree);
    CHECK(classify(pyramid_report(fixtures::k2())) == CaseLabel::ThreePyramidFree);
    CHECK(classify(pyramid_report(fixtures::p3())) == CaseLabel::ExactlyOneThreePyramid);
    CHECK(classify(pyramid_report(fixtures::twin())) == CaseLabel::TwoPlusThreePyramids);
    CHECK(classify(pyramid_report(fixtures::nohp())) == CaseLabel::TwoPlusThreePyramids);
    CHECK(classify(pyramid_report(fixtures::p4())) == CaseLabel::HasFourPyramid);
}

TEST_CASE("component count equals common-neighbor count") {
    auto check_identity = [](const Graph& g) {
        auto report = pyramid_report(g);
        for (EdgeKey e : g.edges()) {
            auto comps = components(g, {e.a, e.b});
            CHECK(static_cast<int>(comps.size()) == report.count(e));
        }
    };
    check_identity(fixtures::p3());
    check_identity(fixtures::p4());
    check_identity(fixtures::twin());
    check_identity(fixtures::nohp());
    check_identity(fixtures::fan6());
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        GenSpec spec;
        spec.n = 4 + static_cast<int>(seed % 11);
        spec.seed = seed;
        spec.profile = seed % 2 ? GenProfile::Any : GenProfile::ThreePyramidFree;
        check_identity(generate(spec));
    }
}

TEST_CASE("subset separator bound on small instances") {
    // 3-pyramid-free: every vertex subset S leaves at most |S| components.
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        GenSpec spec;
        spec.n = 8;
        spec.seed = seed;
        spec.profile = GenProfile::ThreePyramidFree;
        Graph g = generate(spec);
        CHECK(!chvatal_check(g, 4).has_value());
    }
    // Any 3-pyramid edge violates it with S = {u, v}.
    auto report = pyramid_report(fixtures::p3());
    EdgeKey uv = report.three_pyramid_edges[0];
    CHECK(components(fixtures::p3(), {uv.a, uv.b}).size() > 2);
}
