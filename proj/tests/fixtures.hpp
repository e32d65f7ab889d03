#pragma once

#include <utility>
#include <vector>

#include "twotree/graph.hpp"

// Canonical fixtures shared across the test suites.
namespace fixtures {

using twotree::Graph;
using twotree::VertexId;

inline Graph build(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    Graph g = Graph::with_vertices(n);
    for (auto [a, b] : edges) g.add_edge(a, b);
    g.finalize();
    return g;
}

// Single edge 0-1.
inline Graph k2() { return build(2, {{0, 1}}); }

inline Graph triangle() { return build(3, {{0, 1}, {0, 2}, {1, 2}}); }

// Hub 0, rim 1..5.
inline Graph fan6() {
    return build(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
}

// u(0), v(1) with three apexes a(2), b(3), c(4): the 3-pyramid.
inline Graph p3() {
    return build(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}});
}

// p3 plus d(5): the 4-pyramid.
inline Graph p4() {
    return build(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}, {0, 5}, {1, 5}});
}

// Two 3-pyramids (on uv and ua); has a Hamiltonian path.
// u(0), v(1), a(2), b(3), c(4), d(5), e(6).
inline Graph twin() {
    return build(7, {{0, 1},
                     {0, 2},
                     {1, 2},
                     {0, 3},
                     {1, 3},
                     {0, 4},
                     {1, 4},
                     {0, 5},
                     {2, 5},
                     {0, 6},
                     {2, 6}});
}

// Three 3-pyramids, 4-pyramid free, no Hamiltonian path (witness S = {0,3,4}).
// u(0), v(1), a(2), b(3), c(4), d(5), e(6), f(7), g(8).
inline Graph nohp() {
    return build(9, {{0, 1},
                     {0, 2},
                     {1, 2},
                     {0, 3},
                     {1, 3},
                     {0, 4},
                     {1, 4},
                     {0, 5},
                     {3, 5},
                     {0, 6},
                     {3, 6},
                     {0, 7},
                     {4, 7},
                     {0, 8},
                     {4, 8}});
}

// Chain of k 3-pyramids linked through carrier vertices, n = 2k + 3.
// k = 1 is the p3 fixture, k = 2 the twin fixture; every member has a
// Hamiltonian path and k >= 2 drives the pipeline all the way to G2.
inline Graph pyramid_chain(int k) {
    Graph g;
    g.add_edge(0, 1);
    VertexId next = 2;
    VertexId prev_carrier = 0;
    VertexId ea = 0, eb = 1;
    for (int i = 1; i <= k; ++i) {
        bool last = (i == k);
        int fresh = (i == 1) ? 3 : 2;
        VertexId carrier = -1;
        if (!last) {
            carrier = next++;
            g.add_edge(ea, carrier);
            g.add_edge(eb, carrier);
            --fresh;
        }
        for (int j = 0; j < fresh; ++j) {
            VertexId apex = next++;
            g.add_edge(ea, apex);
            g.add_edge(eb, apex);
        }
        if (!last) {
            ea = prev_carrier;
            eb = carrier;
            if (ea > eb) std::swap(ea, eb);
            prev_carrier = carrier;
        }
    }
    g.finalize();
    return g;
}

}  // namespace fixtures
