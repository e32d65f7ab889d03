#include "twotree/twotree.hpp"

#include <algorithm>

#include "working_graph.hpp"

namespace twotree {

using detail::IdHeap;
using detail::WorkingGraph;

TwoTreeCheck is_two_tree(const Graph& g) {
    TwoTreeCheck out;
    std::size_t n = g.vertex_count();
    if (n < 2) return out;
    if (g.edge_count() != 2 * n - 3) return out;
    if (n == 2) {
        out.ok = true;
        return out;
    }

    WorkingGraph w(g);
    IdHeap heap(g.id_bound());
    for (VertexId v : g.vertices())
        if (w.degree(v) == 2) heap.push(v);

    while (w.alive_count() > 2 && !heap.empty()) {
        VertexId v = heap.pop();
        if (!w.alive(v) || w.degree(v) != 2) continue;
        auto [a, b] = w.two_neighbors(v);
        if (!g.has_edge(a, b)) continue;  // not simplicial; in a 2-tree this never recurs
        out.trace.push_back(v);
        w.remove_degree2(v, a, b);
        if (w.degree(a) == 2) heap.push(a);
        if (w.degree(b) == 2) heap.push(b);
    }

    if (w.alive_count() != 2) {
        out.trace.clear();
        return out;
    }
    auto rest = w.alive_vertices();
    if (!g.has_edge(rest[0], rest[1])) {
        out.trace.clear();
        return out;
    }
    out.ok = true;
    return out;
}

static void require_two_tree(const Graph& g) {
    if (!is_two_tree(g).ok) throw Error(Errc::NotTwoTree, "input is not a 2-tree");
}

Peo peo_with_degree2_endpoints(const Graph& g) {
    require_two_tree(g);
    Peo peo;
    peo.position.assign(g.id_bound(), -1);

    auto verts = g.vertices();
    if (verts.size() == 2) {
        peo.order = verts;
        peo.position[verts[0]] = 0;
        peo.position[verts[1]] = 1;
        return peo;
    }

    // Withhold the highest-id degree-2 vertex so it lands in the final slot.
    VertexId withheld = -1;
    for (VertexId v : verts)
        if (g.degree(v) == 2) withheld = std::max(withheld, v);

    WorkingGraph w(g);
    IdHeap heap(g.id_bound());
    for (VertexId v : verts)
        if (w.degree(v) == 2 && v != withheld) heap.push(v);

    VertexId last_removed = -1;
    while (w.alive_count() > 3) {
        if (heap.empty()) throw Error(Errc::NotTwoTree, "elimination stalled");
        VertexId v = heap.pop();
        if (!w.alive(v) || w.degree(v) != 2 || v == withheld) continue;
        peo.order.push_back(v);
        last_removed = v;
        auto [a, b] = w.two_neighbors(v);
        w.remove_degree2(v, a, b);
        if (w.degree(a) == 2 && a != withheld) heap.push(a);
        if (w.degree(b) == 2 && b != withheld) heap.push(b);
    }
    // Final triangle (c, d, withheld): keep the sweep order of the
    // triangulation by finishing first the vertex that hangs on the last
    // removed apex through a chord (two common neighbors); its mate lies on
    // the outer cycle next to v_k.
    auto rest = w.alive_vertices();
    std::vector<VertexId> tail;
    for (VertexId v : rest)
        if (v != withheld) tail.push_back(v);
    if (tail.size() == 2 && last_removed != -1) {
        auto chord_to_last = [&](VertexId x) {
            return g.has_edge(last_removed, x) &&
                   common_neighbors(g, EdgeKey(last_removed, x)).size() >= 2;
        };
        if (!chord_to_last(tail[0]) && chord_to_last(tail[1])) std::swap(tail[0], tail[1]);
    }
    for (VertexId v : tail) peo.order.push_back(v);
    peo.order.push_back(withheld);

    for (std::size_t i = 0; i < peo.order.size(); ++i) peo.position[peo.order[i]] = static_cast<int>(i);
    return peo;
}

std::vector<VertexId> simplicial_degree2_vertices(const Graph& g) {
    require_two_tree(g);
    std::vector<VertexId> out;
    for (VertexId v : g.vertices()) {
        if (g.degree(v) != 2) continue;
        const auto& nb = g.neighbors(v);
        if (g.has_edge(nb[0], nb[1])) out.push_back(v);
    }
    return out;
}

}  // namespace twotree
