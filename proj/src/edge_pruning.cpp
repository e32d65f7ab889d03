#include "twotree/edge_pruning.hpp"

#include <algorithm>

#include "twotree/pyramids.hpp"

namespace twotree {

std::vector<EdgeKey> PruneSets::all_edges_sorted() const {
    std::vector<EdgeKey> out;
    out.insert(out.end(), e1.begin(), e1.end());
    out.insert(out.end(), e2.begin(), e2.end());
    out.insert(out.end(), e3.begin(), e3.end());
    out.insert(out.end(), e4.begin(), e4.end());
    out.insert(out.end(), e5.begin(), e5.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

EdgeClassTable classify_edges(const G1Instance& inst) {
    const Graph& g = inst.graph;
    if (g.vertex_count() < 2)
        throw Error(Errc::PreconditionViolated, "classify_edges needs >= 2 vertices");

    auto report = pyramid_report(g);
    if (!report.three_pyramid_edges.empty() || !report.four_plus_edges.empty())
        throw Error(Errc::PreconditionViolated, "classify_edges needs a 3-pyramid-free 2-tree");

    EdgeClassTable table;
    std::vector<std::vector<EdgeKey>> ns_at(g.id_bound());
    report.for_each([&](EdgeKey e, int c) {
        if (c >= 2) {
            table.separator.insert(e);
        } else {
            table.non_separator.insert(e);
            ns_at[e.a].push_back(e);
            ns_at[e.b].push_back(e);
        }
    });

    const Peo& sigma = inst.sigma;
    for (VertexId v : g.vertices()) {
        if (g.degree(v) <= 2) continue;
        for (EdgeKey e : ns_at[v]) {
            VertexId o = e.other(v);
            if (sigma.pos(o) < sigma.pos(v)) {
                auto it = table.left_ns.find(v);
                if (it == table.left_ns.end() || sigma.pos(it->second.other(v)) < sigma.pos(o))
                    table.left_ns[v] = e;
            } else {
                auto it = table.right_ns.find(v);
                if (it == table.right_ns.end() || sigma.pos(it->second.other(v)) > sigma.pos(o))
                    table.right_ns[v] = e;
            }
        }
    }

    for (VertexId v : g.vertices())
        if (g.degree(v) >= 5) table.star_vertices.push_back(v);

    // Forced stars: seeded by a blue left non-separator edge, then propagated
    // along separator edges towards higher sigma positions.
    std::vector<VertexId> stars_by_pos = table.star_vertices;
    std::sort(stars_by_pos.begin(), stars_by_pos.end(),
              [&](VertexId a, VertexId b) { return sigma.pos(a) < sigma.pos(b); });
    std::vector<char> is_star(g.id_bound(), 0);
    for (VertexId v : table.star_vertices) is_star[v] = 1;
    for (VertexId v : stars_by_pos) {
        const EdgeKey* left = table.left_of(v);
        bool forced = (left && inst.blue.is_blue(*left)) || table.forced_stars.count(v) != 0;
        if (!forced) continue;
        table.forced_stars.insert(v);
        for (VertexId w : g.neighbors(v)) {
            if (!is_star[w] || sigma.pos(w) <= sigma.pos(v)) continue;
            if (table.is_separator(EdgeKey(v, w))) table.forced_stars.insert(w);
        }
    }
    for (VertexId v : table.star_vertices) {
        if (!table.forced_stars.count(v)) continue;
        const EdgeKey* right = table.right_of(v);
        if (right && inst.blue.is_blue(*right)) table.double_forced_stars.insert(v);
    }

    // Left/right separator edges of blue separator edges at star vertices.
    for (VertexId y : table.star_vertices) {
        std::vector<std::pair<int, EdgeKey>> seps;  // (sigma pos of far end, edge)
        for (VertexId w : g.neighbors(y)) {
            EdgeKey e(y, w);
            if (table.is_separator(e)) seps.emplace_back(sigma.pos(w), e);
        }
        std::sort(seps.begin(), seps.end());
        for (const auto& [jpos, e] : seps) {
            if (!inst.blue.is_blue(e)) continue;
            const std::pair<int, EdgeKey>* lo = nullptr;
            const std::pair<int, EdgeKey>* hi = nullptr;
            for (const auto& cand : seps) {
                if (cand.first < jpos && (!lo || cand.first > lo->first)) lo = &cand;
                if (cand.first > jpos && (!hi || cand.first < hi->first)) hi = &cand;
            }
            if (lo) table.left_sep[{y, e}] = lo->second;
            if (hi) table.right_sep[{y, e}] = hi->second;
        }
    }
    return table;
}

std::vector<EdgeKey> compute_e1(const G1Instance& inst, const EdgeClassTable&) {
    std::vector<EdgeKey> out;
    for (EdgeKey e : inst.graph.edges()) {
        if (inst.blue.is_blue(e)) continue;
        if (inst.blue_deg[e.a] == 2 || inst.blue_deg[e.b] == 2) out.push_back(e);
    }
    return out;
}

std::vector<EdgeKey> compute_e2(const G1Instance& inst, const EdgeClassTable& table,
                                std::map<EdgeKey, std::string>* prov) {
    const Graph& g = inst.graph;
    const Peo& sigma = inst.sigma;
    std::vector<EdgeKey> out;
    auto emit = [&](EdgeKey e, const char* rule) {
        out.push_back(e);
        if (prov) prov->emplace(e, rule);
    };

    for (EdgeKey be : inst.blue.blue_edges_sorted()) {
        if (!table.is_separator(be)) continue;
        // The rule fires per endpoint of the blue separator edge.  A
        // Hamiltonian path through the blue edge can continue from y only
        // along the fan-adjacent separator edges (the left/right separator
        // edges of the blue edge); every farther separator edge goes.
        for (VertexId y : {be.a, be.b}) {
            VertexId vj = be.other(y);
            int j = sigma.pos(vj);
            int lo = -1, hi = -1;  // sigma positions of the nearest separator
                                   // targets below and above vj
            for (VertexId w : g.neighbors(y)) {
                if (w == vj || !table.is_separator(EdgeKey(y, w))) continue;
                int l = sigma.pos(w);
                if (l < j && l > lo) lo = l;
                if (l > j && (hi == -1 || l < hi)) hi = l;
            }
            bool saw_low = false, saw_high = false;
            for (VertexId w : g.neighbors(y)) {
                if (w == vj) continue;
                EdgeKey e(y, w);
                if (!table.is_separator(e) || inst.blue.is_blue(e)) continue;
                int l = sigma.pos(w);
                if (l < j && l != lo) {
                    emit(e, "E2a");
                    saw_low = true;
                } else if (l > j && l != hi) {
                    emit(e, "E2a");
                    saw_high = true;
                }
            }
            if (saw_low) {
                const EdgeKey* left = table.left_of(y);
                if (left && !inst.blue.is_blue(*left)) emit(*left, "E2b");
            }
            if (saw_high) {
                const EdgeKey* right = table.right_of(y);
                if (right && !inst.blue.is_blue(*right)) emit(*right, "E2c");
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<EdgeKey> compute_e3(const G1Instance& inst, const EdgeClassTable& table,
                                VertexId endpoint_u, VertexId endpoint_x) {
    const Graph& g = inst.graph;
    std::vector<EdgeKey> out;
    // The path sweeps from the sigma-low endpoint towards the sigma-high one,
    // so the component tests pair the blue path's low end with the low
    // endpoint and its high end with the high endpoint.
    VertexId lo_end = endpoint_u, hi_end = endpoint_x;
    if (inst.sigma.pos(lo_end) > inst.sigma.pos(hi_end)) std::swap(lo_end, hi_end);
    auto bp = blue_paths(g, inst.blue, &inst.sigma);
    for (const auto& path : bp.paths) {
        if (path.size() <= 2) continue;
        VertexId vi = path.front();
        VertexId vj = path.back();
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            EdgeKey pe(path[i], path[i + 1]);
            if (!table.is_separator(pe)) continue;
            auto comps = components(g, {pe.a, pe.b});
            auto comp_of = [&](VertexId v) -> const std::vector<VertexId>* {
                for (const auto& c : comps)
                    if (std::binary_search(c.begin(), c.end(), v)) return &c;
                return nullptr;
            };
            const auto* clo = comp_of(lo_end);
            const auto* chi = comp_of(hi_end);
            if (clo && std::binary_search(clo->begin(), clo->end(), vi)) {
                const EdgeKey* right = table.right_of(vi);
                if (right && !inst.blue.is_blue(*right)) out.push_back(*right);
            }
            if (chi && std::binary_search(chi->begin(), chi->end(), vj)) {
                const EdgeKey* left = table.left_of(vj);
                if (left && !inst.blue.is_blue(*left)) out.push_back(*left);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<VertexId> unique_cycle_3pf(const Graph& g) {
    if (g.vertex_count() < 3)
        throw Error(Errc::PreconditionViolated, "cycle needs >= 3 vertices");
    auto report = pyramid_report(g);
    return detail::unique_cycle_from_report(g, report);
}

namespace detail {

std::vector<VertexId> unique_cycle_from_report(const Graph& g, const PyramidReport& report) {
    if (g.vertex_count() < 3)
        throw Error(Errc::PreconditionViolated, "cycle needs >= 3 vertices");
    if (!report.three_pyramid_edges.empty() || !report.four_plus_edges.empty())
        throw Error(Errc::PreconditionViolated, "graph has a 3-pyramid");

    // Exactly two cycle neighbors per vertex: flat pair array.
    std::vector<std::array<VertexId, 2>> cyc(g.id_bound(), {-1, -1});
    bool regular = true;
    auto attach = [&](VertexId v, VertexId w) {
        if (cyc[v][0] == -1)
            cyc[v][0] = w;
        else if (cyc[v][1] == -1)
            cyc[v][1] = w;
        else
            regular = false;
    };
    report.for_each([&](EdgeKey e, int c) {
        if (c != 1) return;
        attach(e.a, e.b);
        attach(e.b, e.a);
    });
    if (!regular)
        throw Error(Errc::ConstructionFailed, "non-separator edges are not 2-regular");
    for (VertexId v : g.vertices()) {
        if (cyc[v][1] == -1)
            throw Error(Errc::ConstructionFailed, "non-separator edges are not 2-regular");
        if (cyc[v][0] > cyc[v][1]) std::swap(cyc[v][0], cyc[v][1]);
    }
    VertexId start = g.min_vertex();
    std::vector<VertexId> cycle{start, cyc[start][0]};
    while (true) {
        VertexId cur = cycle.back();
        VertexId prev = cycle[cycle.size() - 2];
        VertexId nxt = cyc[cur][0] == prev ? cyc[cur][1] : cyc[cur][0];
        if (nxt == start) break;
        cycle.push_back(nxt);
        if (cycle.size() > g.vertex_count())
            throw Error(Errc::ConstructionFailed, "non-separator edges do not form one cycle");
    }
    if (cycle.size() != g.vertex_count())
        throw Error(Errc::ConstructionFailed, "non-separator cycle is not spanning");
    return cycle;
}

}  // namespace detail

std::vector<EdgeKey> compute_e4(const G1Instance& inst, const EdgeClassTable& table,
                                std::map<EdgeKey, std::string>* prov) {
    const Graph& g = inst.graph;
    std::vector<EdgeKey> out;
    if (g.vertex_count() < 3) return out;
    const Peo& sigma = inst.sigma;

    auto cycle = unique_cycle_3pf(g);
    VertexId v1 = sigma.order.front();
    VertexId vk = sigma.order.back();
    // Split the cycle into the two (v1, vk) arcs.
    std::size_t i1 = std::find(cycle.begin(), cycle.end(), v1) - cycle.begin();
    std::rotate(cycle.begin(), cycle.begin() + i1, cycle.end());
    std::size_t ik = std::find(cycle.begin(), cycle.end(), vk) - cycle.begin();
    std::vector<VertexId> arc1(cycle.begin(), cycle.begin() + ik + 1);
    std::vector<VertexId> arc2{v1};
    for (std::size_t i = cycle.size() - 1; i >= ik; --i) {
        arc2.push_back(cycle[i]);
        if (i == ik) break;
    }

    auto bp = blue_paths(g, inst.blue, &sigma);
    for (const auto& path : bp.paths) {
        if (path.size() <= 2) continue;
        bool has_sep = false;
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (table.is_separator(EdgeKey(path[i], path[i + 1]))) has_sep = true;
        if (has_sep) continue;

        std::vector<char> in_path(g.id_bound(), 0);
        for (VertexId v : path) in_path[v] = 1;
        auto disjoint = [&](const std::vector<VertexId>& arc) {
            for (VertexId v : arc)
                if (in_path[v]) return false;
            return true;
        };
        const std::vector<VertexId>* w2 = nullptr;
        if (disjoint(arc2))
            w2 = &arc2;
        else if (disjoint(arc1))
            w2 = &arc1;
        if (!w2) continue;

        VertexId vi = path.front();
        VertexId vj = path.back();
        std::vector<VertexId> common;
        {
            auto na = g.neighbors(vi);
            auto nb = g.neighbors(vj);
            std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                                  std::back_inserter(common));
        }
        bool touches = false;
        for (VertexId c : common)
            if (std::find(w2->begin(), w2->end(), c) != w2->end()) touches = true;
        if (touches) continue;

        auto ni = g.neighbors(vi);
        auto nj = g.neighbors(vj);
        auto adj_to = [&](std::span<const VertexId> nb, VertexId v) {
            return std::binary_search(nb.begin(), nb.end(), v);
        };
        for (std::size_t i = 0; i + 1 < w2->size(); ++i) {
            VertexId a = (*w2)[i], b = (*w2)[i + 1];
            VertexId vp = sigma.pos(a) < sigma.pos(b) ? a : b;
            VertexId vq = sigma.pos(a) < sigma.pos(b) ? b : a;
            EdgeKey e(vp, vq);
            if (inst.blue.is_blue(e)) continue;
            if (adj_to(ni, vp) && !adj_to(ni, vq)) {
                out.push_back(e);
                if (prov) prov->emplace(e, "E4'");
            }
            if (adj_to(nj, vq) && !adj_to(nj, vp)) {
                out.push_back(e);
                if (prov) prov->emplace(e, "E4''");
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

struct RemovalRules {
    const G1Instance& inst;
    const Graph* gstar;
    const detail::BlockData* bd;
    VertexId endpoint_u, endpoint_x;

    // Returns the 1-based rule index that fires for edge (p,q), or 0.
    int fires(VertexId p, VertexId q, EdgeKey e) const {
        int eb = bd->block_of_edge(e);
        // (i) / (ii): p paired with the other neighbor of a degree-2 vertex
        // of G0.  These strip the path endpoints' non-blue edges, so p must
        // be the endpoint chosen for that side.
        for (auto [nbrs, end] : {std::pair{inst.s_nbrs, endpoint_u},
                                 std::pair{inst.t_nbrs, endpoint_x}}) {
            if (p != end) continue;
            VertexId r = -1;
            if (p == nbrs.first)
                r = nbrs.second;
            else if (p == nbrs.second)
                r = nbrs.first;
            if (r == -1 || r == q) continue;
            if (!gstar->has_edge(p, r)) continue;
            if (bd->block_of_edge(EdgeKey(p, r)) != eb) continue;
            if (inst.blue_deg[r] == 2) return 1;
            if (inst.blue_deg[r] == 1 && inst.blue_deg[p] == 1 && inst.graph.degree(p) == 2)
                return 2;
        }
        if (bd->is_cut[p]) {
            for (VertexId r : gstar->neighbors(p)) {
                if (r == q) continue;
                if (bd->block_of_edge(EdgeKey(p, r)) != eb) continue;
                // A path endpoint keeps exactly one edge (its blue one), so
                // the degree-2 argument only binds interior vertices.
                if (gstar->degree(r) == 2 && r != endpoint_u && r != endpoint_x) return 3;
                if (inst.blue.is_blue(p, r)) return 4;
            }
        }
        return 0;
    }
};

}  // namespace

std::vector<EdgeKey> compute_e5(const G1Instance& inst, const EdgeClassTable&,
                                const Graph& ghat, VertexId endpoint_u, VertexId endpoint_x,
                                std::map<EdgeKey, std::string>* prov) {
    static const char* rule_name[5] = {nullptr, "E5-i", "E5-ii", "E5-iii", "E5-iv"};
    std::vector<EdgeKey> removed;
    Graph cur = ghat;
    bool progress = true;
    while (progress) {
        progress = false;
        auto bd = detail::block_data(cur);
        RemovalRules ctx{inst, &cur, &bd, endpoint_u, endpoint_x};
        for (EdgeKey e : cur.edges()) {
            if (inst.blue.is_blue(e)) continue;
            int rule = ctx.fires(e.a, e.b, e);
            if (!rule) {
                int swapped = ctx.fires(e.b, e.a, e);
                if (swapped) rule = swapped;
            }
            if (rule) {
                removed.push_back(e);
                if (prov) prov->emplace(e, rule_name[rule]);
                cur = cur.without_edges({e});
                progress = true;
                break;
            }
        }
    }
    return removed;
}

G2Build build_g2(const G1Instance& inst, const EdgeClassTable& table, VertexId endpoint_u,
                 VertexId endpoint_x) {
    G2Build out;
    PruneSets& sets = out.sets;
    sets.e1 = compute_e1(inst, table);
    for (EdgeKey e : sets.e1) sets.provenance.emplace(e, "E1");
    sets.e2 = compute_e2(inst, table, &sets.provenance);
    sets.e3 = compute_e3(inst, table, endpoint_u, endpoint_x);
    for (EdgeKey e : sets.e3) sets.provenance.emplace(e, "E3");
    sets.e4 = compute_e4(inst, table, &sets.provenance);

    std::vector<EdgeKey> first_four;
    first_four.insert(first_four.end(), sets.e1.begin(), sets.e1.end());
    first_four.insert(first_four.end(), sets.e2.begin(), sets.e2.end());
    first_four.insert(first_four.end(), sets.e3.begin(), sets.e3.end());
    first_four.insert(first_four.end(), sets.e4.begin(), sets.e4.end());
    Graph ghat = inst.graph.without_edges(first_four);

    sets.e5 = compute_e5(inst, table, ghat, endpoint_u, endpoint_x, &sets.provenance);

    out.g2.graph = ghat.without_edges(sets.e5);
    out.g2.blue = inst.blue;
    out.g2.sigma = inst.sigma;
    out.g2.table = table;
    return out;
}

}  // namespace twotree
