#include "twotree/pruning.hpp"

#include <algorithm>

#include "working_graph.hpp"

namespace twotree {

std::vector<VertexId> BlueState::label_oriented(VertexId from, VertexId to) const {
    auto it = labels.find(EdgeKey(from, to));
    if (it == labels.end()) return {};
    std::vector<VertexId> out = it->second;
    if (from > to) std::reverse(out.begin(), out.end());
    return out;
}

std::vector<EdgeKey> BlueState::blue_edges_sorted() const {
    std::vector<EdgeKey> out(blue.begin(), blue.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> blue_degrees(const Graph& g, const BlueState& blue) {
    std::vector<int> deg(g.id_bound(), 0);
    for (EdgeKey e : blue.blue) {
        ++deg[e.a];
        ++deg[e.b];
    }
    return deg;
}

std::vector<VertexId> G0Instance::degree_two_vertices() const {
    std::vector<VertexId> out;
    for (VertexId v : graph.vertices())
        if (graph.degree(v) == 2) out.push_back(v);
    return out;
}

std::vector<VertexId> G1Instance::wrap_label_oriented(VertexId from, VertexId to) const {
    auto it = wrap_labels.find(EdgeKey(from, to));
    if (it == wrap_labels.end()) return {};
    std::vector<VertexId> out = it->second;
    if (from > to) std::reverse(out.begin(), out.end());
    return out;
}

namespace {

// Labels as chains of pruned vertices in a shared link arena: each pruned
// vertex ends up in exactly one label, and folding two labels around the
// deleted vertex is O(1) pointer surgery instead of vector concatenation.
// Per-edge state is indexed by flat edge slots.
struct LabelArena {
    // Up to two sequence neighbors per node, -1 when open.
    std::vector<std::array<VertexId, 2>> link;
    // Chain endpoints per edge slot, [0] adjacent to key.a, [1] to key.b;
    // (-1,-1) while the label is empty.
    std::vector<std::array<VertexId, 2>> ends;

    LabelArena(VertexId bound, std::size_t slots)
        : link(bound, {-1, -1}), ends(slots, {-1, -1}) {}

    void connect(VertexId u, VertexId v) {
        (link[u][0] == -1 ? link[u][0] : link[u][1]) = v;
        (link[v][0] == -1 ? link[v][0] : link[v][1]) = u;
    }

    // Folds label(av), v, label(vb) into the label of (a,b).
    void fold(int slot_av, bool a_low, int slot_vb, bool v_low, int slot_ab, bool ab_low,
              VertexId v) {
        VertexId head = v, tail = v;
        if (auto& e = ends[slot_av]; e[0] != -1) {
            auto [ea, ev] = a_low ? std::pair{e[0], e[1]} : std::pair{e[1], e[0]};
            connect(ev, v);
            head = ea;
        }
        if (auto& e = ends[slot_vb]; e[0] != -1) {
            auto [ev, eb] = v_low ? std::pair{e[0], e[1]} : std::pair{e[1], e[0]};
            connect(v, ev);
            tail = eb;
        }
        ends[slot_ab] = ab_low ? std::array{head, tail} : std::array{tail, head};
    }

    // Walks the chain of a slot from the key.a side.
    std::vector<VertexId> materialize(int slot) const {
        std::vector<VertexId> out;
        VertexId prev = -1, cur = ends[slot][0];
        while (cur != -1) {
            out.push_back(cur);
            VertexId nxt = link[cur][0] == prev ? link[cur][1] : link[cur][0];
            prev = out.back();
            cur = nxt;
        }
        return out;
    }
};

G0Instance vertex_prune_impl(const Graph& g, detail::EdgeSlots slots) {
    G0Instance inst;
    detail::WorkingGraph w(g);
    detail::IdHeap heap(g.id_bound());
    for (VertexId v = 0; v < g.id_bound(); ++v)
        if (g.has_vertex(v) && w.degree(v) == 2) heap.push(v);

    std::vector<char> blue_flag(slots.size(), 0);
    LabelArena arena(g.id_bound(), slots.size());
    while (!heap.empty()) {
        VertexId v = heap.pop();
        if (!w.alive(v) || w.degree(v) != 2) continue;
        auto [a, b] = w.two_neighbors(v);
        int close = slots.slot(EdgeKey(a, b));
        if (close < 0) throw Error(Errc::NotTwoTree, "degree-2 vertex is not simplicial");
        if (blue_flag[close]) continue;  // colored close blocks v for good

        // label(ab) oriented a->b: label(av) read towards v, then v, then
        // label(vb) read away from v.
        arena.fold(slots.slot(EdgeKey(a, v)), a < v, slots.slot(EdgeKey(v, b)), v < b,
                   close, a < b, v);
        blue_flag[close] = 1;

        inst.pruned_order.push_back(v);
        w.remove_degree2(v, a, b);
        if (w.degree(a) == 2) heap.push(a);
        if (w.degree(b) == 2) heap.push(b);
    }

    std::vector<char> dead(g.id_bound(), 0);
    for (VertexId v : inst.pruned_order) dead[v] = 1;
    BlueState& blue = inst.blue;
    for (int s = 0; s < static_cast<int>(slots.size()); ++s) {
        if (!blue_flag[s]) continue;
        EdgeKey e = slots.key_of(s);
        if (dead[e.a] || dead[e.b]) continue;  // folded away with a pruned endpoint
        blue.blue.insert(e);
        blue.labels[e] = arena.materialize(s);
    }
    inst.graph = g.without_vertices(inst.pruned_order);
    return inst;
}

}  // namespace

G0Instance vertex_prune(const Graph& g) {
    if (!is_two_tree(g).ok) throw Error(Errc::NotTwoTree, "vertex_prune requires a 2-tree");
    return vertex_prune_impl(g, detail::EdgeSlots(g));
}

namespace detail {

G0Instance vertex_prune_unchecked(const Graph& g, const std::vector<int>* slot_base,
                                  const std::vector<VertexId>* cols) {
    if (slot_base && cols) return vertex_prune_impl(g, EdgeSlots(*slot_base, *cols));
    return vertex_prune_impl(g, EdgeSlots(g));
}

}  // namespace detail

std::optional<WitnessReason> check_g0_conditions(const G0Instance& inst) {
    auto deg2 = inst.degree_two_vertices();
    if (deg2.size() != 2)
        return WitnessReason(witness::G0DegreeTwoCount{static_cast<int>(deg2.size()), deg2});

    auto bdeg = blue_degrees(inst.graph, inst.blue);
    for (VertexId v : inst.graph.vertices())
        if (bdeg[v] >= 5) return WitnessReason(witness::G0BlueDegree{v, bdeg[v]});

    for (VertexId s : deg2) {
        const auto& nb = inst.graph.neighbors(s);
        int three = (bdeg[nb[0]] == 3 ? 1 : 0) + (bdeg[nb[1]] == 3 ? 1 : 0);
        if (three > 1) return WitnessReason(witness::G0NeighborCondition{s, nb[0], nb[1]});
    }
    return std::nullopt;
}

HFamilyResult check_h_family(const G0Instance& inst) {
    HFamilyResult out;
    auto bdeg = blue_degrees(inst.graph, inst.blue);
    int delta = 0;
    for (VertexId v : inst.graph.vertices()) delta = std::max(delta, bdeg[v]);
    if (delta <= 3) {
        out.status = HFamilyResult::Status::NotApplicable;
        return out;
    }

    out.status = HFamilyResult::Status::Witness;
    if (inst.graph.vertex_count() != 5 || inst.graph.edge_count() != 7) return out;

    auto verts = inst.graph.vertices();
    std::array<int, 5> perm{0, 1, 2, 3, 4};
    std::sort(perm.begin(), perm.end());
    do {
        // Roles (v, u, w, x, y); edges vu, vw, vx, vy, uw, wx, xy.
        VertexId rv = verts[perm[0]], ru = verts[perm[1]], rw = verts[perm[2]],
                 rx = verts[perm[3]], ry = verts[perm[4]];
        const std::array<EdgeKey, 7> want{EdgeKey(rv, ru), EdgeKey(rv, rw), EdgeKey(rv, rx),
                                          EdgeKey(rv, ry), EdgeKey(ru, rw), EdgeKey(rw, rx),
                                          EdgeKey(rx, ry)};
        bool edges_ok = true;
        for (EdgeKey e : want)
            if (!inst.graph.has_edge(e)) {
                edges_ok = false;
                break;
            }
        if (!edges_ok) continue;
        const auto& blue = inst.blue;
        if (!blue.is_blue(rv, ru) || !blue.is_blue(rv, rw) || !blue.is_blue(rv, rx) ||
            !blue.is_blue(rv, ry))
            continue;
        if (blue.is_blue(rw, rx)) continue;
        bool uw = blue.is_blue(ru, rw);
        bool xy = blue.is_blue(rx, ry);
        out.status = HFamilyResult::Status::Member;
        out.member = uw ? (xy ? HMember::H4 : HMember::H2) : (xy ? HMember::H3 : HMember::H1);
        out.roles = {rv, ru, rw, rx, ry};
        return out;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

G1Instance derive_g1(const G0Instance& inst) {
    auto deg2 = inst.degree_two_vertices();
    if (deg2.size() != 2)
        throw Error(Errc::PreconditionViolated, "derive_g1 needs exactly two degree-2 vertices");

    G1Instance g1;
    g1.s = deg2[0];
    g1.t = deg2[1];
    const auto& snb = inst.graph.neighbors(g1.s);
    const auto& tnb = inst.graph.neighbors(g1.t);
    g1.s_nbrs = {snb[0], snb[1]};
    g1.t_nbrs = {tnb[0], tnb[1]};
    g1.graph = inst.graph.without_vertices({g1.s, g1.t});
    g1.blue = inst.blue;
    for (VertexId end : {g1.s, g1.t}) {
        for (VertexId nb : inst.graph.neighbors(end)) {
            EdgeKey e(end, nb);
            if (g1.blue.is_blue(e)) {
                g1.blue.blue.erase(e);
                auto it = g1.blue.labels.find(e);
                if (it != g1.blue.labels.end()) {
                    g1.wrap_labels[e] = it->second;
                    g1.blue.labels.erase(it);
                }
            }
        }
    }
    g1.sigma = peo_with_degree2_endpoints(g1.graph);
    g1.blue_deg = blue_degrees(g1.graph, g1.blue);
    return g1;
}

std::optional<WitnessReason> check_g1_conditions(const G1Instance& inst) {
    for (VertexId v : inst.graph.vertices())
        if (inst.blue_deg[v] >= 3)
            return WitnessReason(witness::G1BlueDegree{v, inst.blue_deg[v]});

    for (auto [end, nbrs] : {std::pair{inst.s, inst.s_nbrs}, std::pair{inst.t, inst.t_nbrs}}) {
        int du = inst.blue_deg[nbrs.first];
        int dv = inst.blue_deg[nbrs.second];
        bool ok = (du == 1 && dv == 2) || (du == 2 && dv == 1) || (du == 1 && dv == 1);
        if (!ok)
            return WitnessReason(
                witness::G1NeighborCondition{end, nbrs.first, nbrs.second, du, dv});
    }
    return std::nullopt;
}

BluePaths blue_paths(const Graph& g, const BlueState& blue, const Peo* sigma) {
    BluePaths out;
    std::vector<std::vector<VertexId>> badj(g.id_bound());
    std::vector<VertexId> blue_verts;
    for (EdgeKey e : blue.blue_edges_sorted()) {
        badj[e.a].push_back(e.b);
        badj[e.b].push_back(e.a);
        blue_verts.push_back(e.a);
        blue_verts.push_back(e.b);
    }
    std::sort(blue_verts.begin(), blue_verts.end());
    blue_verts.erase(std::unique(blue_verts.begin(), blue_verts.end()), blue_verts.end());

    std::vector<char> seen(g.id_bound(), 0);
    auto order_key = [&](VertexId v) { return sigma ? sigma->pos(v) : v; };

    // Walk path components from their endpoints (blue degree 1).
    for (VertexId v : blue_verts) {
        if (seen[v] || badj[v].size() != 1) continue;
        std::vector<VertexId> path{v};
        seen[v] = 1;
        VertexId prev = -1, cur = v;
        for (;;) {
            VertexId nxt = -1;
            for (VertexId w : badj[cur])
                if (w != prev) nxt = w;
            if (nxt == -1) break;
            seen[nxt] = 1;
            path.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
        if (order_key(path.front()) > order_key(path.back()))
            std::reverse(path.begin(), path.end());
        out.paths.push_back(std::move(path));
    }
    // Any blue vertex left unseen sits on a cycle.
    for (VertexId v : blue_verts) {
        if (seen[v]) continue;
        std::vector<VertexId> cyc{v};
        seen[v] = 1;
        VertexId prev = -1, cur = v;
        for (;;) {
            VertexId nxt = -1;
            for (VertexId w : badj[cur])
                if (w != prev && !seen[w]) nxt = w;
            if (nxt == -1) break;
            seen[nxt] = 1;
            cyc.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
        out.cycle = std::move(cyc);
        break;
    }

    std::sort(out.paths.begin(), out.paths.end(),
              [&](const auto& a, const auto& b) {
                  return order_key(a.front()) < order_key(b.front());
              });
    return out;
}

std::string describe(const WitnessReason& w) {
    struct V {
        std::string operator()(const witness::FourPyramid& x) const {
            return "FourPyramid(" + std::to_string(x.edge.a) + "," + std::to_string(x.edge.b) + ")";
        }
        std::string operator()(const witness::G0DegreeTwoCount& x) const {
            return "G0DegreeTwoCount(" + std::to_string(x.count) + ")";
        }
        std::string operator()(const witness::G0BlueDegree& x) const {
            return "G0BlueDegree(v=" + std::to_string(x.vertex) + ",d=" + std::to_string(x.degree) + ")";
        }
        std::string operator()(const witness::G0NeighborCondition& x) const {
            return "G0NeighborCondition(s=" + std::to_string(x.s) + ",u=" + std::to_string(x.u) +
                   ",v=" + std::to_string(x.v) + ")";
        }
        std::string operator()(const witness::NotInHFamily&) const { return "NotInHFamily"; }
        std::string operator()(const witness::G1BlueDegree& x) const {
            return "G1BlueDegree(v=" + std::to_string(x.vertex) + ",d=" + std::to_string(x.degree) + ")";
        }
        std::string operator()(const witness::G1NeighborCondition& x) const {
            return "G1NeighborCondition(s=" + std::to_string(x.s) + ")";
        }
        std::string operator()(const witness::BlueCycle&) const { return "BlueCycle"; }
        std::string operator()(const witness::G2Disconnected&) const { return "G2Disconnected"; }
        std::string operator()(const witness::CutVertexComponents& x) const {
            return "CutVertexComponents(v=" + std::to_string(x.vertex) + ",c=" +
                   std::to_string(x.count) + ")";
        }
        std::string operator()(const witness::BlockCutCount& x) const {
            return "BlockCutCount(" + std::to_string(x.count) + ")";
        }
        std::string operator()(const witness::DoubleForcedStar& x) const {
            return "DoubleForcedStar(v=" + std::to_string(x.vertex) + ")";
        }
        std::string operator()(const witness::ConflictingPaths&) const {
            return "ConflictingPaths";
        }
        std::string operator()(const witness::EndpointAssignmentExhausted& x) const {
            return x.detail.empty() ? "EndpointAssignmentExhausted"
                                    : "EndpointAssignmentExhausted(" + x.detail + ")";
        }
    };
    return std::visit(V{}, w);
}

}  // namespace twotree
