#include "twotree/engine.hpp"

#include <algorithm>
#include <unordered_map>

#include "twotree/twotree.hpp"

namespace twotree {

bool validate_path(const Graph& g, const std::vector<VertexId>& p) {
    if (p.size() != g.vertex_count()) return false;
    std::vector<char> seen(g.id_bound(), 0);
    for (VertexId v : p) {
        if (!g.has_vertex(v) || seen[v]) return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.has_edge(p[i], p[i + 1])) return false;
    return true;
}

std::vector<VertexId> hamiltonian_cycle_3pf(const Graph& g) { return unique_cycle_3pf(g); }

std::vector<VertexId> hp_one_pyramid(const Graph& g, EdgeKey pyramid_edge) {
    auto report = pyramid_report(g);
    if (!report.four_plus_edges.empty() || report.three_pyramid_edges.size() != 1 ||
        report.three_pyramid_edges[0] != pyramid_edge)
        throw Error(Errc::PreconditionViolated,
                    "hp_one_pyramid needs exactly one 3-pyramid on the given edge");

    VertexId u = pyramid_edge.a, v = pyramid_edge.b;
    auto comps = components(g, {u, v});
    if (comps.size() != 3)
        throw Error(Errc::PreconditionViolated, "3-pyramid edge must split into 3 components");

    // (u,v)-Hamiltonian path of each component graph, read from u's side.
    std::array<std::vector<VertexId>, 3> interior;
    for (int i = 0; i < 3; ++i) {
        std::vector<VertexId> keep = comps[i];
        keep.push_back(u);
        keep.push_back(v);
        Graph gi = g.induced(keep);
        auto cycle = unique_cycle_3pf(gi);
        // uv has one common neighbor in gi, so it lies on the cycle; drop it.
        auto iu = std::find(cycle.begin(), cycle.end(), u) - cycle.begin();
        std::rotate(cycle.begin(), cycle.begin() + iu, cycle.end());
        if (cycle.back() != v) {
            std::reverse(cycle.begin() + 1, cycle.end());
            if (cycle.back() != v)
                throw Error(Errc::ConstructionFailed, "pyramid edge not on component cycle");
        }
        interior[i].assign(cycle.begin() + 1, cycle.end() - 1);
    }

    std::vector<VertexId> path;
    path.insert(path.end(), interior[0].begin(), interior[0].end());
    path.push_back(v);
    path.insert(path.end(), interior[1].rbegin(), interior[1].rend());
    path.push_back(u);
    path.insert(path.end(), interior[2].begin(), interior[2].end());
    return path;
}

std::optional<ConflictingPair> find_conflicting_paths(const G2Instance& g2) {
    auto bp = blue_paths(g2.graph, g2.blue, &g2.sigma);
    std::vector<const std::vector<VertexId>*> sep_free;
    for (const auto& p : bp.paths) {
        bool has_sep = false;
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (g2.table.is_separator(EdgeKey(p[i], p[i + 1]))) has_sep = true;
        if (!has_sep) sep_free.push_back(&p);
    }
    const Peo& sigma = g2.sigma;
    for (const auto* p1 : sep_free) {
        if (p1->size() < 2) continue;
        for (const auto* p2 : sep_free) {
            if (p1 == p2 || p2->size() < 3) continue;
            int i = sigma.pos(p1->front());
            int y = sigma.pos(p2->front());
            int z = sigma.pos(p2->back());
            if (y < i && i < z && !g2.graph.has_edge(p1->front(), p2->back()))
                return ConflictingPair{*p1, *p2};
        }
    }
    return std::nullopt;
}

namespace {

// Block path from u's block to x's block; every block of G2 must lie on it.
struct BlockChain {
    // (block id, entry vertex, exit vertex)
    std::vector<std::tuple<int, VertexId, VertexId>> parts;
    bool ok = false;
    std::string why;
};

BlockChain walk_blocks(const detail::BlockData& bd, VertexId u, VertexId x) {
    BlockChain out;
    if (bd.vertex_blocks[u].size() != 1) {
        out.why = "endpoint u lies in several blocks";
        return out;
    }
    int cur = bd.vertex_blocks[u][0];
    VertexId entry = u;
    std::vector<char> used(bd.block_vertices.size(), 0);
    for (;;) {
        used[cur] = 1;
        const auto& bverts = bd.block_vertices[cur];
        bool has_x = std::binary_search(bverts.begin(), bverts.end(), x);
        if (has_x) {
            out.parts.emplace_back(cur, entry, x);
            break;
        }
        VertexId exit = -1;
        for (VertexId v : bverts) {
            if (v == entry || !bd.is_cut[v]) continue;
            if (exit != -1) {
                out.why = "branching block chain";
                return out;
            }
            exit = v;
        }
        if (exit == -1) {
            out.why = "block chain dead-ends before reaching x";
            return out;
        }
        out.parts.emplace_back(cur, entry, exit);
        int nxt = -1;
        for (int b : bd.vertex_blocks[exit])
            if (b != cur) nxt = b;
        if (nxt == -1 || used[nxt]) {
            out.why = "block chain dead-ends before reaching x";
            return out;
        }
        cur = nxt;
        entry = exit;
    }
    for (std::size_t b = 0; b < used.size(); ++b) {
        if (!used[b]) {
            out.why = "block chain does not cover every block";
            return out;
        }
    }
    out.ok = true;
    return out;
}

}  // namespace

std::optional<WitnessReason> check_g2_conditions(const G2Instance& g2, VertexId u, VertexId x) {
    auto bd = detail::block_data(g2.graph);
    if (bd.n_components > 1) return WitnessReason(witness::G2Disconnected{});

    if (g2.graph.degree(u) != 1)
        return WitnessReason(witness::EndpointAssignmentExhausted{
            "endpoint " + std::to_string(u) + " has degree != 1 in G2"});
    if (g2.graph.degree(x) != 1)
        return WitnessReason(witness::EndpointAssignmentExhausted{
            "endpoint " + std::to_string(x) + " has degree != 1 in G2"});

    for (VertexId v = 0; v < g2.graph.id_bound(); ++v) {
        if (v >= static_cast<VertexId>(bd.is_cut.size()) || !bd.is_cut[v]) continue;
        int pieces = static_cast<int>(bd.vertex_blocks[v].size());
        if (pieces != 2) return WitnessReason(witness::CutVertexComponents{v, pieces});
    }
    for (const auto& bverts : bd.block_vertices) {
        int cuts = 0;
        for (VertexId v : bverts)
            if (bd.is_cut[v]) ++cuts;
        if (cuts > 2) return WitnessReason(witness::BlockCutCount{bverts, cuts});
    }
    if (!g2.table.double_forced_stars.empty()) {
        VertexId v = *std::min_element(g2.table.double_forced_stars.begin(),
                                       g2.table.double_forced_stars.end());
        return WitnessReason(witness::DoubleForcedStar{v});
    }
    if (auto conflict = find_conflicting_paths(g2))
        return WitnessReason(witness::ConflictingPaths{conflict->p1, conflict->p2});

    auto chain = walk_blocks(bd, u, x);
    if (!chain.ok) return WitnessReason(witness::EndpointAssignmentExhausted{chain.why});
    return std::nullopt;
}

std::vector<VertexId> spanning_path(const Graph& block, const BlueState& blue,
                                    const Peo& sigma, VertexId p, VertexId q) {
    // Local mutable adjacency; the pruning below never touches blue edges.
    std::unordered_map<VertexId, std::vector<VertexId>> adj;
    for (VertexId v : block.vertices()) {
        auto nb = block.neighbors(v);
        adj[v].assign(nb.begin(), nb.end());
    }
    auto erase_edge = [&](VertexId a, VertexId b) {
        auto& na = adj[a];
        na.erase(std::find(na.begin(), na.end(), b));
        auto& nb = adj[b];
        nb.erase(std::find(nb.begin(), nb.end(), a));
    };

    std::vector<VertexId> seq;
    VertexId cur = p;
    for (;;) {
        if (cur == q) {
            if (adj.size() != 1)
                throw Error(Errc::ConstructionFailed,
                            "spanning path reached its target with vertices left over");
            seq.push_back(q);
            return seq;
        }
        auto& nbrs = adj[cur];
        if (nbrs.empty())
            throw Error(Errc::ConstructionFailed, "spanning path dead end");

        VertexId j = -1;
        int blue_count = 0;
        for (VertexId w : nbrs) {
            if (blue.is_blue(cur, w)) {
                ++blue_count;
                j = w;
            }
        }
        if (blue_count > 1)
            throw Error(Errc::ConstructionFailed, "two blue edges at a path endpoint");
        // With more than two vertices left, the edge (cur, q) can never lie
        // on a (cur, q)-Hamiltonian path, so q is not a legal continuation.
        if (blue_count == 1 && j == q && nbrs.size() > 1)
            throw Error(Errc::ConstructionFailed, "blue edge into the path target");
        if (blue_count == 0) {
            j = -1;
            for (VertexId w : nbrs) {
                if (w == q && nbrs.size() > 1) continue;
                if (j == -1 || sigma.pos(w) < sigma.pos(j)) j = w;
            }
        }
        // Prune the other cur-incident edges, then follow the forced chain to
        // the first vertex of degree >= 3 (or q).
        std::vector<VertexId> others;
        for (VertexId w : nbrs)
            if (w != j) others.push_back(w);
        for (VertexId w : others) erase_edge(cur, w);

        VertexId prev = cur, c = j;
        std::vector<VertexId> chain{cur};
        while (c != q && adj[c].size() == 2) {
            chain.push_back(c);
            VertexId nxt = adj[c][0] == prev ? adj[c][1] : adj[c][0];
            prev = c;
            c = nxt;
        }
        if (c != q && adj[c].size() < 2)
            throw Error(Errc::ConstructionFailed, "forced chain dead end");
        // Consume the chain.
        for (std::size_t i = 0; i < chain.size(); ++i) {
            VertexId v = chain[i];
            VertexId link = i + 1 < chain.size() ? chain[i + 1] : c;
            erase_edge(v, link);
            if (!adj[v].empty())
                throw Error(Errc::ConstructionFailed, "chain vertex keeps stray edges");
            adj.erase(v);
            seq.push_back(v);
        }
        cur = c;
    }
}

std::vector<Assignment> enumerate_assignments(const G1Instance& g1) {
    struct Option {
        VertexId endpoint, inner;
        bool one_one;  // (1,1) blue-degree side
    };
    auto side_menu = [&](std::pair<VertexId, VertexId> nbrs) {
        std::vector<Option> menu;
        VertexId a = nbrs.first, b = nbrs.second;
        int da = g1.blue_deg[a], db = g1.blue_deg[b];
        if (da == 1 && db == 2) {
            menu.push_back({a, b, false});
        } else if (da == 2 && db == 1) {
            menu.push_back({b, a, false});
        } else if (da == 1 && db == 1) {
            if (g1.graph.degree(a) == 2) menu.push_back({a, b, true});
            if (g1.graph.degree(b) == 2) menu.push_back({b, a, true});
        }
        return menu;
    };
    std::vector<Assignment> out;
    for (const Option& os : side_menu(g1.s_nbrs)) {
        for (const Option& ot : side_menu(g1.t_nbrs)) {
            if (os.endpoint == ot.endpoint) continue;
            Assignment a;
            a.endpoint_s = os.endpoint;
            a.inner_s = os.inner;
            a.endpoint_t = ot.endpoint;
            a.inner_t = ot.inner;
            if (!os.one_one && !ot.one_one) a.type = 1;
            else if (os.one_one && ot.one_one) a.type = 2;
            else if (!os.one_one) a.type = 3;
            else a.type = 4;
            out.push_back(a);
        }
    }
    return out;
}

namespace {

std::vector<VertexId> expand_blue(const std::vector<VertexId>& r, const BlueState& blue) {
    std::vector<VertexId> out;
    out.push_back(r.front());
    for (std::size_t i = 1; i < r.size(); ++i) {
        VertexId a = r[i - 1], b = r[i];
        if (blue.is_blue(a, b)) {
            auto label = blue.label_oriented(a, b);
            out.insert(out.end(), label.begin(), label.end());
        }
        out.push_back(b);
    }
    return out;
}

std::vector<VertexId> build_r(const G2Instance& g2, const detail::BlockData& bd,
                              VertexId from, VertexId to) {
    auto chain = walk_blocks(bd, from, to);
    if (!chain.ok) throw Error(Errc::ConstructionFailed, chain.why);
    std::vector<VertexId> r;
    for (const auto& [bid, entry, exit] : chain.parts) {
        Graph bg = g2.graph.induced(bd.block_vertices[bid]);
        auto part = spanning_path(bg, g2.blue, g2.sigma, entry, exit);
        std::size_t skip = r.empty() ? 0 : 1;  // shared cut vertex
        r.insert(r.end(), part.begin() + skip, part.end());
    }
    return r;
}

std::vector<VertexId> assemble_and_expand(const Graph& original, const G1Instance& g1,
                                          const G2Instance& g2, const Assignment& assign) {
    auto bd = detail::block_data(g2.graph);

    // The greedy least-sigma continuation of the spanning construction walks
    // with the sweep direction, so start from the sigma-lower endpoint and
    // fall back to the other orientation if that breaks.
    VertexId es = assign.endpoint_s, et = assign.endpoint_t;
    bool s_low = g2.sigma.pos(es) <= g2.sigma.pos(et);
    VertexId first = s_low ? es : et;
    VertexId second = s_low ? et : es;
    std::vector<VertexId> r;
    try {
        r = build_r(g2, bd, first, second);
        if (!s_low) std::reverse(r.begin(), r.end());
    } catch (const Error& e) {
        if (e.code() != Errc::ConstructionFailed) throw;
        r = build_r(g2, bd, second, first);
        if (s_low) std::reverse(r.begin(), r.end());
    }

    if (r.size() != g2.graph.vertex_count())
        throw Error(Errc::ConstructionFailed, "assembled path misses vertices of G2");
    // R must contain every blue edge consecutively.
    std::unordered_set<EdgeKey> on_path;
    for (std::size_t i = 0; i + 1 < r.size(); ++i) on_path.insert(EdgeKey(r[i], r[i + 1]));
    for (EdgeKey e : g2.blue.blue)
        if (!on_path.count(e))
            throw Error(Errc::ConstructionFailed, "assembled path misses a blue edge");

    std::vector<VertexId> rp = expand_blue(r, g2.blue);

    // P = (label(vs), s, label(su), R', label(xt), t, label(tw))
    std::vector<VertexId> path = g1.wrap_label_oriented(assign.inner_s, g1.s);
    path.push_back(g1.s);
    auto su = g1.wrap_label_oriented(g1.s, assign.endpoint_s);
    path.insert(path.end(), su.begin(), su.end());
    path.insert(path.end(), rp.begin(), rp.end());
    auto xt = g1.wrap_label_oriented(assign.endpoint_t, g1.t);
    path.insert(path.end(), xt.begin(), xt.end());
    path.push_back(g1.t);
    auto tw = g1.wrap_label_oriented(g1.t, assign.inner_t);
    path.insert(path.end(), tw.begin(), tw.end());

    if (!validate_path(original, path))
        throw Error(Errc::ConstructionFailed, "expanded path fails validation");
    return path;
}

// Hamiltonian path of G when G0 matches one of the four max-blue-degree-4
// patterns: the four labels around the hub are consumed two as path ends and
// two through the hub, walking u, w, v, y, x in pattern order.
std::vector<VertexId> h_family_path(const Graph& original, const G0Instance& g0,
                                    const HFamilyResult& match) {
    auto [rv, ru, rw, rx, ry] = match.roles;
    const BlueState& blue = g0.blue;
    std::vector<VertexId> path = blue.label_oriented(rv, ru);
    auto append = [&](std::vector<VertexId>&& seg) {
        path.insert(path.end(), seg.begin(), seg.end());
    };
    path.push_back(ru);
    append(blue.label_oriented(ru, rw));
    path.push_back(rw);
    append(blue.label_oriented(rw, rv));
    path.push_back(rv);
    append(blue.label_oriented(rv, ry));
    path.push_back(ry);
    append(blue.label_oriented(ry, rx));
    path.push_back(rx);
    append(blue.label_oriented(rx, rv));
    if (!validate_path(original, path))
        throw Error(Errc::ConstructionFailed, "H-family path fails validation");
    return path;
}

HPResult no_path(WitnessReason w, std::shared_ptr<StageTrace> trace) {
    HPResult res;
    res.witness = std::move(w);
    res.trace = std::move(trace);
    return res;
}

HPResult solve_two_plus(const Graph& g, const PyramidReport& report,
                        std::shared_ptr<StageTrace> trace) {
    auto g0 = std::make_shared<G0Instance>(
        detail::vertex_prune_unchecked(g, &report.slot_base_, &report.cols_));
    trace->g0 = g0;
    if (auto w = check_g0_conditions(*g0)) return no_path(*w, trace);

    auto bdeg = blue_degrees(g0->graph, g0->blue);
    int delta = 0;
    for (VertexId v : g0->graph.vertices()) delta = std::max(delta, bdeg[v]);
    if (delta == 4) {
        auto match = check_h_family(*g0);
        if (match.status != HFamilyResult::Status::Member)
            return no_path(WitnessReason(witness::NotInHFamily{}), trace);
        HPResult res;
        res.path = h_family_path(g, *g0, match);
        res.trace = trace;
        return res;
    }

    auto g1 = std::make_shared<G1Instance>(derive_g1(*g0));
    trace->g1 = g1;
    if (auto w = check_g1_conditions(*g1)) return no_path(*w, trace);

    auto bp = blue_paths(g1->graph, g1->blue, &g1->sigma);
    if (bp.cycle) return no_path(WitnessReason(witness::BlueCycle{*bp.cycle}), trace);

    EdgeClassTable table = classify_edges(*g1);
    auto assignments = enumerate_assignments(*g1);
    WitnessReason last = witness::EndpointAssignmentExhausted{
        "no endpoint assignment matches path types 1-4"};
    for (const Assignment& assign : assignments) {
        auto build = build_g2(*g1, table, assign.endpoint_s, assign.endpoint_t);
        AttemptTrace attempt;
        attempt.assign = assign;
        attempt.sets = build.sets;
        auto g2 = std::make_shared<G2Instance>(std::move(build.g2));
        attempt.g2 = g2;
        auto w = check_g2_conditions(*g2, assign.endpoint_s, assign.endpoint_t);
        bool conflict_only = w && std::holds_alternative<witness::ConflictingPaths>(*w);
        std::optional<std::vector<VertexId>> built;
        if (!w) {
            built = assemble_and_expand(g, *g1, *g2, assign);
        } else if (conflict_only) {
            // The interleaving test behind the conflicting-paths condition
            // presumes the endpoints sit at the sigma extremes; off-extreme
            // endpoints can trip it even though a covering path exists.  A
            // successful construction overrules the flag.
            try {
                built = assemble_and_expand(g, *g1, *g2, assign);
            } catch (const Error& e) {
                if (e.code() != Errc::ConstructionFailed) throw;
            }
        }
        attempt.failure = built ? std::nullopt : w;
        trace->attempts.push_back(std::move(attempt));
        if (!built) {
            last = *w;
            continue;
        }
        HPResult res;
        res.path = std::move(built);
        res.trace = trace;
        return res;
    }
    return no_path(last, trace);
}

}  // namespace

HPResult hamiltonian_path(const Graph& g) {
    auto rec = detail::recognize_and_count(g);
    if (!rec.check.ok) throw Error(Errc::NotTwoTree, "hamiltonian_path requires a 2-tree");

    auto trace = std::make_shared<StageTrace>();
    HPResult res;
    if (g.vertex_count() == 2) {
        res.path = g.vertices();
        res.trace = trace;
        return res;
    }

    const PyramidReport& report = rec.report;
    trace->label = classify(report);
    switch (trace->label) {
        case CaseLabel::ThreePyramidFree:
            // The unique Hamiltonian cycle minus its closing edge.
            res.path = detail::unique_cycle_from_report(g, report);
            res.trace = trace;
            break;
        case CaseLabel::ExactlyOneThreePyramid:
            res.path = hp_one_pyramid(g, report.three_pyramid_edges[0]);
            res.trace = trace;
            break;
        case CaseLabel::HasFourPyramid:
            return no_path(WitnessReason(witness::FourPyramid{report.four_plus_edges[0]}),
                           trace);
        case CaseLabel::TwoPlusThreePyramids:
            return solve_two_plus(g, report, trace);
    }
    if (res.path && !validate_path(g, *res.path))
        throw Error(Errc::ConstructionFailed, "constructed path fails validation");
    return res;
}

}  // namespace twotree
