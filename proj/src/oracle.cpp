#include "twotree/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

#include "twotree/rng.hpp"

namespace twotree {

int oracle_bound() {
    if (const char* env = std::getenv("TT_ORACLE_MAX")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 20;
}

namespace {

struct Search {
    const Graph& g;
    const OracleQuery& q;
    std::vector<char> visited;
    std::vector<VertexId> path;
    std::vector<int> req_deg;   // required-edge degree per vertex
    std::vector<int> req_used;  // required edges already placed per vertex
    std::size_t n;
    VertexId fixed_end = -1;

    explicit Search(const OracleQuery& query)
        : g(*query.graph), q(query), visited(g.id_bound(), 0),
          req_deg(g.id_bound(), 0), req_used(g.id_bound(), 0),
          n(g.vertex_count()) {
        for (EdgeKey e : q.required) {
            ++req_deg[e.a];
            ++req_deg[e.b];
        }
    }

    bool required_edge(VertexId a, VertexId b) const {
        if (q.required.empty()) return false;
        EdgeKey e(a, b);
        return std::find(q.required.begin(), q.required.end(), e) != q.required.end();
    }

    // The path suffix must traverse all unvisited vertices contiguously, so
    // the induced unvisited subgraph needs a Hamiltonian path reachable from
    // `cur`: prune when it disconnects or grows more than two low-degree
    // vertices.
    bool suffix_feasible(VertexId cur) {
        std::size_t left = n - path.size();
        if (left == 0) return true;
        std::vector<VertexId> stack;
        std::vector<char> seen(visited);  // reuse visited flags as "seen"
        std::size_t reached = 0;
        for (VertexId w : g.neighbors(cur)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
        if (stack.empty()) return false;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : g.neighbors(v)) {
                if (seen[w]) continue;
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
        if (reached != left) return false;
        if (left >= 2) {
            int low = 0;
            for (VertexId v = 0; v < g.id_bound(); ++v) {
                if (!g.has_vertex(v) || visited[v]) continue;
                int d = 0;
                for (VertexId w : g.neighbors(v))
                    if (!visited[w]) ++d;
                if (d <= 1 && ++low > 2) return false;
            }
        }
        return true;
    }

    bool complete() {
        VertexId last = path.back();
        switch (q.mode) {
            case OracleMode::HP:
                return true;
            case OracleMode::HPBetween:
                return last == fixed_end;
            case OracleMode::HC:
                return g.has_edge(last, path.front());
            case OracleMode::CoveringHP:
                if (fixed_end != -1 && last != fixed_end) return false;
                if (req_used[last] != req_deg[last]) return false;
                return covers_required();
        }
        return false;
    }

    bool covers_required() const {
        for (EdgeKey e : q.required) {
            bool found = false;
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                if (EdgeKey(path[i], path[i + 1]) == e) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
        return true;
    }

    bool extend() {
        VertexId cur = path.back();
        if (path.size() == n) return complete();
        if (!suffix_feasible(cur)) return false;
        for (VertexId w : g.neighbors(cur)) {
            if (visited[w]) continue;
            bool req = required_edge(cur, w);
            // Leaving cur: every required edge at cur must be on the path now.
            if (req_used[cur] + (req ? 1 : 0) != req_deg[cur]) continue;
            visited[w] = 1;
            path.push_back(w);
            if (req) {
                ++req_used[cur];
                ++req_used[w];
            }
            if (extend()) return true;
            if (req) {
                --req_used[cur];
                --req_used[w];
            }
            path.pop_back();
            visited[w] = 0;
        }
        return false;
    }

    std::optional<std::vector<VertexId>> run() {
        std::vector<VertexId> starts;
        if (q.mode == OracleMode::HC) {
            starts.push_back(g.min_vertex());
        } else if (q.endpoints) {
            starts.push_back(q.endpoints->first);
            fixed_end = q.endpoints->second;
        } else {
            starts = g.vertices();
        }
        for (VertexId s : starts) {
            if (!g.has_vertex(s)) throw Error(Errc::MissingVertex, "oracle endpoint missing");
            // A path endpoint carries one edge; two required edges there can
            // never both be covered.
            if (req_deg[s] > 1) continue;
            if (fixed_end != -1 && req_deg[fixed_end] > 1) continue;
            visited.assign(visited.size(), 0);
            std::fill(req_used.begin(), req_used.end(), 0);
            path.clear();
            visited[s] = 1;
            path.push_back(s);
            if (extend()) return path;
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<std::vector<VertexId>> oracle_solve(const OracleQuery& q) {
    const Graph& g = *q.graph;
    if (static_cast<int>(g.vertex_count()) > oracle_bound())
        throw Error(Errc::TooLarge, "oracle query beyond configured bound");
    for (EdgeKey e : q.required)
        if (!g.has_edge(e)) throw Error(Errc::MissingEdge, "required edge not in graph");
    if (g.vertex_count() == 0) return std::nullopt;
    if (g.vertex_count() == 1) {
        if (q.mode == OracleMode::HC) return std::nullopt;
        return std::vector<VertexId>{g.min_vertex()};
    }
    if (q.mode == OracleMode::HC && g.vertex_count() < 3) return std::nullopt;
    Search s(q);
    for (VertexId v = 0; v < g.id_bound(); ++v)
        if (g.has_vertex(v) && s.req_deg[v] > 2) return std::nullopt;
    return s.run();
}

std::optional<std::vector<VertexId>> oracle_hp(const Graph& g) {
    OracleQuery q{&g, OracleMode::HP, std::nullopt, {}};
    return oracle_solve(q);
}

std::optional<std::vector<VertexId>> oracle_hc(const Graph& g) {
    OracleQuery q{&g, OracleMode::HC, std::nullopt, {}};
    return oracle_solve(q);
}

std::optional<std::vector<VertexId>> oracle_hp_between(const Graph& g, VertexId s, VertexId t) {
    OracleQuery q{&g, OracleMode::HPBetween, std::make_pair(s, t), {}};
    return oracle_solve(q);
}

std::optional<std::vector<VertexId>> oracle_covering_hp(
    const Graph& g, const std::vector<EdgeKey>& required,
    std::optional<std::pair<VertexId, VertexId>> endpoints) {
    OracleQuery q{&g, OracleMode::CoveringHP, endpoints, required};
    return oracle_solve(q);
}

namespace {

bool violates(const Graph& g, const std::vector<VertexId>& s) {
    return components(g, s).size() > s.size() + 1;
}

}  // namespace

std::optional<std::vector<VertexId>> chvatal_check(const Graph& g, int max_subset) {
    auto verts = g.vertices();
    int n = static_cast<int>(verts.size());
    max_subset = std::min(max_subset, n - 1);
    if (n <= 16) {
        for (int size = 1; size <= max_subset; ++size) {
            std::vector<int> idx(size);
            for (int i = 0; i < size; ++i) idx[i] = i;
            for (;;) {
                std::vector<VertexId> s(size);
                for (int i = 0; i < size; ++i) s[i] = verts[idx[i]];
                if (violates(g, s)) return s;
                int i = size - 1;
                while (i >= 0 && idx[i] == n - size + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
        return std::nullopt;
    }
    // Large graphs: deterministic sampled subsets.
    SplitMix64 rng(0x2b7e151628aed2a6ULL ^ (static_cast<std::uint64_t>(n) << 32));
    for (int trial = 0; trial < 20000; ++trial) {
        int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_subset)));
        std::vector<VertexId> s;
        for (int i = 0; i < size; ++i) s.push_back(verts[rng.below(verts.size())]);
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (violates(g, s)) return s;
    }
    return std::nullopt;
}

}  // namespace twotree
