#include "twotree/generator.hpp"

#include <algorithm>
#include <unordered_map>

#include "twotree/rng.hpp"

namespace twotree {

GenSpec GenSpec::parse_profile(int n, std::uint64_t seed, const std::string& profile) {
    GenSpec spec;
    spec.n = n;
    spec.seed = seed;
    if (profile == "any") {
        spec.profile = GenProfile::Any;
    } else if (profile == "3pf") {
        spec.profile = GenProfile::ThreePyramidFree;
    } else if (profile == "force4") {
        spec.profile = GenProfile::ForceFourPyramid;
    } else if (profile.rfind("force3:", 0) == 0) {
        spec.profile = GenProfile::ForceThreePyramids;
        spec.k = std::atoi(profile.c_str() + 7);
        if (spec.k < 1) throw Error(Errc::InfeasibleProfile, "bad pyramid count: " + profile);
    } else {
        throw Error(Errc::InfeasibleProfile, "unknown profile: " + profile);
    }
    return spec;
}

std::string GenSpec::profile_string() const {
    switch (profile) {
        case GenProfile::Any: return "any";
        case GenProfile::ThreePyramidFree: return "3pf";
        case GenProfile::ForceThreePyramids: return "force3:" + std::to_string(k);
        case GenProfile::ForceFourPyramid: return "force4";
    }
    return "?";
}

namespace {

// Growth state with incremental common-neighbor counts.  Adding z on edge
// (u,v) bumps exactly count(uv); the two fresh edges start at count 1.
struct Growth {
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::unordered_map<EdgeKey, int> count;
    // Edges with count <= 1 (eligible for 3-pyramid-free growth), with
    // positions for O(1) removal.
    std::vector<int> eligible;
    std::unordered_map<int, int> eligible_pos;
    VertexId next = 0;

    void start() {
        edges.emplace_back(0, 1);
        count[EdgeKey(0, 1)] = 0;
        push_eligible(0);
        next = 2;
    }

    void push_eligible(int edge_idx) {
        eligible_pos[edge_idx] = static_cast<int>(eligible.size());
        eligible.push_back(edge_idx);
    }

    void drop_eligible(int edge_idx) {
        auto it = eligible_pos.find(edge_idx);
        if (it == eligible_pos.end()) return;
        int pos = it->second;
        int last = eligible.back();
        eligible[pos] = last;
        eligible_pos[last] = pos;
        eligible.pop_back();
        eligible_pos.erase(it);
    }

    // Adds the next vertex on edges[idx]; returns the new vertex.
    VertexId grow_on(int idx) {
        auto [u, v] = edges[idx];
        VertexId z = next++;
        EdgeKey base(u, v);
        if (++count[base] >= 2) drop_eligible(idx);
        count[EdgeKey(u, z)] = 1;
        count[EdgeKey(v, z)] = 1;
        edges.emplace_back(u, z);
        push_eligible(static_cast<int>(edges.size()) - 1);
        edges.emplace_back(v, z);
        push_eligible(static_cast<int>(edges.size()) - 1);
        return z;
    }

    Graph finish(int n) const {
        Graph g = Graph::with_vertices(n);
        for (auto [a, b] : edges) g.add_edge(a, b);
        g.finalize();
        return g;
    }
};

}  // namespace

Graph generate(const GenSpec& spec) {
    if (spec.n < 2) throw Error(Errc::InfeasibleProfile, "need at least 2 vertices");
    switch (spec.profile) {
        case GenProfile::Any:
        case GenProfile::ThreePyramidFree:
            break;
        case GenProfile::ForceThreePyramids:
            if (spec.n < 2 * spec.k + 3)
                throw Error(Errc::InfeasibleProfile,
                            "force3:" + std::to_string(spec.k) + " needs n >= " +
                                std::to_string(2 * spec.k + 3));
            break;
        case GenProfile::ForceFourPyramid:
            if (spec.n < 6) throw Error(Errc::InfeasibleProfile, "force4 needs n >= 6");
            break;
    }

    SplitMix64 rng(spec.seed);
    Growth gs;
    gs.start();

    auto grow_any = [&]() { gs.grow_on(static_cast<int>(rng.below(gs.edges.size()))); };
    auto grow_3pf = [&]() {
        int idx = gs.eligible[rng.below(gs.eligible.size())];
        gs.grow_on(idx);
    };

    switch (spec.profile) {
        case GenProfile::Any:
            while (gs.next < spec.n) grow_any();
            break;
        case GenProfile::ThreePyramidFree:
            while (gs.next < spec.n) grow_3pf();
            break;
        case GenProfile::ForceThreePyramids: {
            // First pyramid sits on the root edge (count 0 -> 3); each later
            // one picks a count-1 edge and adds two apexes (1 -> 3).
            gs.grow_on(0);
            gs.grow_on(0);
            gs.grow_on(0);
            for (int p = 1; p < spec.k; ++p) {
                int idx = gs.eligible[rng.below(gs.eligible.size())];
                gs.grow_on(idx);
                gs.grow_on(idx);
            }
            while (gs.next < spec.n) grow_3pf();
            break;
        }
        case GenProfile::ForceFourPyramid:
            for (int i = 0; i < 4; ++i) gs.grow_on(0);
            while (gs.next < spec.n) grow_3pf();
            break;
    }
    return gs.finish(spec.n);
}

namespace {

void enumerate_rec(int n, std::vector<std::pair<VertexId, VertexId>>& edges, VertexId z,
                   const std::function<void(const Graph&)>& sink) {
    if (z == n) {
        Graph g = Graph::with_vertices(n);
        for (auto [a, b] : edges) g.add_edge(a, b);
        g.finalize();
        sink(g);
        return;
    }
    std::size_t m = edges.size();
    for (std::size_t i = 0; i < m; ++i) {
        auto [u, v] = edges[i];
        edges.emplace_back(u, z);
        edges.emplace_back(v, z);
        enumerate_rec(n, edges, z + 1, sink);
        edges.pop_back();
        edges.pop_back();
    }
}

}  // namespace

void enumerate_small(int n, const std::function<void(const Graph&)>& sink) {
    if (n > 10) throw Error(Errc::TooLarge, "enumerate_small limited to n <= 10");
    if (n < 2) return;
    std::vector<std::pair<VertexId, VertexId>> edges{{0, 1}};
    enumerate_rec(n, edges, 2, sink);
}

std::string manifest_line(const ManifestEntry& e) {
    return std::to_string(e.seed) + " " + std::to_string(e.n) + " " + e.profile + " " +
           (e.expected_hp ? "yes" : "no");
}

}  // namespace twotree
