#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "twotree/graph.hpp"
#include "twotree/pruning.hpp"
#include "twotree/pyramids.hpp"

namespace twotree {

/// Edge classification of G1 with respect to sigma: separator vs
/// non-separator edges, the left/right non-separator edge per vertex of
/// degree > 2, star machinery, and the left/right separator edges of blue
/// separator edges at star vertices.
struct EdgeClassTable {
    std::unordered_set<EdgeKey> separator;      // E_s: >= 2 common neighbors
    std::unordered_set<EdgeKey> non_separator;  // E_ns
    std::unordered_map<VertexId, EdgeKey> left_ns;   // towards lower sigma position
    std::unordered_map<VertexId, EdgeKey> right_ns;  // towards higher sigma position
    std::vector<VertexId> star_vertices;             // d_G1 >= 5, ascending
    std::unordered_set<VertexId> forced_stars;
    std::unordered_set<VertexId> double_forced_stars;
    std::map<std::pair<VertexId, EdgeKey>, EdgeKey> left_sep, right_sep;

    bool is_separator(EdgeKey e) const { return separator.count(e) != 0; }
    const EdgeKey* left_of(VertexId v) const {
        auto it = left_ns.find(v);
        return it == left_ns.end() ? nullptr : &it->second;
    }
    const EdgeKey* right_of(VertexId v) const {
        auto it = right_ns.find(v);
        return it == right_ns.end() ? nullptr : &it->second;
    }
};

/// The five Table-2 edge sets with per-edge provenance (first rule that
/// claimed the edge).  e5 keeps its removal order.
struct PruneSets {
    std::vector<EdgeKey> e1, e2, e3, e4;
    std::vector<EdgeKey> e5;
    std::map<EdgeKey, std::string> provenance;

    std::vector<EdgeKey> all_edges_sorted() const;
};

/// G2 = G1 minus the prune sets.  Blue edges and sigma are inherited
/// unchanged; the class table stays the one computed on G1.
struct G2Instance {
    Graph graph;
    BlueState blue;
    Peo sigma;
    EdgeClassTable table;
};

/// Classifies every edge of G1.  Precondition: G1 is a 3-pyramid-free
/// 2-tree with at least two vertices.
EdgeClassTable classify_edges(const G1Instance& inst);

std::vector<EdgeKey> compute_e1(const G1Instance& inst, const EdgeClassTable& table);

std::vector<EdgeKey> compute_e2(const G1Instance& inst, const EdgeClassTable& table,
                                std::map<EdgeKey, std::string>* prov = nullptr);

/// endpoint_u / endpoint_x are the chosen path endpoints (a neighbor of s
/// and of t respectively); the component tests of E3 are relative to them.
std::vector<EdgeKey> compute_e3(const G1Instance& inst, const EdgeClassTable& table,
                                VertexId endpoint_u, VertexId endpoint_x);

std::vector<EdgeKey> compute_e4(const G1Instance& inst, const EdgeClassTable& table,
                                std::map<EdgeKey, std::string>* prov = nullptr);

/// Iterated block-local edge removal on ghat = G1 - (E1 u E2 u E3 u E4):
/// scans non-blue edges in ascending order, removes the first qualifying
/// edge, recomputes blocks, repeats to fixpoint.  Returns the removal order.
/// Conditions (i)/(ii) strip the non-blue edges of the chosen endpoints, so
/// they fire only when p is that side's endpoint; condition (iii)'s
/// forced-degree-2 argument needs r interior, so endpoint r is excluded.
std::vector<EdgeKey> compute_e5(const G1Instance& inst, const EdgeClassTable& table,
                                const Graph& ghat, VertexId endpoint_u, VertexId endpoint_x,
                                std::map<EdgeKey, std::string>* prov = nullptr);

struct G2Build {
    G2Instance g2;
    PruneSets sets;
};

G2Build build_g2(const G1Instance& inst, const EdgeClassTable& table, VertexId endpoint_u,
                 VertexId endpoint_x);

/// The unique Hamiltonian cycle of a 3-pyramid-free 2-tree on >= 3 vertices,
/// as a vertex sequence starting at the lowest id, second vertex the lower
/// of its two cycle neighbors.
std::vector<VertexId> unique_cycle_3pf(const Graph& g);

namespace detail {

std::vector<VertexId> unique_cycle_from_report(const Graph& g, const PyramidReport& report);

}  // namespace detail

}  // namespace twotree
