#pragma once

#include <array>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "twotree/graph.hpp"
#include "twotree/twotree.hpp"
#include "twotree/witness.hpp"

namespace twotree {

/// Blue edges plus the oriented label per blue edge.  A label stored for the
/// canonical key (a,b) is oriented a -> b: (a, label, b) is a path in the
/// original graph spanning exactly {a, b} plus the label vertices.
struct BlueState {
    std::unordered_set<EdgeKey> blue;
    std::unordered_map<EdgeKey, std::vector<VertexId>> labels;

    bool is_blue(EdgeKey e) const { return blue.count(e) != 0; }
    bool is_blue(VertexId u, VertexId v) const { return is_blue(EdgeKey(u, v)); }

    /// Label of edge {from,to} read from `from` towards `to`; empty when
    /// unlabeled.
    std::vector<VertexId> label_oriented(VertexId from, VertexId to) const;

    std::vector<EdgeKey> blue_edges_sorted() const;
};

/// Blue-graph degrees, indexed by vertex id.
std::vector<int> blue_degrees(const Graph& g, const BlueState& blue);

/// The vertex-pruned 2-tree G0 with its blue bookkeeping.
struct G0Instance {
    Graph graph;
    BlueState blue;
    std::vector<VertexId> pruned_order;

    std::vector<VertexId> degree_two_vertices() const;
};

/// G1 = G0 - {s, t} with the perfect elimination ordering sigma.
struct G1Instance {
    Graph graph;
    BlueState blue;  // blue edges of G1; s/t-incident blues are moved to wrap_labels
    VertexId s = -1, t = -1;
    std::pair<VertexId, VertexId> s_nbrs{-1, -1};  // ascending
    std::pair<VertexId, VertexId> t_nbrs{-1, -1};
    /// Labels of the four G0 edges lost with s and t (possibly empty).
    std::unordered_map<EdgeKey, std::vector<VertexId>> wrap_labels;
    Peo sigma;
    std::vector<int> blue_deg;  // degrees in B(G1), indexed by id

    std::vector<VertexId> wrap_label_oriented(VertexId from, VertexId to) const;
};

/// Fixpoint of label-preserving degree-2 pruning: while some degree-2 vertex
/// has an uncolored close edge, delete it (lowest id first), color the close
/// edge blue and fold the labels.  Throws NotTwoTree.
G0Instance vertex_prune(const Graph& g);

/// Shape conditions a G0 must satisfy to stay solvable: exactly two
/// degree-2 vertices, max blue degree <= 4, and per degree-2 vertex at
/// most one neighbor of blue degree exactly 3.
std::optional<WitnessReason> check_g0_conditions(const G0Instance& inst);

enum class HMember { H1, H2, H3, H4 };

struct HFamilyResult {
    enum class Status { NotApplicable, Member, Witness } status;
    HMember member = HMember::H1;
    // Role vertices (v, u, w, x, y) of the matched pattern.
    std::array<VertexId, 5> roles{-1, -1, -1, -1, -1};
};

/// When the blue graph of G0 has max degree 4, G0 must match one of the four
/// fixed five-vertex patterns (blue-edge placement included) or no
/// Hamiltonian path exists.
HFamilyResult check_h_family(const G0Instance& inst);

/// Removes the two degree-2 vertices of G0 and computes sigma.
/// Throws PreconditionViolated unless G0 has exactly two degree-2
/// vertices.
G1Instance derive_g1(const G0Instance& inst);

/// G1 shape conditions: max blue degree <= 2, and the neighbor
/// blue-degree pairs of s and t are (1,2), (2,1) or (1,1).
std::optional<WitnessReason> check_g1_conditions(const G1Instance& inst);

/// Connected components of the blue graph.  With max blue degree <= 2 these
/// are simple paths unless a blue cycle exists (which kills any covering
/// Hamiltonian path).  Path endpoints are ordered by sigma position when a
/// Peo is supplied, else by id.
struct BluePaths {
    std::vector<std::vector<VertexId>> paths;
    std::optional<std::vector<VertexId>> cycle;
};

BluePaths blue_paths(const Graph& g, const BlueState& blue, const Peo* sigma = nullptr);

namespace detail {

/// vertex_prune for callers that already validated the 2-tree property.
/// slot_base/cols may borrow a previously built edge-slot index of g.
G0Instance vertex_prune_unchecked(const Graph& g, const std::vector<int>* slot_base = nullptr,
                                  const std::vector<VertexId>* cols = nullptr);

}  // namespace detail

}  // namespace twotree
