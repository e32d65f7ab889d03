#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "twotree/edge_pruning.hpp"
#include "twotree/graph.hpp"
#include "twotree/pruning.hpp"
#include "twotree/pyramids.hpp"
#include "twotree/witness.hpp"

namespace twotree {

/// One endpoint assignment tried by the pipeline: the path runs from a
/// neighbor of s to a neighbor of t, constrained by the four path types.
struct Assignment {
    VertexId endpoint_s = -1, inner_s = -1;
    VertexId endpoint_t = -1, inner_t = -1;
    int type = 0;  // 1..4
};

struct AttemptTrace {
    Assignment assign;
    PruneSets sets;
    std::shared_ptr<const G2Instance> g2;
    std::optional<WitnessReason> failure;  // empty for the winning attempt
};

struct StageTrace {
    CaseLabel label = CaseLabel::ThreePyramidFree;
    std::shared_ptr<const G0Instance> g0;
    std::shared_ptr<const G1Instance> g1;
    std::vector<AttemptTrace> attempts;
};

struct HPResult {
    std::optional<std::vector<VertexId>> path;
    std::optional<WitnessReason> witness;
    std::shared_ptr<const StageTrace> trace;

    bool has_path() const { return path.has_value(); }
};

/// True iff p visits every vertex of g exactly once with consecutive
/// vertices adjacent.
bool validate_path(const Graph& g, const std::vector<VertexId>& p);

/// The unique Hamiltonian cycle of a 3-pyramid-free 2-tree (|V| >= 3),
/// built from the edges with exactly one common neighbor.
/// Throws PreconditionViolated.
std::vector<VertexId> hamiltonian_cycle_3pf(const Graph& g);

/// Hamiltonian path of a 4-pyramid-free 2-tree whose single 3-pyramid sits
/// on pyramid_edge: splices the (u,v)-paths of the three components of
/// G - {u,v}.  Throws PreconditionViolated.
std::vector<VertexId> hp_one_pyramid(const Graph& g, EdgeKey pyramid_edge);

/// Solvability conditions on G2 for path endpoints (u, x): connectivity, cut
/// vertices splitting into exactly two parts, at most two cut vertices per
/// block, no double forced stars, no conflicting paths, both endpoints of
/// degree 1, and the block chain from u's block reaching x's while covering
/// every block.
std::optional<WitnessReason> check_g2_conditions(const G2Instance& g2, VertexId u, VertexId x);

struct ConflictingPair {
    std::vector<VertexId> p1, p2;
};

/// First pair of conflicting blue paths in G2 (maximal separator-free blue
/// paths whose sigma indices interleave without the closing edge).
std::optional<ConflictingPair> find_conflicting_paths(const G2Instance& g2);

/// (p,q)-Hamiltonian path of one block containing all its blue edges.
/// Throws ConstructionFailed on contract breaches.
std::vector<VertexId> spanning_path(const Graph& block, const BlueState& blue,
                                    const Peo& sigma, VertexId p, VertexId q);

/// Endpoint assignments compatible with path types 1-4, in deterministic
/// order.  Empty when no neighbor combination satisfies any type.
std::vector<Assignment> enumerate_assignments(const G1Instance& g1);

/// Full decision + construction per the three-stage pipeline.  Returns a
/// validated Hamiltonian path of g or a replayable no-path witness.
/// Throws NotTwoTree for non-2-trees and ConstructionFailed if a stage
/// passes its checks but the construction breaks (unmodeled edge case).
HPResult hamiltonian_path(const Graph& g);

}  // namespace twotree
