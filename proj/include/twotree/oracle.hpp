#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "twotree/graph.hpp"

namespace twotree {

enum class OracleMode { HP, HC, HPBetween, CoveringHP };

/// Exhaustive backtracking query.  Ground truth for the characterization
/// tests; deliberately independent of the pruning pipeline.
struct OracleQuery {
    const Graph* graph = nullptr;
    OracleMode mode = OracleMode::HP;
    /// Fixed (start, end) pair; required for HPBetween, optional for CoveringHP.
    std::optional<std::pair<VertexId, VertexId>> endpoints;
    /// CoveringHP: edges that must appear consecutively in the result.
    std::vector<EdgeKey> required;
};

/// Size limit for oracle queries (defends against accidental exponential
/// blowups in tests).  Default 20; env var TT_ORACLE_MAX overrides.
int oracle_bound();

/// Returns a witness path (or cycle vertex sequence for HC) or nullopt when
/// provably none exists.  Throws TooLarge past oracle_bound().
std::optional<std::vector<VertexId>> oracle_solve(const OracleQuery& q);

std::optional<std::vector<VertexId>> oracle_hp(const Graph& g);
std::optional<std::vector<VertexId>> oracle_hc(const Graph& g);
std::optional<std::vector<VertexId>> oracle_hp_between(const Graph& g, VertexId s, VertexId t);
std::optional<std::vector<VertexId>> oracle_covering_hp(
    const Graph& g, const std::vector<EdgeKey>& required,
    std::optional<std::pair<VertexId, VertexId>> endpoints = std::nullopt);

/// First vertex set S (by size, then lexicographic) violating the
/// Hamiltonian-path necessary condition, i.e. c(G-S) > |S| + 1.
/// Exhaustive for |V| <= 16, seeded random subsets beyond that.
std::optional<std::vector<VertexId>> chvatal_check(const Graph& g, int max_subset);

}  // namespace twotree
