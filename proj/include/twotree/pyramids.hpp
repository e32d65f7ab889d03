#pragma once

#include <functional>
#include <string>
#include <vector>

#include "twotree/graph.hpp"
#include "twotree/twotree.hpp"

namespace twotree {

/// Per-edge common-neighbor counts of a 2-tree.  An edge with count n
/// witnesses an induced n-pyramid (the common neighbors of an edge in a
/// 2-tree are pairwise non-adjacent).  Counts sit in a flat array indexed
/// by the edge's slot in the (a < b) adjacency structure.
struct PyramidReport {
    std::vector<EdgeKey> three_pyramid_edges;  // count == 3, ascending
    std::vector<EdgeKey> four_plus_edges;      // count >= 4, ascending

    int count(EdgeKey e) const;
    /// Calls fn(edge, count) for every edge, ascending.
    void for_each(const std::function<void(EdgeKey, int)>& fn) const;

    // CSR edge-slot layout over the (a < b) halves of the adjacency
    // structure; filled by pyramid_report.
    std::vector<int> slot_base_;
    std::vector<VertexId> cols_;
    std::vector<int> counts_;
    int slot_of(EdgeKey e) const;  // -1 if absent
};

enum class CaseLabel {
    ThreePyramidFree,
    ExactlyOneThreePyramid,
    TwoPlusThreePyramids,
    HasFourPyramid,
};

std::string to_string(CaseLabel label);

/// Counts common neighbors for every edge in one elimination pass
/// (each elimination step contributes one triangle).  Throws NotTwoTree.
PyramidReport pyramid_report(const Graph& g);

/// Solver dispatch case; HasFourPyramid dominates.
CaseLabel classify(const PyramidReport& report);

namespace detail {

/// pyramid_report with a previously computed elimination trace, skipping
/// the extra recognition pass.
PyramidReport pyramid_report_traced(const Graph& g, const std::vector<VertexId>& trace);

struct RecognizeResult {
    TwoTreeCheck check;
    PyramidReport report;
};

/// 2-tree recognition and common-neighbor counting in one elimination pass.
RecognizeResult recognize_and_count(const Graph& g);

}  // namespace detail

}  // namespace twotree
