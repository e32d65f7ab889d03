#pragma once

#include <optional>
#include <vector>

#include "twotree/graph.hpp"

namespace twotree {

/// Perfect elimination ordering (v_1, ..., v_k): each v_i is simplicial in
/// the subgraph induced on {v_i, ..., v_k}.
struct Peo {
    std::vector<VertexId> order;
    std::vector<int> position;  // indexed by id, -1 for absent vertices

    int pos(VertexId v) const { return position[v]; }
};

struct TwoTreeCheck {
    bool ok = false;
    /// Degree-2 elimination order down to the final edge, when ok.
    std::vector<VertexId> trace;
};

/// True iff g is a 2-tree: repeatedly deleting a degree-2 vertex whose
/// neighbors are adjacent reduces g to a single edge.  Never throws;
/// disconnected and degenerate inputs simply report false.
TwoTreeCheck is_two_tree(const Graph& g);

/// PEO of a 2-tree whose first and last vertices have degree 2 in g
/// (for |V| >= 3).  Tie-break: each step eliminates the lowest-id eligible
/// degree-2 vertex, except that the highest-id degree-2 vertex of g is
/// withheld until last.  Throws NotTwoTree.
Peo peo_with_degree2_endpoints(const Graph& g);

/// All simplicial degree-2 vertices of a 2-tree, ascending.
std::vector<VertexId> simplicial_degree2_vertices(const Graph& g);

}  // namespace twotree
