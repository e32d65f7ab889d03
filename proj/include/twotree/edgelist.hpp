#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "twotree/graph.hpp"

namespace twotree {

/// Text edge-list format: header "n m", then m lines "a b" with
/// 0 <= a < b < n.  '#'-prefixed comment lines are ignored.  LF endings,
/// ASCII.  Parsing is strict so that writing and re-parsing round-trips
/// exactly; errors carry the offending line number.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

/// DOT rendering: blue edges styled and labeled with their recorded vertex
/// sequences, path edges highlighted.
struct DotOptions {
    const std::vector<EdgeKey>* blue_edges = nullptr;
    const std::vector<std::pair<EdgeKey, std::string>>* blue_labels = nullptr;
    const std::vector<VertexId>* path = nullptr;
};

void write_dot(std::ostream& out, const Graph& g, const DotOptions& opt);

}  // namespace twotree
