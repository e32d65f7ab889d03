#pragma once

#include <string>
#include <variant>
#include <vector>

#include "twotree/graph.hpp"

namespace twotree {

// Machine-checkable no-path witnesses.  Each names the pipeline stage and the
// violated condition so it can be replayed against that stage's snapshot.
namespace witness {

struct FourPyramid {
    EdgeKey edge;
};
struct G0DegreeTwoCount {
    int count;
    std::vector<VertexId> vertices;
};
struct G0BlueDegree {
    VertexId vertex;
    int degree;
};
struct G0NeighborCondition {
    VertexId s, u, v;
};
struct NotInHFamily {};
struct G1BlueDegree {
    VertexId vertex;
    int degree;
};
struct G1NeighborCondition {
    VertexId s, u, v;
    int du, dv;
};
struct BlueCycle {
    std::vector<VertexId> cycle;
};
struct G2Disconnected {};
struct CutVertexComponents {
    VertexId vertex;
    int count;
};
struct BlockCutCount {
    std::vector<VertexId> block;
    int count;
};
struct DoubleForcedStar {
    VertexId vertex;
};
struct ConflictingPaths {
    std::vector<VertexId> p1, p2;
};
struct EndpointAssignmentExhausted {
    std::string detail;
};

}  // namespace witness

using WitnessReason =
    std::variant<witness::FourPyramid, witness::G0DegreeTwoCount, witness::G0BlueDegree,
                 witness::G0NeighborCondition, witness::NotInHFamily, witness::G1BlueDegree,
                 witness::G1NeighborCondition, witness::BlueCycle, witness::G2Disconnected,
                 witness::CutVertexComponents, witness::BlockCutCount,
                 witness::DoubleForcedStar, witness::ConflictingPaths,
                 witness::EndpointAssignmentExhausted>;

std::string describe(const WitnessReason& w);

}  // namespace twotree
