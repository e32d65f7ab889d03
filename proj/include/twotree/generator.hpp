#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "twotree/graph.hpp"

namespace twotree {

enum class GenProfile {
    Any,               // uniform random growth edge
    ThreePyramidFree,  // growth restricted to edges with at most one common neighbor
    ForceThreePyramids,  // exactly k edges with three common neighbors
    ForceFourPyramid,    // one edge with four common neighbors
};

struct GenSpec {
    int n = 2;
    std::uint64_t seed = 0;
    GenProfile profile = GenProfile::Any;
    int k = 1;  // pyramid count for ForceThreePyramids

    static GenSpec parse_profile(int n, std::uint64_t seed, const std::string& profile);
    std::string profile_string() const;
};

/// Seeded 2-tree construction: n-2 growth steps on edges picked per profile.
/// Deterministic for a given spec.  Throws InfeasibleProfile.
Graph generate(const GenSpec& spec);

/// All 2-trees on vertex set {0..n-1} built by inserting vertices in id
/// order, each choosing an attachment edge; every edge set is produced
/// exactly once.  Throws TooLarge for n > 10.
void enumerate_small(int n, const std::function<void(const Graph&)>& sink);

/// Corpus manifest line: "<seed> <n> <profile> <yes|no>".
struct ManifestEntry {
    std::uint64_t seed;
    int n;
    std::string profile;
    bool expected_hp;
};

std::string manifest_line(const ManifestEntry& e);

}  // namespace twotree
