#pragma once

#include <vector>

#include "pushgame/types.hpp"

namespace pushgame {

// Ground truth by exhaustion. Size guards are hard: past them the call
// refuses (TooLarge) instead of approximating.
struct OrbitReport {
    unsigned long long orbit_size = 0;
    std::vector<unsigned long long> class_partition_sizes;  // ascending
    unsigned long long reachable_set_hash = 0;  // FNV-1a over the sorted orbit encodings
};

// Breadth-first closure of single pushes from `start`; guard m^v <= 2^20.
// Deliberately ignores the incidence matrix so it checks apply_push, not
// the linear algebra.
OrbitReport enumerate_orbit(const SimplexGraph& g, const Labeling& start);

// Number of push vectors x with from + A*x = to; guard m^r <= 2^20.
unsigned long long count_solutions_brute(const SimplexGraph& g, const Labeling& from,
                                         const Labeling& to);

// Partitions all m^v labelings into push orbits; guard m^v <= 2^16.
OrbitReport partition_all_labelings(const SimplexGraph& g, int m);

}  // namespace pushgame
