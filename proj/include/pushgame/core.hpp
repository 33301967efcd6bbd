#pragma once

#include <vector>

#include "pushgame/types.hpp"

namespace pushgame {

// Unvalidated input for validate_graph.
struct RawGraph {
    int n = 0;
    int vertex_count = 0;
    std::vector<std::vector<int>> regions;
};

// Checks every structural invariant and returns the canonical form
// (regions sorted internally and lexicographically). Throws GameError
// naming the first violated invariant and the offending region or vertex.
SimplexGraph validate_graph(const RawGraph& raw);

// Adjacency lists over region indices: i ~ j iff the regions share exactly
// n vertices. Lists are sorted ascending.
std::vector<std::vector<int>> region_adjacency(const SimplexGraph& g);

RegionComponents region_components(const SimplexGraph& g);

bool is_region_connected(const SimplexGraph& g);

// Adds `times` (any integer, reduced mod m) to every vertex of one region.
Labeling apply_push(const Labeling& l, const SimplexGraph& g, int region, int times);

Labeling apply_push_vector(const Labeling& l, const SimplexGraph& g, const PushVector& x);

Labeling apply_sequence(const Labeling& l, const SimplexGraph& g, const PushSequence& seq);

}  // namespace pushgame
