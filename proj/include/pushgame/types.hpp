#pragma once

#include <vector>

namespace pushgame {

// An n-simplex graph: a board whose regions are (n+1)-cliques. Regions are
// stored as sorted vertex lists and the region list itself is sorted, so
// region indices are stable across runs. Treat instances as immutable once
// validate_graph has produced them.
struct SimplexGraph {
    int n = 0;
    int vertex_count = 0;
    std::vector<std::vector<int>> regions;

    int region_count() const { return static_cast<int>(regions.size()); }
};

// A game state: one residue mod `modulus` per vertex.
struct Labeling {
    int modulus = 2;
    std::vector<int> values;
};

// A commutative bag of pushes: how many times each region is pushed, mod m.
struct PushVector {
    int modulus = 2;
    std::vector<int> exponents;
};

struct PushStep {
    int region = 0;
    int exponent = 0;  // in [1, m); zero-exponent steps are never emitted
};

// An ordered word of pushes. Order is irrelevant to the action; collapse()
// gives the equivalent PushVector.
struct PushSequence {
    std::vector<PushStep> steps;
};

PushVector collapse(const PushSequence& sequence, int region_count, int modulus);

// Partition of region indices into region-connected components. Component
// ids are assigned in order of each component's lowest region index.
struct RegionComponents {
    std::vector<int> component;
    int count = 0;

    bool connected() const { return count == 1; }
};

}  // namespace pushgame
