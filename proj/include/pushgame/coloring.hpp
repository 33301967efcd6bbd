#pragma once

#include <variant>
#include <vector>

#include "pushgame/types.hpp"

namespace pushgame {

// A proper (n+1)-coloring candidate: one color index in [0, n] per vertex.
struct Coloring {
    std::vector<int> colors;
};

// Certificate that propagation forced one vertex to two different colors.
// Each witness is a region path starting at the seed region of the vertex's
// component; replaying the forced-color rule along it yields the stated
// color at `vertex`.
struct ColorConflict {
    int vertex = 0;
    int forced_color_a = 0;
    int forced_color_b = 0;
    std::vector<int> witness_a;
    std::vector<int> witness_b;
};

using ColoringResult = std::variant<Coloring, ColorConflict>;

inline bool colored(const ColoringResult& result) {
    return std::holds_alternative<Coloring>(result);
}

// Deterministic forced propagation. Every region-connected component is
// seeded at its lowest region (colors 0..n in ascending vertex order) and
// grown breadth-first: a region reached across an adjacency has n vertices
// colored already, so its private vertex takes the unique missing color.
//
// Components are merged in order of their lowest region index; a component
// whose vertices were partly colored by earlier components is recolored by
// the unique color permutation that makes the shared vertices agree. If no
// permutation exists the graph has no proper (n+1)-coloring that restricts
// to the components' (rigid) colorings; that case throws StitchConflict.
ColoringResult propagate_coloring(const SimplexGraph& g);

// Same, but seeds use seed_perm[0..n] instead of 0..n. On a region-connected
// graph the result is exactly seed_perm composed with the canonical coloring.
ColoringResult propagate_coloring_seeded(const SimplexGraph& g, const std::vector<int>& seed_perm);

// True iff every region's n+1 colors are pairwise distinct and in range.
bool verify_coloring(const SimplexGraph& g, const Coloring& c);

}  // namespace pushgame
