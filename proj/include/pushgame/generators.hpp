#pragma once

#include <vector>

#include "pushgame/types.hpp"

namespace pushgame {

// Triangular coin board with `rows` rows (row i holds i+1 vertices,
// numbered row-major). Regions are all unit up- and down-triangles:
// v = rows(rows+1)/2, r = (rows-1)^2, n = 2, region-connected.
SimplexGraph triangular_board(int rows);

// t n-simplexes glued in a row by shared (n-1)-faces: region i is
// {i, ..., i+n}, v = n + t. Region-connected and always (n+1)-colorable.
SimplexGraph simplex_strip(int n, int t);

// All n+1 subsets of n+2 vertices: the complete graph K_{n+2} as an
// n-simplex graph. Region-connected and never (n+1)-colorable.
SimplexGraph complete_plus(int n);

// `count` triangles where consecutive triangles share exactly one vertex:
// the canonical decomposable board (one component per triangle, path-shaped
// association graph).
SimplexGraph shared_vertex_chain(int count);

// Threshold display: 'H' when the label is below `threshold`, else 'T'.
std::vector<char> memory_display(const Labeling& l, int threshold);

}  // namespace pushgame
