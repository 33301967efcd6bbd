#pragma once

#include <utility>
#include <vector>

#include "pushgame/bigint.hpp"
#include "pushgame/coloring.hpp"
#include "pushgame/types.hpp"

namespace pushgame {

// Closed-form counts next to counts measured from the incidence matrix.
// predicted_* assume a region-connected board with a proper (n+1)-coloring;
// measured_* hold on any graph.
struct ClassReport {
    Nat predicted_class_count;     // m^n
    Nat predicted_class_size;      // m^(v-n)
    Nat predicted_solution_count;  // m^(r-v+n)
    Nat measured_class_count;
    Nat measured_orbit_size;
    Nat measured_solution_count;
    bool hypotheses_hold = false;
};

ClassReport class_report(const SimplexGraph& g, int m);

// Single-vertex move: adds `amount` mod m at one vertex. These moves break
// push-invariance on purpose; they shuttle labelings between classes.
Labeling vertex_shift(const Labeling& l, int vertex, int amount);

enum class Verdict { Colorable, NotColorable };

struct ColorabilityVerdict {
    Verdict verdict = Verdict::NotColorable;
    Nat class_count;
    ColoringResult certificate;
    Nat bound_moves;  // m^(r-n)+1 probes suffice on this board
};

// Class-count criterion for (n+1)-colorability of a region-connected board:
// colorable iff the labeling classes number exactly m^n. The certificate
// (a coloring or a conflict) makes the verdict checkable without trusting
// the rank computation. Known caveat: for 1-simplex graphs probed with an
// even modulus the criterion can overcount (see README), so prefer odd m
// when n = 1.
ColorabilityVerdict probe_colorability(const SimplexGraph& g, int m);

// Region components plus the association graph: components are linked when
// they share vertices and the shared set sits inside one region.
struct Decomposition {
    RegionComponents components;
    std::vector<std::pair<int, int>> association_edges;
    bool acyclic = false;
};

Decomposition decompose(const SimplexGraph& g);

// Extends the probe to boards whose association graph is a forest: the
// whole board is colorable iff every component is, and the certificate is
// the components' colorings stitched so shared vertices agree.
ColorabilityVerdict probe_colorability_decomposed(const SimplexGraph& g, int m);

// m^(r-n)+1, the number of probes sufficient to settle (n+1)-colorability.
Nat moves_bound(long long r, long long n, long long m);

// 2^(2v-7)+1, the planar specialization (r <= 2v-4, m = 2).
Nat planar_moves_bound(long long v);

}  // namespace pushgame
