#pragma once

#include <optional>
#include <vector>

#include "pushgame/bigint.hpp"
#include "pushgame/coloring.hpp"
#include "pushgame/types.hpp"

namespace pushgame {

// Vertex-by-region 0/1 membership matrix. Pushing by x sends a labeling l
// to l + A*x mod m, so everything about reachability is linear algebra on A.
struct IncidenceMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<int>> at;
};

IncidenceMatrix incidence(const SimplexGraph& g);

// Integer Smith normal form: left * M * right is diagonal with positive
// divisors d_1 | d_2 | ... | d_rank. Both transforms are unimodular.
//
// Exact for board incidence matrices of any size here. Dense matrices with
// large entries can swell the transforms past 128 bits during reduction;
// that raises TooLarge instead of returning a wrong answer.
struct SmithForm {
    std::vector<std::vector<long long>> left;
    std::vector<std::vector<long long>> right;
    std::vector<long long> divisors;
    int rank = 0;
};

SmithForm smith_normal_form(std::vector<std::vector<long long>> matrix);

struct SolutionSet {
    bool feasible = false;
    std::optional<PushVector> particular;
    std::vector<PushVector> kernel_basis;
    Nat solution_count;  // 0 when infeasible, kernel size otherwise
};

// Solves A*x = (to - from) mod m through the integer Smith form of A, so
// composite moduli are exact. Works on any valid graph.
SolutionSet solve_linear(const SimplexGraph& g, const Labeling& from, const Labeling& to);

// Invariant-based decision: on a region-connected graph with a proper
// (n+1)-coloring, reachability is exactly equality of the invariants.
bool decide_by_invariant(const SimplexGraph& g, const Coloring& c, const Labeling& from,
                         const Labeling& to);

using RegionPath = std::vector<int>;

// Plan behind the constructive backend. For each color j the plan lists
// transfer pairs: pushing fix_region by p and carry_region by m-p changes
// only the two private vertices (both colored j), setting one and carrying
// the residue toward the root. Pairs are ordered so a vertex, once set, is
// never touched again; the root region absorbs every residue and is
// finished by a single closing push.
struct ColorPaths {
    struct TransferPair {
        int fix_region = 0;
        int carry_region = 0;
        int fixed_vertex = 0;
        int carry_vertex = 0;
    };

    int root = 0;
    std::vector<std::vector<TransferPair>> pairs_by_color;
    // One region path per color for display and checking: consecutive
    // entries adjacent, transfer pairs embedded in order, last entry the
    // root. Connector stretches between pairs carry no pushes.
    std::vector<RegionPath> paths;
};

ColorPaths build_color_paths(const SimplexGraph& g, const Coloring& c);

// Emits a push word turning `from` into `to`, or nullopt when the invariants
// differ. The returned sequence is verified internally against `to`; a
// mismatch throws InternalCheckFailed (unreachable in a correct build).
std::optional<PushSequence> solve_region_paths(const SimplexGraph& g, const Coloring& c,
                                               const Labeling& from, const Labeling& to);

}  // namespace pushgame
