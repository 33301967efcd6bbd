#pragma once

// Test-side oracles: small, obvious brute-force routines used to derive and
// check expected values independently of the library's own algorithms.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "pushgame/coloring.hpp"
#include "pushgame/core.hpp"
#include "pushgame/types.hpp"

namespace testkit {

using namespace pushgame;

// All m^v labelings in odometer order (first vertex fastest).
inline std::vector<Labeling> all_labelings(const SimplexGraph& g, int m) {
    std::vector<Labeling> out;
    Labeling current{m, std::vector<int>(g.vertex_count, 0)};
    while (true) {
        out.push_back(current);
        int pos = 0;
        while (pos < g.vertex_count) {
            if (++current.values[pos] < m) break;
            current.values[pos] = 0;
            ++pos;
        }
        if (pos == g.vertex_count) break;
    }
    return out;
}

// All m^r push vectors in odometer order.
inline std::vector<PushVector> all_push_vectors(const SimplexGraph& g, int m) {
    std::vector<PushVector> out;
    PushVector current{m, std::vector<int>(g.region_count(), 0)};
    while (true) {
        out.push_back(current);
        int pos = 0;
        while (pos < g.region_count()) {
            if (++current.exponents[pos] < m) break;
            current.exponents[pos] = 0;
            ++pos;
        }
        if (pos == g.region_count()) break;
    }
    return out;
}

// Exhaustive proper-coloring search over all (n+1)^v assignments.
inline std::optional<Coloring> exhaustive_coloring(const SimplexGraph& g) {
    Coloring candidate{std::vector<int>(g.vertex_count, 0)};
    while (true) {
        if (verify_coloring(g, candidate)) return candidate;
        int pos = 0;
        while (pos < g.vertex_count) {
            if (++candidate.colors[pos] <= g.n) break;
            candidate.colors[pos] = 0;
            ++pos;
        }
        if (pos == g.vertex_count) return std::nullopt;
    }
}

// Region reachability by enumerating simple region paths (not BFS).
inline bool simple_path_exists(const std::vector<std::vector<int>>& adjacency, int from, int to,
                               std::vector<char>& on_path) {
    if (from == to) return true;
    on_path[from] = 1;
    for (int next : adjacency[from]) {
        if (on_path[next]) continue;
        if (simple_path_exists(adjacency, next, to, on_path)) {
            on_path[from] = 0;
            return true;
        }
    }
    on_path[from] = 0;
    return false;
}

inline bool exhaustive_region_reachable(const SimplexGraph& g, int from, int to) {
    auto adjacency = region_adjacency(g);
    std::vector<char> on_path(g.region_count(), 0);
    return simple_path_exists(adjacency, from, to, on_path);
}

// Replays the forced-color rule along a witness path and returns the color
// forced at `vertex` by the final region (or by the seed for a one-region
// path). Asserting against this checks a conflict certificate end to end.
inline int replay_witness(const SimplexGraph& g, const std::vector<int>& path, int vertex) {
    std::vector<int> colors(g.vertex_count, -1);
    int seed = path.front();
    for (int k = 0; k <= g.n; ++k) colors[g.regions[seed][k]] = k;
    if (path.size() == 1) return colors[vertex];

    int last_forced = -1;
    for (std::size_t step = 1; step < path.size(); ++step) {
        const auto& prev = g.regions[path[step - 1]];
        const auto& cur = g.regions[path[step]];
        int rv = -1;
        for (int v : cur)
            if (!std::binary_search(prev.begin(), prev.end(), v)) rv = v;
        std::vector<char> used(g.n + 1, 0);
        for (int v : cur)
            if (v != rv) used[colors[v]] = 1;
        int missing = -1;
        for (int c = 0; c <= g.n; ++c)
            if (!used[c]) missing = c;
        if (colors[rv] == -1) colors[rv] = missing;
        if (step + 1 == path.size()) {
            if (rv != vertex) return -1;
            last_forced = missing;
        }
    }
    return last_forced;
}

inline bool valid_region_path(const SimplexGraph& g, const std::vector<int>& path) {
    if (path.empty()) return false;
    auto adjacency = region_adjacency(g);
    for (std::size_t k = 1; k < path.size(); ++k) {
        const auto& nbrs = adjacency[path[k - 1]];
        if (!std::binary_search(nbrs.begin(), nbrs.end(), path[k])) return false;
    }
    return true;
}

inline Labeling random_labeling(const SimplexGraph& g, int m, std::mt19937& rng) {
    Labeling l{m, std::vector<int>(g.vertex_count)};
    std::uniform_int_distribution<int> dist(0, m - 1);
    for (int& value : l.values) value = dist(rng);
    return l;
}

inline PushVector random_push_vector(const SimplexGraph& g, int m, std::mt19937& rng) {
    PushVector x{m, std::vector<int>(g.region_count())};
    std::uniform_int_distribution<int> dist(0, m - 1);
    for (int& e : x.exponents) e = dist(rng);
    return x;
}

}  // namespace testkit
