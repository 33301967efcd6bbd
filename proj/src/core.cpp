#include "pushgame/core.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "pushgame/error.hpp"

namespace pushgame {

namespace {

int positive_mod(long long value, int modulus) {
    long long r = value % modulus;
    if (r < 0) r += modulus;
    return static_cast<int>(r);
}

int shared_vertex_count(const std::vector<int>& a, const std::vector<int>& b) {
    // both sorted
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++count;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return count;
}

}  // namespace

SimplexGraph validate_graph(const RawGraph& raw) {
    if (raw.n < 1) throw GameError(ErrorKind::DomainError, "simplex dimension must be >= 1");
    if (raw.vertex_count <= 0 || raw.regions.empty())
        throw GameError(ErrorKind::EmptyGraph, "graph needs at least one vertex and one region");
    if (raw.vertex_count < raw.n + 1)
        throw GameError(ErrorKind::DomainError,
                        "vertex count " + std::to_string(raw.vertex_count) +
                            " below region size " + std::to_string(raw.n + 1));

    std::vector<std::vector<int>> regions = raw.regions;
    for (std::size_t i = 0; i < regions.size(); ++i) {
        auto& region = regions[i];
        if (static_cast<int>(region.size()) != raw.n + 1)
            throw GameError(ErrorKind::RegionSizeMismatch,
                            "region " + std::to_string(i) + " has " +
                                std::to_string(region.size()) + " vertices, expected " +
                                std::to_string(raw.n + 1));
        std::sort(region.begin(), region.end());
        for (std::size_t k = 0; k < region.size(); ++k) {
            if (region[k] < 0 || region[k] >= raw.vertex_count)
                throw GameError(ErrorKind::IndexOutOfRange,
                                "region " + std::to_string(i) + " references vertex " +
                                    std::to_string(region[k]));
            if (k > 0 && region[k] == region[k - 1])
                throw GameError(ErrorKind::DuplicateVertexInRegion,
                                "region " + std::to_string(i) + " repeats vertex " +
                                    std::to_string(region[k]));
        }
    }

    std::sort(regions.begin(), regions.end());
    for (std::size_t i = 1; i < regions.size(); ++i) {
        if (regions[i] == regions[i - 1])
            throw GameError(ErrorKind::DuplicateRegion,
                            "region listed twice at canonical index " + std::to_string(i));
    }

    std::vector<char> covered(raw.vertex_count, 0);
    for (const auto& region : regions)
        for (int v : region) covered[v] = 1;
    for (int v = 0; v < raw.vertex_count; ++v) {
        if (!covered[v])
            throw GameError(ErrorKind::UncoveredVertex,
                            "vertex " + std::to_string(v) + " appears in no region");
    }

    SimplexGraph g;
    g.n = raw.n;
    g.vertex_count = raw.vertex_count;
    g.regions = std::move(regions);
    return g;
}

std::vector<std::vector<int>> region_adjacency(const SimplexGraph& g) {
    int r = g.region_count();
    std::vector<std::vector<int>> adjacency(r);
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            if (shared_vertex_count(g.regions[i], g.regions[j]) == g.n) {
                adjacency[i].push_back(j);
                adjacency[j].push_back(i);
            }
        }
    }
    return adjacency;
}

RegionComponents region_components(const SimplexGraph& g) {
    auto adjacency = region_adjacency(g);
    int r = g.region_count();
    RegionComponents result;
    result.component.assign(r, -1);
    for (int start = 0; start < r; ++start) {
        if (result.component[start] != -1) continue;
        int id = result.count++;
        std::queue<int> queue;
        queue.push(start);
        result.component[start] = id;
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop();
            for (int next : adjacency[cur]) {
                if (result.component[next] == -1) {
                    result.component[next] = id;
                    queue.push(next);
                }
            }
        }
    }
    return result;
}

bool is_region_connected(const SimplexGraph& g) { return region_components(g).connected(); }

Labeling apply_push(const Labeling& l, const SimplexGraph& g, int region, int times) {
    if (region < 0 || region >= g.region_count())
        throw GameError(ErrorKind::IndexOutOfRange, "region " + std::to_string(region));
    if (static_cast<int>(l.values.size()) != g.vertex_count)
        throw GameError(ErrorKind::DimensionMismatch,
                        "labeling has " + std::to_string(l.values.size()) + " values, graph has " +
                            std::to_string(g.vertex_count) + " vertices");
    Labeling out = l;
    for (int v : g.regions[region])
        out.values[v] = positive_mod(static_cast<long long>(out.values[v]) + times, l.modulus);
    return out;
}

Labeling apply_push_vector(const Labeling& l, const SimplexGraph& g, const PushVector& x) {
    if (static_cast<int>(x.exponents.size()) != g.region_count())
        throw GameError(ErrorKind::DimensionMismatch,
                        "push vector has " + std::to_string(x.exponents.size()) +
                            " entries, graph has " + std::to_string(g.region_count()) +
                            " regions");
    if (x.modulus != l.modulus)
        throw GameError(ErrorKind::ModulusMismatch,
                        "labeling mod " + std::to_string(l.modulus) + " vs push vector mod " +
                            std::to_string(x.modulus));
    Labeling out = l;
    for (int region = 0; region < g.region_count(); ++region) {
        int times = x.exponents[region];
        if (times == 0) continue;
        for (int v : g.regions[region])
            out.values[v] = positive_mod(static_cast<long long>(out.values[v]) + times, l.modulus);
    }
    return out;
}

Labeling apply_sequence(const Labeling& l, const SimplexGraph& g, const PushSequence& seq) {
    Labeling out = l;
    for (const auto& step : seq.steps) out = apply_push(out, g, step.region, step.exponent);
    return out;
}

PushVector collapse(const PushSequence& sequence, int region_count, int modulus) {
    PushVector x;
    x.modulus = modulus;
    x.exponents.assign(region_count, 0);
    for (const auto& step : sequence.steps) {
        if (step.region < 0 || step.region >= region_count)
            throw GameError(ErrorKind::IndexOutOfRange, "region " + std::to_string(step.region));
        x.exponents[step.region] =
            static_cast<int>((static_cast<long long>(x.exponents[step.region]) + step.exponent) %
                             modulus + modulus) % modulus;
    }
    return x;
}

}  // namespace pushgame
