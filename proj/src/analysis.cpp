#include "pushgame/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pushgame/core.hpp"
#include "pushgame/error.hpp"
#include "pushgame/solver.hpp"

namespace pushgame {

ClassReport class_report(const SimplexGraph& g, int m) {
    if (m < 2) throw GameError(ErrorKind::DomainError, "modulus must be >= 2");

    int v = g.vertex_count;
    int r = g.region_count();
    int n = g.n;

    ClassReport report;
    report.predicted_class_count = Nat::power(m, n);
    report.predicted_class_size = Nat::power(m, v - n);
    report.predicted_solution_count = Nat::power(m, r - v + n >= 0 ? r - v + n : 0);

    IncidenceMatrix a = incidence(g);
    std::vector<std::vector<long long>> entries(a.rows, std::vector<long long>(a.cols));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) entries[i][j] = a.at[i][j];
    SmithForm form = smith_normal_form(std::move(entries));

    // image size = prod m/gcd(d_i, m); kernel size = m^(r-rank) * prod gcd;
    // class count = m^v / image = m^(v-rank) * prod gcd. All exact.
    Nat image(1);
    Nat gcd_product(1);
    for (int i = 0; i < form.rank; ++i) {
        long long gi = std::gcd(form.divisors[i], static_cast<long long>(m));
        image.mul_small(static_cast<unsigned long long>(m / gi));
        gcd_product.mul_small(static_cast<unsigned long long>(gi));
    }
    report.measured_orbit_size = image;
    report.measured_solution_count = Nat::power(m, r - form.rank) * gcd_product;
    report.measured_class_count = Nat::power(m, v - form.rank) * gcd_product;

    report.hypotheses_hold = is_region_connected(g) && colored(propagate_coloring(g));
    return report;
}

Labeling vertex_shift(const Labeling& l, int vertex, int amount) {
    if (vertex < 0 || vertex >= static_cast<int>(l.values.size()))
        throw GameError(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(vertex));
    Labeling out = l;
    long long value = (out.values[vertex] + static_cast<long long>(amount)) % l.modulus;
    if (value < 0) value += l.modulus;
    out.values[vertex] = static_cast<int>(value);
    return out;
}

ColorabilityVerdict probe_colorability(const SimplexGraph& g, int m) {
    if (!is_region_connected(g))
        throw GameError(ErrorKind::NotRegionConnected,
                        "probe is exact only on region-connected boards");

    ClassReport report = class_report(g, m);
    ColorabilityVerdict verdict;
    verdict.class_count = report.measured_class_count;
    verdict.certificate = propagate_coloring(g);
    // The verdict is the class-count criterion; the certificate lets callers
    // cross-check it independently.
    verdict.verdict = report.measured_class_count == report.predicted_class_count
                          ? Verdict::Colorable
                          : Verdict::NotColorable;

    int r = g.region_count();
    verdict.bound_moves = Nat::power(m, r > g.n ? r - g.n : 0);
    verdict.bound_moves.add_small(1);
    return verdict;
}

Decomposition decompose(const SimplexGraph& g) {
    Decomposition result;
    result.components = region_components(g);
    int count = result.components.count;

    // vertex sets per component
    std::vector<std::vector<char>> member(count, std::vector<char>(g.vertex_count, 0));
    for (int r = 0; r < g.region_count(); ++r)
        for (int v : g.regions[r]) member[result.components.component[r]][v] = 1;

    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) {
            std::vector<int> shared;
            for (int v = 0; v < g.vertex_count; ++v)
                if (member[i][v] && member[j][v]) shared.push_back(v);
            if (shared.empty()) continue;
            bool inside_one_region = false;
            for (const auto& region : g.regions) {
                if (std::includes(region.begin(), region.end(), shared.begin(), shared.end())) {
                    inside_one_region = true;
                    break;
                }
            }
            if (inside_one_region) result.association_edges.emplace_back(i, j);
        }
    }

    // forest check by union-find over components
    std::vector<int> parent(count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    result.acyclic = true;
    for (const auto& [i, j] : result.association_edges) {
        int ri = find(i), rj = find(j);
        if (ri == rj) {
            result.acyclic = false;
            break;
        }
        parent[ri] = rj;
    }
    return result;
}

ColorabilityVerdict probe_colorability_decomposed(const SimplexGraph& g, int m) {
    Decomposition decomposition = decompose(g);
    if (!decomposition.acyclic)
        throw GameError(ErrorKind::CyclicAssociation,
                        "association graph has a cycle; the criterion is not certified there");

    // Overlaps that fit in no single region are outside the hypothesis of
    // the decomposition criterion; refuse rather than guess.
    int count = decomposition.components.count;
    std::vector<std::vector<char>> member(count, std::vector<char>(g.vertex_count, 0));
    for (int r = 0; r < g.region_count(); ++r)
        for (int v : g.regions[r]) member[decomposition.components.component[r]][v] = 1;
    std::vector<std::vector<char>> linked(count, std::vector<char>(count, 0));
    for (const auto& [i, j] : decomposition.association_edges) linked[i][j] = linked[j][i] = 1;
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j) {
            if (linked[i][j]) continue;
            for (int v = 0; v < g.vertex_count; ++v)
                if (member[i][v] && member[j][v])
                    throw GameError(ErrorKind::HypothesisViolation,
                                    "components " + std::to_string(i) + " and " +
                                        std::to_string(j) +
                                        " overlap outside any single region");
        }

    // Per-component verdicts come from the class-count criterion on the
    // component's own subgraph.
    bool all_colorable = true;
    for (int id = 0; id < count; ++id) {
        std::vector<int> vertices;
        for (int v = 0; v < g.vertex_count; ++v)
            if (member[id][v]) vertices.push_back(v);
        std::vector<int> rename(g.vertex_count, -1);
        for (std::size_t k = 0; k < vertices.size(); ++k) rename[vertices[k]] = static_cast<int>(k);

        RawGraph raw;
        raw.n = g.n;
        raw.vertex_count = static_cast<int>(vertices.size());
        for (int r = 0; r < g.region_count(); ++r) {
            if (decomposition.components.component[r] != id) continue;
            std::vector<int> region;
            for (int v : g.regions[r]) region.push_back(rename[v]);
            raw.regions.push_back(std::move(region));
        }
        ColorabilityVerdict component_verdict = probe_colorability(validate_graph(raw), m);
        if (component_verdict.verdict != Verdict::Colorable) all_colorable = false;
    }

    ColorabilityVerdict verdict;
    // Shared vertices couple the components' pushes, so the board's class
    // count is a whole-board measurement, not a per-component product.
    verdict.class_count = class_report(g, m).measured_class_count;
    // Stitching happens inside propagate_coloring: components are recolored
    // so shared vertices agree, walking the association forest.
    verdict.certificate = propagate_coloring(g);
    verdict.verdict = all_colorable ? Verdict::Colorable : Verdict::NotColorable;

    int r = g.region_count();
    verdict.bound_moves = Nat::power(m, r > g.n ? r - g.n : 0);
    verdict.bound_moves.add_small(1);
    return verdict;
}

Nat moves_bound(long long r, long long n, long long m) {
    if (n < 1 || r <= n || m < 2)
        throw GameError(ErrorKind::DomainError, "need r > n >= 1 and m >= 2");
    Nat bound = Nat::power(static_cast<unsigned long long>(m),
                           static_cast<unsigned long long>(r - n));
    bound.add_small(1);
    return bound;
}

Nat planar_moves_bound(long long v) {
    if (v < 4) throw GameError(ErrorKind::DomainError, "need v >= 4");
    Nat bound = Nat::power(2, static_cast<unsigned long long>(2 * v - 7));
    bound.add_small(1);
    return bound;
}

}  // namespace pushgame
