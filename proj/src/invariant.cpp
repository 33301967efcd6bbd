#include "pushgame/invariant.hpp"

#include <string>

#include "pushgame/error.hpp"

namespace pushgame {

InvariantValue color_vector(int color, int n, int m) {
    if (color < 0 || color > n)
        throw GameError(ErrorKind::ColorOutOfRange,
                        "color " + std::to_string(color) + " outside [0, " + std::to_string(n) +
                            "]");
    if (m < 2) throw GameError(ErrorKind::DomainError, "modulus must be >= 2");
    InvariantValue value;
    value.modulus = m;
    value.coords.assign(n, color == n ? m - 1 : 0);
    if (color < n) value.coords[color] = 1;
    return value;
}

InvariantValue compute_invariant(const SimplexGraph& g, const Coloring& c, const Labeling& l) {
    if (static_cast<int>(l.values.size()) != g.vertex_count)
        throw GameError(ErrorKind::DimensionMismatch,
                        "labeling has " + std::to_string(l.values.size()) + " values, graph has " +
                            std::to_string(g.vertex_count) + " vertices");
    if (!verify_coloring(g, c))
        throw GameError(ErrorKind::ImproperColoring, "coloring repeats a color inside a region");

    InvariantValue total;
    total.modulus = l.modulus;
    total.coords.assign(g.n, 0);
    for (int v = 0; v < g.vertex_count; ++v) {
        int label = l.values[v];
        if (label == 0) continue;
        int color = c.colors[v];
        if (color == g.n) {
            // all-(m-1) vector scaled by the label
            long long term = static_cast<long long>(label) * (l.modulus - 1);
            for (int k = 0; k < g.n; ++k)
                total.coords[k] = static_cast<int>((total.coords[k] + term) % l.modulus);
        } else {
            total.coords[color] = static_cast<int>(
                (static_cast<long long>(total.coords[color]) + label) % l.modulus);
        }
    }
    return total;
}

std::string class_key(const SimplexGraph& g, const Coloring& c, const Labeling& l) {
    InvariantValue value = compute_invariant(g, c, l);
    std::string key = "m" + std::to_string(value.modulus) + ":";
    for (std::size_t k = 0; k < value.coords.size(); ++k) {
        if (k > 0) key += ',';
        key += std::to_string(value.coords[k]);
    }
    return key;
}

}  // namespace pushgame
