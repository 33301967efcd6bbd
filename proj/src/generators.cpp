#include "pushgame/generators.hpp"

#include <numeric>
#include <string>

#include "pushgame/core.hpp"
#include "pushgame/error.hpp"

namespace pushgame {

SimplexGraph triangular_board(int rows) {
    if (rows < 2) throw GameError(ErrorKind::DomainError, "triangular board needs rows >= 2");
    auto vertex = [](int row, int pos) { return row * (row + 1) / 2 + pos; };

    RawGraph raw;
    raw.n = 2;
    raw.vertex_count = rows * (rows + 1) / 2;
    for (int row = 0; row + 1 < rows; ++row) {
        for (int pos = 0; pos <= row; ++pos) {
            // upward triangle below vertex (row, pos)
            raw.regions.push_back({vertex(row, pos), vertex(row + 1, pos), vertex(row + 1, pos + 1)});
            // downward triangle between (row, pos) and (row, pos+1)
            if (pos < row)
                raw.regions.push_back(
                    {vertex(row, pos), vertex(row, pos + 1), vertex(row + 1, pos + 1)});
        }
    }
    return validate_graph(raw);
}

SimplexGraph simplex_strip(int n, int t) {
    if (n < 1 || t < 1) throw GameError(ErrorKind::DomainError, "strip needs n >= 1 and t >= 1");
    RawGraph raw;
    raw.n = n;
    raw.vertex_count = n + t;
    for (int i = 0; i < t; ++i) {
        std::vector<int> region(n + 1);
        std::iota(region.begin(), region.end(), i);
        raw.regions.push_back(std::move(region));
    }
    return validate_graph(raw);
}

SimplexGraph complete_plus(int n) {
    if (n < 1) throw GameError(ErrorKind::DomainError, "complete_plus needs n >= 1");
    RawGraph raw;
    raw.n = n;
    raw.vertex_count = n + 2;
    for (int skip = 0; skip < n + 2; ++skip) {
        std::vector<int> region;
        for (int v = 0; v < n + 2; ++v)
            if (v != skip) region.push_back(v);
        raw.regions.push_back(std::move(region));
    }
    return validate_graph(raw);
}

SimplexGraph shared_vertex_chain(int count) {
    if (count < 2) throw GameError(ErrorKind::DomainError, "chain needs count >= 2");
    RawGraph raw;
    raw.n = 2;
    raw.vertex_count = 2 * count + 1;
    for (int i = 0; i < count; ++i) raw.regions.push_back({2 * i, 2 * i + 1, 2 * i + 2});
    return validate_graph(raw);
}

std::vector<char> memory_display(const Labeling& l, int threshold) {
    if (threshold <= 0 || threshold >= l.modulus)
        throw GameError(ErrorKind::DomainError,
                        "threshold " + std::to_string(threshold) + " outside (0, " +
                            std::to_string(l.modulus) + ")");
    std::vector<char> symbols;
    symbols.reserve(l.values.size());
    for (int value : l.values) symbols.push_back(value < threshold ? 'H' : 'T');
    return symbols;
}

}  // namespace pushgame
