#include "pushgame/oracle.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "pushgame/core.hpp"
#include "pushgame/error.hpp"

namespace pushgame {

namespace {

// m^count if it stays within `guard`, else 0.
unsigned long long guarded_power(int m, int count, unsigned long long guard) {
    unsigned long long total = 1;
    for (int i = 0; i < count; ++i) {
        if (total > guard / m) return 0;
        total *= m;
    }
    return total;
}

std::vector<int> decode(unsigned long long code, int m, int length) {
    std::vector<int> values(length);
    for (int i = 0; i < length; ++i) {
        values[i] = static_cast<int>(code % m);
        code /= m;
    }
    return values;
}

unsigned long long encode(const std::vector<int>& values, int m) {
    unsigned long long code = 0;
    for (std::size_t i = values.size(); i-- > 0;) code = code * m + values[i];
    return code;
}

void check_values(const Labeling& l) {
    for (int value : l.values)
        if (value < 0 || value >= l.modulus)
            throw GameError(ErrorKind::DomainError, "label " + std::to_string(value) +
                                                        " outside [0, " +
                                                        std::to_string(l.modulus) + ")");
}

unsigned long long fnv1a(const std::vector<unsigned long long>& codes) {
    unsigned long long hash = 1469598103934665603ull;
    for (unsigned long long code : codes) {
        for (int byte = 0; byte < 8; ++byte) {
            hash ^= (code >> (8 * byte)) & 0xff;
            hash *= 1099511628211ull;
        }
    }
    return hash;
}

// Marks the orbit of `start_code` in `seen` and returns the sorted codes.
std::vector<unsigned long long> close_orbit(const SimplexGraph& g, int m,
                                            unsigned long long start_code,
                                            std::vector<char>& seen) {
    std::vector<unsigned long long> orbit;
    std::queue<unsigned long long> queue;
    seen[start_code] = 1;
    queue.push(start_code);
    while (!queue.empty()) {
        unsigned long long code = queue.front();
        queue.pop();
        orbit.push_back(code);
        Labeling current{m, decode(code, m, g.vertex_count)};
        for (int region = 0; region < g.region_count(); ++region) {
            unsigned long long next = encode(apply_push(current, g, region, 1).values, m);
            if (!seen[next]) {
                seen[next] = 1;
                queue.push(next);
            }
        }
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

}  // namespace

OrbitReport enumerate_orbit(const SimplexGraph& g, const Labeling& start) {
    if (static_cast<int>(start.values.size()) != g.vertex_count)
        throw GameError(ErrorKind::DimensionMismatch, "labeling length != vertex count");
    check_values(start);
    unsigned long long space = guarded_power(start.modulus, g.vertex_count, 1ull << 20);
    if (space == 0)
        throw GameError(ErrorKind::TooLarge, "m^v exceeds the 2^20 orbit guard");

    std::vector<char> seen(space, 0);
    auto orbit = close_orbit(g, start.modulus, encode(start.values, start.modulus), seen);

    OrbitReport report;
    report.orbit_size = orbit.size();
    report.class_partition_sizes = {orbit.size()};
    report.reachable_set_hash = fnv1a(orbit);
    return report;
}

unsigned long long count_solutions_brute(const SimplexGraph& g, const Labeling& from,
                                         const Labeling& to) {
    if (from.modulus != to.modulus)
        throw GameError(ErrorKind::ModulusMismatch,
                        std::to_string(from.modulus) + " vs " + std::to_string(to.modulus));
    if (static_cast<int>(from.values.size()) != g.vertex_count ||
        static_cast<int>(to.values.size()) != g.vertex_count)
        throw GameError(ErrorKind::DimensionMismatch, "labeling length != vertex count");
    check_values(from);
    check_values(to);
    int m = from.modulus;
    unsigned long long space = guarded_power(m, g.region_count(), 1ull << 20);
    if (space == 0)
        throw GameError(ErrorKind::TooLarge, "m^r exceeds the 2^20 enumeration guard");

    unsigned long long count = 0;
    for (unsigned long long code = 0; code < space; ++code) {
        PushVector x{m, decode(code, m, g.region_count())};
        if (apply_push_vector(from, g, x).values == to.values) ++count;
    }
    return count;
}

OrbitReport partition_all_labelings(const SimplexGraph& g, int m) {
    if (m < 2) throw GameError(ErrorKind::DomainError, "modulus must be >= 2");
    unsigned long long space = guarded_power(m, g.vertex_count, 1ull << 16);
    if (space == 0)
        throw GameError(ErrorKind::TooLarge, "m^v exceeds the 2^16 partition guard");

    OrbitReport report;
    std::vector<char> seen(space, 0);
    std::vector<unsigned long long> zero_orbit;
    for (unsigned long long code = 0; code < space; ++code) {
        if (seen[code]) continue;
        auto orbit = close_orbit(g, m, code, seen);
        if (code == 0) zero_orbit = orbit;
        report.class_partition_sizes.push_back(orbit.size());
    }
    std::sort(report.class_partition_sizes.begin(), report.class_partition_sizes.end());
    report.orbit_size = zero_orbit.size();
    report.reachable_set_hash = fnv1a(zero_orbit);
    return report;
}

}  // namespace pushgame
