#include "pushgame/solver.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "pushgame/core.hpp"
#include "pushgame/error.hpp"
#include "pushgame/invariant.hpp"

namespace pushgame {

namespace {

using wide = __int128;

wide checked_mul(wide a, wide b) {
    wide out;
    if (__builtin_mul_overflow(a, b, &out))
        throw GameError(ErrorKind::TooLarge, "Smith form entry growth exceeds 128 bits");
    return out;
}

wide checked_add(wide a, wide b) {
    wide out;
    if (__builtin_add_overflow(a, b, &out))
        throw GameError(ErrorKind::TooLarge, "Smith form entry growth exceeds 128 bits");
    return out;
}

wide wide_abs(wide a) { return a < 0 ? -a : a; }

long long narrow(wide a) {
    if (a > static_cast<wide>(9223372036854775807ll) ||
        a < -static_cast<wide>(9223372036854775807ll) - 1)
        throw GameError(ErrorKind::TooLarge, "Smith form result does not fit in 64 bits");
    return static_cast<long long>(a);
}

int mod_reduce(long long value, int modulus) {
    long long r = value % modulus;
    if (r < 0) r += modulus;
    return static_cast<int>(r);
}

long long mod_inverse(long long a, long long m) {
    // extended Euclid; caller guarantees gcd(a, m) == 1
    long long old_r = a % m, r = m;
    long long old_s = 1, s = 0;
    while (r != 0) {
        long long q = old_r / r;
        long long tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    return ((old_s % m) + m) % m;
}

}  // namespace

IncidenceMatrix incidence(const SimplexGraph& g) {
    IncidenceMatrix a;
    a.rows = g.vertex_count;
    a.cols = g.region_count();
    a.at.assign(a.rows, std::vector<int>(a.cols, 0));
    for (int j = 0; j < a.cols; ++j)
        for (int v : g.regions[j]) a.at[v][j] = 1;
    return a;
}

SmithForm smith_normal_form(std::vector<std::vector<long long>> input) {
    int rows = static_cast<int>(input.size());
    int cols = rows == 0 ? 0 : static_cast<int>(input[0].size());

    // work in 128 bits; boards never need it, dense handmade matrices might
    std::vector<std::vector<wide>> m(rows, std::vector<wide>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m[i][j] = input[i][j];
    std::vector<std::vector<wide>> left(rows, std::vector<wide>(rows, 0));
    std::vector<std::vector<wide>> right(cols, std::vector<wide>(cols, 0));
    for (int i = 0; i < rows; ++i) left[i][i] = 1;
    for (int j = 0; j < cols; ++j) right[j][j] = 1;

    auto swap_rows = [&](int a, int b) {
        std::swap(m[a], m[b]);
        std::swap(left[a], left[b]);
    };
    auto swap_cols = [&](int a, int b) {
        for (int i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
        for (int i = 0; i < cols; ++i) std::swap(right[i][a], right[i][b]);
    };
    auto add_row = [&](int dst, int src, wide factor) {
        for (int j = 0; j < cols; ++j)
            m[dst][j] = checked_add(m[dst][j], checked_mul(factor, m[src][j]));
        for (int j = 0; j < rows; ++j)
            left[dst][j] = checked_add(left[dst][j], checked_mul(factor, left[src][j]));
    };
    auto add_col = [&](int dst, int src, wide factor) {
        for (int i = 0; i < rows; ++i)
            m[i][dst] = checked_add(m[i][dst], checked_mul(factor, m[i][src]));
        for (int i = 0; i < cols; ++i)
            right[i][dst] = checked_add(right[i][dst], checked_mul(factor, right[i][src]));
    };

    // balanced quotient: remainder magnitude at most |b|/2, which keeps
    // intermediate entries from blowing up during long reduction chains
    auto balanced_quotient = [](wide a, wide b) {
        wide q = a / b;
        wide r = a - q * b;
        if (2 * wide_abs(r) > wide_abs(b)) q += (a < 0) == (b < 0) ? 1 : -1;
        return q;
    };

    SmithForm form;

    // phase 1: diagonalize, deferring the divisor chain. The pivot is
    // always the smallest nonzero entry of the remaining block, re-selected
    // after every dirty pass; anything else makes the entries explode.
    int steps = std::min(rows, cols);
    for (int t = 0; t < steps; ++t) {
        bool block_empty = false;
        while (true) {
            int pi = -1, pj = -1;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j)
                    if (m[i][j] != 0 &&
                        (pi == -1 || wide_abs(m[i][j]) < wide_abs(m[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == -1) {
                block_empty = true;
                break;
            }
            if (pi != t) swap_rows(t, pi);
            if (pj != t) swap_cols(t, pj);

            bool clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                add_row(i, t, -balanced_quotient(m[i][t], m[t][t]));
                clean = clean && m[i][t] == 0;
            }
            for (int j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                add_col(j, t, -balanced_quotient(m[t][j], m[t][t]));
                clean = clean && m[t][j] == 0;
            }
            if (clean) break;
        }
        if (block_empty) break;
        ++form.rank;
    }

    // phase 2: enforce d_i | d_j pairwise; each fix is a 2x2 gcd/lcm step
    // with entries bounded by the divisors themselves
    for (int i = 0; i < form.rank; ++i) {
        for (int j = i + 1; j < form.rank; ++j) {
            if (m[j][j] % m[i][i] == 0) continue;
            add_col(i, j, 1);  // column i now holds m[i][i] and m[j][j]
            while (true) {
                if (m[j][i] != 0) {
                    if (wide_abs(m[j][i]) < wide_abs(m[i][i])) swap_rows(i, j);
                    add_row(j, i, -balanced_quotient(m[j][i], m[i][i]));
                    continue;
                }
                if (m[i][j] != 0) {
                    add_col(j, i, -balanced_quotient(m[i][j], m[i][i]));
                    if (m[i][j] != 0) swap_cols(i, j);
                    continue;
                }
                break;
            }
        }
    }

    for (int t = 0; t < form.rank; ++t) {
        if (m[t][t] < 0) {
            for (int j = 0; j < cols; ++j) m[t][j] = -m[t][j];
            for (int j = 0; j < rows; ++j) left[t][j] = -left[t][j];
        }
    }
    std::vector<wide> divisors;
    for (int t = 0; t < form.rank; ++t) divisors.push_back(m[t][t]);

    form.left.assign(rows, std::vector<long long>(rows));
    form.right.assign(cols, std::vector<long long>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rows; ++j) form.left[i][j] = narrow(left[i][j]);
    for (int i = 0; i < cols; ++i)
        for (int j = 0; j < cols; ++j) form.right[i][j] = narrow(right[i][j]);
    for (wide d : divisors) form.divisors.push_back(narrow(d));
    return form;
}

SolutionSet solve_linear(const SimplexGraph& g, const Labeling& from, const Labeling& to) {
    if (from.modulus != to.modulus)
        throw GameError(ErrorKind::ModulusMismatch,
                        std::to_string(from.modulus) + " vs " + std::to_string(to.modulus));
    if (from.modulus < 2) throw GameError(ErrorKind::DomainError, "modulus must be >= 2");
    if (static_cast<int>(from.values.size()) != g.vertex_count ||
        static_cast<int>(to.values.size()) != g.vertex_count)
        throw GameError(ErrorKind::DimensionMismatch, "labeling length != vertex count");

    int modulus = from.modulus;
    int rows = g.vertex_count;
    int cols = g.region_count();

    IncidenceMatrix a = incidence(g);
    std::vector<std::vector<long long>> entries(rows, std::vector<long long>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) entries[i][j] = a.at[i][j];
    SmithForm form = smith_normal_form(std::move(entries));

    // transformed right-hand side: left * (to - from), reduced mod m
    std::vector<int> rhs(rows);
    for (int i = 0; i < rows; ++i) {
        __int128 acc = 0;
        for (int k = 0; k < rows; ++k)
            acc += static_cast<__int128>(form.left[i][k]) * (to.values[k] - from.values[k]);
        rhs[i] = mod_reduce(static_cast<long long>(acc % modulus), modulus);
    }

    SolutionSet result;
    result.solution_count = Nat(0);

    bool feasible = true;
    for (int i = form.rank; i < rows && feasible; ++i)
        if (rhs[i] != 0) feasible = false;

    std::vector<long long> gcds(form.rank);
    for (int i = 0; i < form.rank; ++i) gcds[i] = std::gcd(form.divisors[i], (long long)modulus);
    for (int i = 0; i < form.rank && feasible; ++i)
        if (rhs[i] % gcds[i] != 0) feasible = false;

    if (!feasible) return result;

    result.feasible = true;

    // pull the diagonal solution back through the column transform
    std::vector<long long> y(cols, 0);
    for (int i = 0; i < form.rank; ++i) {
        long long g_i = gcds[i];
        long long m_i = modulus / g_i;
        if (m_i == 1) continue;
        long long reduced = (form.divisors[i] / g_i) % m_i;
        y[i] = (rhs[i] / g_i) % m_i * mod_inverse(reduced, m_i) % m_i;
    }

    auto back_substitute = [&](const std::vector<long long>& diag) {
        PushVector x;
        x.modulus = modulus;
        x.exponents.assign(cols, 0);
        for (int j = 0; j < cols; ++j) {
            __int128 acc = 0;
            for (int k = 0; k < cols; ++k)
                acc += static_cast<__int128>(form.right[j][k]) * diag[k];
            x.exponents[j] = mod_reduce(static_cast<long long>(acc % modulus), modulus);
        }
        return x;
    };

    result.particular = back_substitute(y);

    // kernel generators: torsion directions first, then the free columns
    for (int i = 0; i < form.rank; ++i) {
        if (gcds[i] == 1) continue;
        std::vector<long long> e(cols, 0);
        e[i] = modulus / gcds[i];
        result.kernel_basis.push_back(back_substitute(e));
    }
    for (int j = form.rank; j < cols; ++j) {
        std::vector<long long> e(cols, 0);
        e[j] = 1;
        result.kernel_basis.push_back(back_substitute(e));
    }

    Nat count = Nat::power(modulus, cols - form.rank);
    for (int i = 0; i < form.rank; ++i) count.mul_small(static_cast<unsigned long long>(gcds[i]));
    result.solution_count = count;
    return result;
}

bool decide_by_invariant(const SimplexGraph& g, const Coloring& c, const Labeling& from,
                         const Labeling& to) {
    if (from.modulus != to.modulus)
        throw GameError(ErrorKind::ModulusMismatch,
                        std::to_string(from.modulus) + " vs " + std::to_string(to.modulus));
    if (!is_region_connected(g))
        throw GameError(ErrorKind::HypothesisViolation, "graph is not region-connected");
    if (!verify_coloring(g, c))
        throw GameError(ErrorKind::HypothesisViolation, "coloring is not proper");
    return compute_invariant(g, c, from) == compute_invariant(g, c, to);
}

namespace {

// Region path in the adjacency graph from `start` to `goal` (inclusive),
// breadth-first with ascending tie-breaks.
std::vector<int> shortest_region_walk(const std::vector<std::vector<int>>& adjacency, int start,
                                      int goal) {
    if (start == goal) return {start};
    std::vector<int> before(adjacency.size(), -1);
    std::queue<int> queue;
    queue.push(start);
    before[start] = start;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop();
        for (int nb : adjacency[cur]) {
            if (before[nb] != -1) continue;
            before[nb] = cur;
            if (nb == goal) {
                std::vector<int> walk;
                for (int at = goal; at != start; at = before[at]) walk.push_back(at);
                walk.push_back(start);
                std::reverse(walk.begin(), walk.end());
                return walk;
            }
            queue.push(nb);
        }
    }
    throw GameError(ErrorKind::InternalCheckFailed, "regions not connected during walk");
}

}  // namespace

ColorPaths build_color_paths(const SimplexGraph& g, const Coloring& c) {
    if (!is_region_connected(g))
        throw GameError(ErrorKind::HypothesisViolation, "graph is not region-connected");
    if (!verify_coloring(g, c))
        throw GameError(ErrorKind::HypothesisViolation, "coloring is not proper");

    auto adjacency = region_adjacency(g);
    int region_count = g.region_count();

    ColorPaths plan;
    plan.root = 0;
    plan.pairs_by_color.resize(g.n + 1);
    plan.paths.resize(g.n + 1);

    // per-region vertex of each color (proper coloring: exactly one)
    std::vector<std::vector<int>> color_vertex(region_count, std::vector<int>(g.n + 1, -1));
    for (int r = 0; r < region_count; ++r)
        for (int v : g.regions[r]) color_vertex[r][c.colors[v]] = v;

    for (int color = 0; color <= g.n; ++color) {
        // Exchange graph for this color: vertices are the color's vertices;
        // u ~ w when adjacent regions present them as the two privates.
        // Any region path between two of the color's vertices induces a walk
        // here, so the exchange graph inherits region-connectedness.
        struct Link {
            int neighbor;
            int fix_region;    // contains the child vertex
            int carry_region;  // contains the parent vertex
        };
        std::vector<std::vector<Link>> exchange(g.vertex_count);
        for (int r = 0; r < region_count; ++r) {
            int u = color_vertex[r][color];
            for (int nb : adjacency[r]) {
                int w = color_vertex[nb][color];
                if (u != w) exchange[u].push_back({w, r, nb});
            }
        }
        for (auto& links : exchange)
            std::sort(links.begin(), links.end(), [](const Link& a, const Link& b) {
                return std::tie(a.neighbor, a.fix_region, a.carry_region) <
                       std::tie(b.neighbor, b.fix_region, b.carry_region);
            });

        int root_vertex = color_vertex[plan.root][color];
        std::vector<int> depth(g.vertex_count, -1);
        std::vector<Link> tree_link(g.vertex_count, Link{-1, -1, -1});
        std::queue<int> queue;
        depth[root_vertex] = 0;
        queue.push(root_vertex);
        std::vector<int> order;  // BFS discovery order
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            order.push_back(u);
            for (const Link& link : exchange[u]) {
                if (depth[link.neighbor] != -1) continue;
                depth[link.neighbor] = depth[u] + 1;
                // child's tree link: fix side holds the child, carry side u
                tree_link[link.neighbor] = {u, link.carry_region, link.fix_region};
                queue.push(link.neighbor);
            }
        }

        // deepest first, so the carried residue always lands on a vertex
        // that has not been set yet (its parent)
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return depth[a] > depth[b]; });
        auto& pairs = plan.pairs_by_color[color];
        for (int u : order) {
            if (u == root_vertex) continue;
            const Link& link = tree_link[u];
            pairs.push_back({link.fix_region, link.carry_region, u, link.neighbor});
        }

        // display path: embed the pairs in order, connected by zero-push
        // walks, finishing at the root region
        RegionPath& path = plan.paths[color];
        auto extend_to = [&](int region) {
            if (path.empty()) {
                path.push_back(region);
                return;
            }
            if (path.back() == region) return;
            auto walk = shortest_region_walk(adjacency, path.back(), region);
            path.insert(path.end(), walk.begin() + 1, walk.end());
        };
        for (const auto& pair : pairs) {
            extend_to(pair.fix_region);
            path.push_back(pair.carry_region);
        }
        extend_to(plan.root);
    }
    return plan;
}

std::optional<PushSequence> solve_region_paths(const SimplexGraph& g, const Coloring& c,
                                               const Labeling& from, const Labeling& to) {
    if (!decide_by_invariant(g, c, from, to)) return std::nullopt;

    int modulus = from.modulus;
    ColorPaths plan = build_color_paths(g, c);

    PushSequence sequence;
    Labeling current = from;
    for (int color = 0; color <= g.n; ++color) {
        for (const auto& pair : plan.pairs_by_color[color]) {
            int p = mod_reduce(to.values[pair.fixed_vertex] - current.values[pair.fixed_vertex],
                               modulus);
            if (p == 0) continue;
            sequence.steps.push_back({pair.fix_region, p});
            sequence.steps.push_back({pair.carry_region, modulus - p});
            current = apply_push(current, g, pair.fix_region, p);
            current = apply_push(current, g, pair.carry_region, modulus - p);
        }
    }

    // closing push on the root: aligning its color-0 vertex forces the rest
    // because any n of the n+1 color vectors are a basis of Z_m^n
    int anchor = -1;
    for (int v : g.regions[plan.root])
        if (c.colors[v] == 0) anchor = v;
    int p = mod_reduce(to.values[anchor] - current.values[anchor], modulus);
    if (p != 0) {
        sequence.steps.push_back({plan.root, p});
        current = apply_push(current, g, plan.root, p);
    }

    if (current.values != to.values)
        throw GameError(ErrorKind::InternalCheckFailed,
                        "constructed push sequence does not reach the target labeling");
    return sequence;
}

}  // namespace pushgame
