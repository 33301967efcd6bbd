#include "pushgame/coloring.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "pushgame/core.hpp"
#include "pushgame/error.hpp"

namespace pushgame {

namespace {

// The single vertex of `region` that is not in `other`; -1 if none or many.
int private_vertex(const std::vector<int>& region, const std::vector<int>& other) {
    int found = -1;
    for (int v : region) {
        if (!std::binary_search(other.begin(), other.end(), v)) {
            if (found != -1) return -1;
            found = v;
        }
    }
    return found;
}

int missing_color(const SimplexGraph& g, const std::vector<int>& colors,
                  const std::vector<int>& region, int skip_vertex) {
    std::vector<char> used(g.n + 1, 0);
    for (int v : region) {
        if (v == skip_vertex) continue;
        used[colors[v]] = 1;
    }
    for (int c = 0; c <= g.n; ++c)
        if (!used[c]) return c;
    return -1;  // unreachable on properly colored shared sets
}

std::vector<int> path_from_seed(const std::vector<int>& parent, int region) {
    std::vector<int> path;
    for (int cur = region; cur != -1; cur = parent[cur]) path.push_back(cur);
    std::reverse(path.begin(), path.end());
    return path;
}

struct ComponentRun {
    bool conflicted = false;
    ColorConflict conflict;
    std::vector<int> local_colors;  // canonical (seed colored 0..n)
};

ComponentRun propagate_component(const SimplexGraph& g,
                                 const std::vector<std::vector<int>>& adjacency,
                                 const std::vector<int>& component_regions) {
    ComponentRun run;
    run.local_colors.assign(g.vertex_count, -1);
    std::vector<int> parent(g.region_count(), -1);
    std::vector<int> colorer(g.vertex_count, -1);  // region whose forcing colored the vertex
    std::vector<char> visited(g.region_count(), 0);

    int seed = component_regions.front();
    for (int k = 0; k <= g.n; ++k) {
        run.local_colors[g.regions[seed][k]] = k;
        colorer[g.regions[seed][k]] = seed;
    }
    visited[seed] = 1;
    std::queue<int> queue;
    queue.push(seed);

    while (!queue.empty()) {
        int q = queue.front();
        queue.pop();
        for (int nb : adjacency[q]) {
            int rv = private_vertex(g.regions[nb], g.regions[q]);
            int forced = missing_color(g, run.local_colors, g.regions[nb], rv);
            if (run.local_colors[rv] == -1) {
                // Assignments only happen on first-visit edges, so rv's
                // witness path is the tree path to nb (set just below).
                run.local_colors[rv] = forced;
                colorer[rv] = nb;
            } else if (run.local_colors[rv] != forced) {
                run.conflicted = true;
                run.conflict.vertex = rv;
                run.conflict.forced_color_a = run.local_colors[rv];
                run.conflict.forced_color_b = forced;
                run.conflict.witness_a = path_from_seed(parent, colorer[rv]);
                run.conflict.witness_b = path_from_seed(parent, q);
                run.conflict.witness_b.push_back(nb);
                return run;
            }
            if (!visited[nb]) {
                visited[nb] = 1;
                parent[nb] = q;
                queue.push(nb);
            }
        }
    }
    return run;
}

void check_seed_perm(const SimplexGraph& g, const std::vector<int>& seed_perm) {
    if (static_cast<int>(seed_perm.size()) != g.n + 1)
        throw GameError(ErrorKind::DimensionMismatch,
                        "seed permutation needs " + std::to_string(g.n + 1) + " colors");
    std::vector<char> seen(g.n + 1, 0);
    for (int c : seed_perm) {
        if (c < 0 || c > g.n || seen[c])
            throw GameError(ErrorKind::DomainError, "seed permutation is not a permutation");
        seen[c] = 1;
    }
}

// Components are merged along a spanning forest of their vertex-overlap
// graph, so each one is constrained by a single earlier neighbor. Index
// order would let a component meet two independently colored neighbors and
// clash where a recoloring exists.
std::vector<int> overlap_forest_order(const SimplexGraph& g, int count,
                                      const std::vector<std::vector<int>>& regions_of) {
    std::vector<std::vector<char>> member(count, std::vector<char>(g.vertex_count, 0));
    for (int id = 0; id < count; ++id)
        for (int r : regions_of[id])
            for (int v : g.regions[r]) member[id][v] = 1;

    std::vector<std::vector<int>> overlaps(count);
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j)
            for (int v = 0; v < g.vertex_count; ++v)
                if (member[i][v] && member[j][v]) {
                    overlaps[i].push_back(j);
                    overlaps[j].push_back(i);
                    break;
                }

    std::vector<int> order;
    std::vector<char> visited(count, 0);
    for (int root = 0; root < count; ++root) {
        if (visited[root]) continue;
        std::queue<int> queue;
        visited[root] = 1;
        queue.push(root);
        while (!queue.empty()) {
            int id = queue.front();
            queue.pop();
            order.push_back(id);
            for (int next : overlaps[id]) {
                if (visited[next]) continue;
                visited[next] = 1;
                queue.push(next);
            }
        }
    }
    return order;
}

}  // namespace

ColoringResult propagate_coloring_seeded(const SimplexGraph& g,
                                         const std::vector<int>& seed_perm) {
    check_seed_perm(g, seed_perm);
    auto adjacency = region_adjacency(g);
    auto components = region_components(g);

    std::vector<std::vector<int>> regions_of(components.count);
    for (int r = 0; r < g.region_count(); ++r)
        regions_of[components.component[r]].push_back(r);

    std::vector<int> global(g.vertex_count, -1);
    for (int id : overlap_forest_order(g, components.count, regions_of)) {
        ComponentRun run = propagate_component(g, adjacency, regions_of[id]);
        if (run.conflicted) {
            ColorConflict conflict = run.conflict;
            conflict.forced_color_a = seed_perm[conflict.forced_color_a];
            conflict.forced_color_b = seed_perm[conflict.forced_color_b];
            return conflict;
        }

        // Recolor the component so vertices shared with earlier components
        // keep their colors. Within a component the coloring is rigid, so
        // the color permutation is the only freedom there is.
        std::vector<int> to_global(g.n + 1, -1);
        std::vector<char> target_used(g.n + 1, 0);
        for (int v = 0; v < g.vertex_count; ++v) {
            if (run.local_colors[v] == -1 || global[v] == -1) continue;
            int source = run.local_colors[v];
            int target = global[v];
            if (to_global[source] == -1) {
                if (target_used[target])
                    throw GameError(ErrorKind::StitchConflict,
                                    "components force distinct colors onto one slot at vertex " +
                                        std::to_string(v));
                to_global[source] = target;
                target_used[target] = 1;
            } else if (to_global[source] != target) {
                throw GameError(ErrorKind::StitchConflict,
                                "component recoloring cannot match vertex " + std::to_string(v));
            }
        }
        for (int source = 0; source <= g.n; ++source) {
            if (to_global[source] != -1) continue;
            for (int k = 0; k <= g.n; ++k) {
                int target = seed_perm[k];
                if (!target_used[target]) {
                    to_global[source] = target;
                    target_used[target] = 1;
                    break;
                }
            }
        }
        for (int v = 0; v < g.vertex_count; ++v)
            if (run.local_colors[v] != -1) global[v] = to_global[run.local_colors[v]];
    }
    return Coloring{std::move(global)};
}

ColoringResult propagate_coloring(const SimplexGraph& g) {
    std::vector<int> identity(g.n + 1);
    for (int k = 0; k <= g.n; ++k) identity[k] = k;
    return propagate_coloring_seeded(g, identity);
}

bool verify_coloring(const SimplexGraph& g, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.vertex_count)
        throw GameError(ErrorKind::DimensionMismatch,
                        "coloring has " + std::to_string(c.colors.size()) + " entries, graph has " +
                            std::to_string(g.vertex_count) + " vertices");
    for (int v : c.colors)
        if (v < 0 || v > g.n) return false;
    std::vector<char> used(g.n + 1);
    for (const auto& region : g.regions) {
        std::fill(used.begin(), used.end(), 0);
        for (int v : region) {
            if (used[c.colors[v]]) return false;
            used[c.colors[v]] = 1;
        }
    }
    return true;
}

}  // namespace pushgame
