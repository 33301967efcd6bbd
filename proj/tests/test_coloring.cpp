#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "pushgame/coloring.hpp"
#include "pushgame/core.hpp"
#include "pushgame/error.hpp"
#include "pushgame/generators.hpp"

using namespace pushgame;
using namespace testkit;

namespace {

SimplexGraph strip4() { return validate_graph({2, 4, {{0, 1, 2}, {1, 2, 3}}}); }

// Strip glued to a triangle through two vertices the strip forces equal:
// colorable per component, not colorable as a whole.
SimplexGraph rigid_clash() {
    return validate_graph({2, 5, {{0, 1, 2}, {1, 2, 3}, {0, 3, 4}}});
}

}  // namespace

TEST_CASE("strip propagates to (0,1,2,0)") {
    auto result = propagate_coloring(strip4());
    REQUIRE(colored(result));
    CHECK(std::get<Coloring>(result).colors == std::vector<int>{0, 1, 2, 0});
}

TEST_CASE("K4 yields the documented conflict at vertex 3") {
    auto result = propagate_coloring(complete_plus(2));
    REQUIRE(!colored(result));
    const auto& conflict = std::get<ColorConflict>(result);
    CHECK(conflict.vertex == 3);
    CHECK(conflict.forced_color_a == 2);
    CHECK(conflict.forced_color_b == 1);
    CHECK(conflict.witness_a == std::vector<int>{0, 1});
    CHECK(conflict.witness_b == std::vector<int>{0, 2});
}

TEST_CASE("the four-row triangular board is 3-colorable") {
    auto result = propagate_coloring(triangular_board(4));
    REQUIRE(colored(result));
    CHECK(verify_coloring(triangular_board(4), std::get<Coloring>(result)));
}

TEST_CASE("verify_coloring worked examples") {
    SimplexGraph strip = strip4();
    CHECK(verify_coloring(strip, Coloring{{0, 1, 2, 0}}));
    CHECK(!verify_coloring(strip, Coloring{{0, 1, 2, 1}}));

    SimplexGraph triangle = validate_graph({2, 3, {{0, 1, 2}}});
    CHECK(verify_coloring(triangle, Coloring{{2, 0, 1}}));
    CHECK(!verify_coloring(triangle, Coloring{{2, 0, 2}}));
    CHECK_THROWS_AS(verify_coloring(triangle, Coloring{{0, 1}}), GameError);
}

TEST_CASE("conflict certificates replay on chained-complete boards") {
    for (int n : {1, 2, 3}) {
        SimplexGraph g = complete_plus(n);
        auto result = propagate_coloring(g);
        REQUIRE(!colored(result));
        const auto& conflict = std::get<ColorConflict>(result);
        CHECK(conflict.forced_color_a != conflict.forced_color_b);
        CHECK(valid_region_path(g, conflict.witness_a));
        CHECK(valid_region_path(g, conflict.witness_b));
        CHECK(replay_witness(g, conflict.witness_a, conflict.vertex) == conflict.forced_color_a);
        CHECK(replay_witness(g, conflict.witness_b, conflict.vertex) == conflict.forced_color_b);
    }
}

TEST_CASE("reseeding permutes the whole coloring on connected boards") {
    std::vector<int> perm{2, 0, 1};
    for (const auto& g : {strip4(), triangular_board(3), simplex_strip(2, 5)}) {
        auto base = propagate_coloring(g);
        auto seeded = propagate_coloring_seeded(g, perm);
        REQUIRE(colored(base));
        REQUIRE(colored(seeded));
        const auto& c0 = std::get<Coloring>(base).colors;
        const auto& c1 = std::get<Coloring>(seeded).colors;
        for (int v = 0; v < g.vertex_count; ++v) CHECK(c1[v] == perm[c0[v]]);
    }
}

TEST_CASE("propagation matches exhaustive search on small boards") {
    auto boards = {validate_graph({2, 3, {{0, 1, 2}}}),
                   strip4(),
                   simplex_strip(2, 4),
                   simplex_strip(1, 5),
                   complete_plus(1),
                   complete_plus(2),
                   shared_vertex_chain(3),
                   triangular_board(3)};
    for (const auto& g : boards) {
        REQUIRE(g.vertex_count <= 8);
        bool exists = exhaustive_coloring(g).has_value();
        auto result = propagate_coloring(g);
        CHECK(colored(result) == exists);
        if (colored(result)) CHECK(verify_coloring(g, std::get<Coloring>(result)));
    }
}

TEST_CASE("chain components are stitched so shared vertices agree") {
    SimplexGraph g = shared_vertex_chain(3);
    auto result = propagate_coloring(g);
    REQUIRE(colored(result));
    CHECK(std::get<Coloring>(result).colors == std::vector<int>{0, 1, 2, 0, 1, 0, 2});
    CHECK(verify_coloring(g, std::get<Coloring>(result)));
}

TEST_CASE("stitching walks the overlap forest, not component index order") {
    // The middle triangle {6,7,8} touches both double-triangle components.
    // Matching it against both of their independent colorings at once can
    // clash; attaching components along the overlap tree cannot.
    SimplexGraph g = validate_graph(
        {2, 9, {{0, 1, 5}, {0, 1, 7}, {2, 3, 4}, {2, 3, 6}, {6, 7, 8}}});
    REQUIRE(region_components(g).count == 3);
    auto result = propagate_coloring(g);
    REQUIRE(colored(result));
    CHECK(verify_coloring(g, std::get<Coloring>(result)));
}

TEST_CASE("rigid cross-component clash is refused, matching exhaustion") {
    SimplexGraph g = rigid_clash();
    CHECK(!exhaustive_coloring(g).has_value());
    try {
        propagate_coloring(g);
        FAIL("expected StitchConflict");
    } catch (const GameError& e) {
        CHECK(e.kind() == ErrorKind::StitchConflict);
    }
}

TEST_CASE("seed permutation validation") {
    SimplexGraph g = strip4();
    CHECK_THROWS_AS(propagate_coloring_seeded(g, {0, 1}), GameError);
    CHECK_THROWS_AS(propagate_coloring_seeded(g, {0, 1, 1}), GameError);
}
