#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "helpers.hpp"
#include "pushgame/analysis.hpp"
#include "pushgame/core.hpp"
#include "pushgame/error.hpp"
#include "pushgame/generators.hpp"
#include "pushgame/invariant.hpp"
#include "pushgame/oracle.hpp"

using namespace pushgame;
using namespace testkit;

namespace {

SimplexGraph strip4() { return validate_graph({2, 4, {{0, 1, 2}, {1, 2, 3}}}); }

}  // namespace

TEST_CASE("class report on the strip, cross-checked by brute orbit") {
    SimplexGraph g = strip4();
    ClassReport report = class_report(g, 2);
    CHECK(report.predicted_class_count == Nat(4));
    CHECK(report.predicted_class_size == Nat(4));
    CHECK(report.predicted_solution_count == Nat(1));
    CHECK(report.measured_class_count == Nat(4));
    CHECK(report.measured_orbit_size == Nat(4));
    CHECK(report.measured_solution_count == Nat(1));
    CHECK(report.hypotheses_hold);

    // independent check: breadth-first orbit of the zero labeling has size 4
    OrbitReport orbit = enumerate_orbit(g, Labeling{2, {0, 0, 0, 0}});
    CHECK(orbit.orbit_size == 4);
}

TEST_CASE("class report on the four-row board matches the closed form") {
    ClassReport report = class_report(triangular_board(4), 2);
    CHECK(report.predicted_solution_count == Nat(2));
    CHECK(report.measured_solution_count == Nat(2));
    CHECK(report.hypotheses_hold);
}

TEST_CASE("class report on K4: one class, hypotheses fail") {
    ClassReport report = class_report(complete_plus(2), 2);
    CHECK(report.measured_class_count == Nat(1));
    CHECK(report.predicted_class_count == Nat(4));
    CHECK(!report.hypotheses_hold);
}

TEST_CASE("partition laws hold on every board") {
    for (const auto& g : {triangular_board(3), simplex_strip(2, 4), simplex_strip(1, 5),
                          complete_plus(1), complete_plus(2), complete_plus(3),
                          shared_vertex_chain(3)}) {
        for (int m : {2, 3, 4, 6}) {
            ClassReport report = class_report(g, m);
            CHECK(report.measured_class_count * report.measured_orbit_size ==
                  Nat::power(m, g.vertex_count));
            CHECK(report.measured_solution_count * report.measured_orbit_size ==
                  Nat::power(m, g.region_count()));
        }
    }
}

TEST_CASE("vertex_shift worked examples") {
    SimplexGraph g = validate_graph({2, 3, {{0, 1, 2}}});
    auto c = std::get<Coloring>(propagate_coloring(g));
    Labeling zero{2, {0, 0, 0}};

    CHECK(vertex_shift(zero, 0, 0).values == zero.values);
    Labeling shifted = vertex_shift(zero, 0, 1);
    CHECK(shifted.values == std::vector<int>{1, 0, 0});
    CHECK(class_key(g, c, zero) != class_key(g, c, shifted));

    Labeling wrapped = zero;
    for (int k = 0; k < 2; ++k) wrapped = vertex_shift(wrapped, 1, 1);
    CHECK(wrapped.values == zero.values);
    CHECK_THROWS_AS(vertex_shift(zero, 9, 1), GameError);
}

TEST_CASE("vertex_shift maps classes to classes bijectively") {
    SimplexGraph g = strip4();
    auto c = std::get<Coloring>(propagate_coloring(g));
    int m = 2;

    std::map<std::string, std::vector<Labeling>> classes;
    for (const auto& l : all_labelings(g, m)) classes[class_key(g, c, l)].push_back(l);

    for (const auto& [key, members] : classes) {
        for (int vertex = 0; vertex < g.vertex_count; ++vertex) {
            for (int amount = 1; amount < m; ++amount) {
                std::set<std::string> image_keys;
                std::set<std::vector<int>> images;
                for (const auto& l : members) {
                    Labeling shifted = vertex_shift(l, vertex, amount);
                    image_keys.insert(class_key(g, c, shifted));
                    images.insert(shifted.values);
                }
                CHECK(image_keys.size() == 1);          // whole class lands in one class
                CHECK(images.size() == members.size()); // and the map is injective
            }
        }
    }
}

TEST_CASE("class sizes are all equal on small boards") {
    for (const auto& g : {validate_graph({2, 3, {{0, 1, 2}}}), strip4(), simplex_strip(2, 3),
                          complete_plus(1), complete_plus(2), triangular_board(3)}) {
        for (int m : {2, 3}) {
            OrbitReport partition = partition_all_labelings(g, m);
            ClassReport report = class_report(g, m);
            CHECK(Nat(partition.class_partition_sizes.size()) == report.measured_class_count);
            for (auto size : partition.class_partition_sizes)
                CHECK(Nat(size) == report.measured_orbit_size);
        }
    }
}

TEST_CASE("probe worked examples") {
    ColorabilityVerdict board = probe_colorability(triangular_board(4), 2);
    CHECK(board.verdict == Verdict::Colorable);
    CHECK(board.class_count == Nat(4));
    CHECK(board.bound_moves == Nat(129));
    CHECK(colored(board.certificate));

    ColorabilityVerdict k4 = probe_colorability(complete_plus(2), 2);
    CHECK(k4.verdict == Verdict::NotColorable);
    CHECK(k4.class_count == Nat(1));
    CHECK(!colored(k4.certificate));
    const auto& conflict = std::get<ColorConflict>(k4.certificate);
    CHECK(replay_witness(complete_plus(2), conflict.witness_a, conflict.vertex) ==
          conflict.forced_color_a);
    CHECK(replay_witness(complete_plus(2), conflict.witness_b, conflict.vertex) ==
          conflict.forced_color_b);

    ColorabilityVerdict triangle = probe_colorability(validate_graph({2, 3, {{0, 1, 2}}}), 3);
    CHECK(triangle.verdict == Verdict::Colorable);
    CHECK(triangle.class_count == Nat(9));

    CHECK_THROWS_AS(probe_colorability(shared_vertex_chain(2), 2), GameError);
}

TEST_CASE("probe verdict equals the propagation outcome across the suite") {
    // 1-simplex complete boards probed with an even modulus are the known
    // blind spot of the class-count criterion (K3 below, m = 2), so the
    // n = 1 boards here use odd moduli.
    struct Case {
        SimplexGraph g;
        std::vector<int> moduli;
    };
    std::vector<Case> cases;
    for (const auto& g : {triangular_board(2), triangular_board(3), triangular_board(4),
                          simplex_strip(2, 2), simplex_strip(2, 5), simplex_strip(3, 3),
                          complete_plus(2), complete_plus(3)})
        cases.push_back({g, {2, 3}});
    cases.push_back({simplex_strip(1, 5), {2, 3}});
    cases.push_back({complete_plus(1), {3, 5}});

    for (const auto& [g, moduli] : cases) {
        for (int m : moduli) {
            ColorabilityVerdict verdict = probe_colorability(g, m);
            CHECK((verdict.verdict == Verdict::Colorable) == colored(verdict.certificate));
            if (verdict.verdict == Verdict::NotColorable) {
                Nat limit = Nat::power(m, g.n - 1);
                CHECK(verdict.class_count <= limit);
                // the class count divides m^(n-1): both are m-powers here
                unsigned long long count = 1;
                Nat probe(1);
                while (probe < verdict.class_count) {
                    probe.mul_small(m);
                    count *= m;
                }
                CHECK(probe == verdict.class_count);
            }
        }
    }
}

TEST_CASE("the K3 even-modulus anomaly is real and documented") {
    // Two classes survive on K3 at m = 2 because the three edge pushes are
    // dependent over Z_2, so the count criterion reports Colorable while
    // propagation correctly conflicts. Odd moduli are immune.
    SimplexGraph k3 = complete_plus(1);
    ColorabilityVerdict even = probe_colorability(k3, 2);
    CHECK(even.class_count == Nat(2));
    CHECK(even.verdict == Verdict::Colorable);
    CHECK(!colored(even.certificate));

    ColorabilityVerdict odd = probe_colorability(k3, 3);
    CHECK(odd.verdict == Verdict::NotColorable);
    CHECK(odd.class_count == Nat(1));
}

TEST_CASE("decompose worked examples") {
    Decomposition pair = decompose(validate_graph({2, 5, {{0, 1, 2}, {2, 3, 4}}}));
    CHECK(pair.components.count == 2);
    CHECK(pair.association_edges == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(pair.acyclic);

    Decomposition one = decompose(triangular_board(3));
    CHECK(one.components.count == 1);
    CHECK(one.association_edges.empty());
    CHECK(one.acyclic);

    Decomposition ring = decompose(validate_graph({2, 6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}}}));
    CHECK(ring.components.count == 3);
    CHECK(ring.association_edges.size() == 3);
    CHECK(!ring.acyclic);
}

TEST_CASE("decomposed probe stitches chains and refuses cycles") {
    SimplexGraph chain = shared_vertex_chain(3);
    ColorabilityVerdict verdict = probe_colorability_decomposed(chain, 2);
    CHECK(verdict.verdict == Verdict::Colorable);
    REQUIRE(colored(verdict.certificate));
    CHECK(verify_coloring(chain, std::get<Coloring>(verdict.certificate)));
    // whole-board class count: shared vertices couple the triangles, so
    // the rank is 3 and the count is 2^(7-3)
    CHECK(verdict.class_count == Nat(16));

    SimplexGraph ring = validate_graph({2, 6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}}});
    try {
        probe_colorability_decomposed(ring, 2);
        FAIL("expected CyclicAssociation");
    } catch (const GameError& e) {
        CHECK(e.kind() == ErrorKind::CyclicAssociation);
    }
}

TEST_CASE("decomposed probe flags a K4 component") {
    // K4 sharing one vertex with a triangle: acyclic association, one bad part
    SimplexGraph g = validate_graph(
        {2, 6, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {3, 4, 5}}});
    Decomposition decomposition = decompose(g);
    REQUIRE(decomposition.components.count == 2);
    REQUIRE(decomposition.acyclic);
    ColorabilityVerdict verdict = probe_colorability_decomposed(g, 2);
    CHECK(verdict.verdict == Verdict::NotColorable);
    CHECK(!colored(verdict.certificate));
}

TEST_CASE("decomposed probe on a single component matches the plain probe") {
    SimplexGraph g = triangular_board(3);
    ColorabilityVerdict plain = probe_colorability(g, 2);
    ColorabilityVerdict via = probe_colorability_decomposed(g, 2);
    CHECK(plain.verdict == via.verdict);
    CHECK(plain.class_count == via.class_count);
    CHECK(plain.bound_moves == via.bound_moves);
}

TEST_CASE("move bounds") {
    CHECK(moves_bound(9, 2, 2) == Nat(129));
    CHECK(moves_bound(3, 2, 5) == Nat(6));
    CHECK(planar_moves_bound(10) == Nat(8193));
    CHECK(planar_moves_bound(4) == Nat(3));
    CHECK_THROWS_AS(moves_bound(2, 2, 2), GameError);
    CHECK_THROWS_AS(moves_bound(3, 0, 2), GameError);
    CHECK_THROWS_AS(moves_bound(3, 2, 1), GameError);
    CHECK_THROWS_AS(planar_moves_bound(3), GameError);
}

TEST_CASE("bounds print in full decimal") {
    CHECK(moves_bound(107, 2, 2).str() ==
          "40564819207303340847894502572033");  // 2^105 + 1
}
