#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "decomp/critical.hpp"
#include "decomp/oracles.hpp"
#include "support/fixtures.hpp"

using namespace decomp;
using fixtures::complete;
using fixtures::cycle;
using fixtures::star_critical;
using fixtures::theta;
using fixtures::two_k4;

TEST_CASE("criticality of the fixed examples") {
    DecompositionTree c4 = single_cutset_tree(cycle(4));
    CriticalReport r1 = is_critical(cycle(4), c4, /*cross_check=*/true);
    CHECK(r1.critical);
    CHECK(r1.degree2 == VertexSet{0, 1, 2, 3});
    CHECK_FALSE(r1.deletable_vertex.has_value());

    // Theta: each triangle part has one interior vertex, so deleting the
    // smallest of them keeps the graph biconnected.
    DecompositionTree th = single_cutset_tree(theta());
    CriticalReport r2 = is_critical(theta(), th, true);
    CHECK_FALSE(r2.critical);
    CHECK(r2.deletable_vertex == 1);
    CHECK(is_biconnected(erased(theta(), VertexSet{1})));

    DecompositionTree tk = single_cutset_tree(two_k4());
    CriticalReport r3 = is_critical(two_k4(), tk, true);
    CHECK_FALSE(r3.critical);
    CHECK(r3.deletable_vertex == 2);

    CHECK_THROWS_AS(is_critical(complete(3), single_cutset_tree(complete(3))),
                    DomainError);
}

TEST_CASE("terminal parts of critical graphs") {
    Graph chain = generate_critical_chain({MiddleKind::Triangle}, {4, 5});
    DecompositionTree tree = single_cutset_tree(chain);
    auto terminals = terminal_part_check(chain, tree);
    REQUIRE(terminals.size() == 2);
    for (const auto& [part, deg2] : terminals) {
        CHECK(part.kind == PartKind::Cycle);
        CHECK(part.cycle_length >= 4);
        CHECK(deg2.size() == part.cycle_length - 2);
        for (int v : deg2) CHECK(chain.degree(v) == 2);
    }

    // A 4-cycle has no single cutsets, hence no terminal parts.
    CHECK(terminal_part_check(cycle(4), single_cutset_tree(cycle(4))).empty());

    // Star-shaped tree: three terminals, six degree-2 vertices.
    Graph star = star_critical();
    DecompositionTree star_tree = single_cutset_tree(star);
    CriticalReport sr = is_critical(star, star_tree, true);
    CHECK(sr.critical);
    CHECK(sr.degree2.size() == 6);
    CHECK(terminal_part_check(star, star_tree).size() == 3);

    CHECK_THROWS_AS(terminal_part_check(theta(), single_cutset_tree(theta())),
                    DomainError);
}

TEST_CASE("exactly-four classification") {
    DecompositionTree c4 = single_cutset_tree(cycle(4));
    auto degenerate = classify_exactly_four(cycle(4), c4);
    REQUIRE(degenerate.has_value());
    CHECK(degenerate->degenerate_cycle);
    CHECK(degenerate->middles.empty());

    Graph two_cycles = generate_critical_chain({}, {4, 4});
    DecompositionTree tree = single_cutset_tree(two_cycles);
    auto chain = classify_exactly_four(two_cycles, tree);
    REQUIRE(chain.has_value());
    CHECK_FALSE(chain->degenerate_cycle);
    CHECK(chain->middles.empty());
    CHECK(chain->terminal_length_first == 4);
    CHECK(chain->terminal_length_last == 4);
    CHECK(chain->part_sequence.size() == 2);
    CHECK(chain->cutset_sequence.size() == 1);

    // Five degree-2 vertices: the precondition check fires.
    Graph five = generate_critical_chain({}, {4, 5});
    DecompositionTree ft = single_cutset_tree(five);
    CHECK(is_critical(five, ft, true).critical);
    CHECK(is_critical(five, ft).degree2.size() == 5);
    CHECK_THROWS_AS(classify_exactly_four(five, ft), DomainError);

    // Six degree-2 vertices on the star shape: also rejected.
    CHECK_THROWS_AS(classify_exactly_four(star_critical(),
                                          single_cutset_tree(star_critical())),
                    DomainError);

    // Non-critical input is rejected outright.
    CHECK_THROWS_AS(classify_exactly_four(theta(), single_cutset_tree(theta())),
                    DomainError);
}

TEST_CASE("generator round trips") {
    std::vector<std::vector<MiddleKind>> specs = {
        {},
        {MiddleKind::Triangle},
        {MiddleKind::CycleOfFour},
        {MiddleKind::BlockOnFour},
        {MiddleKind::Triangle, MiddleKind::CycleOfFour},
        {MiddleKind::BlockOnFour, MiddleKind::Triangle},
        {MiddleKind::CycleOfFour, MiddleKind::BlockOnFour,
         MiddleKind::Triangle},
    };
    for (const auto& spec : specs) {
        Graph g = generate_critical_chain(spec, {4, 4});
        CHECK(oracle_critical(g));
        DecompositionTree tree = single_cutset_tree(g);
        CriticalReport report = is_critical(g, tree, true);
        CHECK(report.critical);
        CHECK(report.degree2.size() == 4);
        std::string why;
        auto chain = classify_exactly_four(g, tree, &why);
        REQUIRE_MESSAGE(chain.has_value(), why);
        CHECK(chain->middles == spec);
        CHECK(chain->terminal_length_first == 4);
        CHECK(chain->terminal_length_last == 4);
    }
    CHECK_THROWS_AS(generate_critical_chain({}, {3, 4}), DomainError);
}

TEST_CASE("structural verdict equals the deletion oracle on random graphs") {
    int critical_seen = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        Graph g = random_biconnected(4 + static_cast<int>(seed % 7),
                                     0.15 * static_cast<double>(seed % 3), seed);
        DecompositionTree tree = single_cutset_tree(g);
        CriticalReport report = is_critical(g, tree);
        CHECK(report.critical == oracle_critical(g));
        if (report.critical) {
            ++critical_seen;
            CHECK(report.degree2.size() >= 4);
        } else {
            REQUIRE(report.deletable_vertex.has_value());
            CHECK(is_biconnected(erased(g, VertexSet{*report.deletable_vertex})));
        }
    }
    CHECK(critical_seen > 0); // plain cycles come up at density 0
}
