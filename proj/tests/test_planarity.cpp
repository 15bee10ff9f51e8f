#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "decomp/planarity.hpp"
#include "decomp/oracles.hpp"
#include "support/fixtures.hpp"

using namespace decomp;
using fixtures::complete;
using fixtures::complete_bipartite;
using fixtures::cycle;
using fixtures::petersen;
using fixtures::subdivided_k5;
using fixtures::theta;
using fixtures::three_k4_chain;
using fixtures::two_k4;

TEST_CASE("kuratowski models") {
    CHECK(k5() == complete(5));
    CHECK(k33() == complete_bipartite(3, 3));
}

TEST_CASE("identity subdivision of K5 in itself") {
    auto w = contains_subdivision(complete(5), k5());
    REQUIRE(w.has_value());
    CHECK(w->detours.empty());
    for (auto [mv, hv] : w->main_map) CHECK(mv == hv);
    CHECK(verify_subdivision(complete(5), *w));
}

TEST_CASE("petersen contains a K3,3 subdivision but no K5 subdivision") {
    auto w = contains_subdivision(petersen(), k33());
    REQUIRE(w.has_value());
    CHECK(verify_subdivision(petersen(), *w));
    // Max degree 3 < 4 rules K5 out before any routing.
    CHECK_FALSE(contains_subdivision(petersen(), k5()).has_value());
}

TEST_CASE("no K5 subdivision in small or sparse hosts") {
    CHECK_FALSE(contains_subdivision(cycle(6), k5()).has_value());
    CHECK_FALSE(contains_subdivision(two_k4(), k5()).has_value());
}

TEST_CASE("base planarity") {
    CHECK(base_planar(complete(4)));
    CHECK_FALSE(base_planar(complete(5)));
    CHECK_FALSE(base_planar(complete_bipartite(3, 3)));
    CHECK(base_planar(cycle(7)));
    CHECK_FALSE(base_planar(complete(6))); // edge bound already fails
    CHECK_THROWS_AS(base_planar(fixtures::path(4)), DomainError);
}

TEST_CASE("part-wise criterion") {
    CHECK(is_planar(two_k4()));
    CHECK(is_planar(theta()));
    CHECK_FALSE(is_planar(subdivided_k5()));
    CHECK_FALSE(is_planar(petersen()));
    CHECK(is_planar(three_k4_chain()));
    CHECK_THROWS_AS(is_planar(fixtures::path(4)), DomainError);
    CHECK_THROWS_AS(is_planar(petersen(), 5), BudgetError); // block cap
}

TEST_CASE("blockwise composition for general connected graphs") {
    // Two K4 blocks sharing the cutpoint 3.
    Graph blocks = Graph::from_edges(std::vector<Edge>{
        {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
        {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
    CHECK(is_planar_connected(blocks));
    CHECK(is_planar_connected(fixtures::path(5)));

    // Hang a pendant edge off the Petersen graph: still not planar.
    std::vector<Edge> es = petersen().edges();
    es.push_back({0, 10});
    CHECK_FALSE(is_planar_connected(Graph::from_edges(es)));
}

TEST_CASE("realizing part subdivisions") {
    // Two-K4: the shared pair is a real edge, so the witness is the part
    // itself with an empty detour map.
    Graph tk = two_k4();
    DecompositionTree tk_tree = single_cutset_tree(tk);
    SubdivisionWitness w1 =
        realize_part_subdivision(tk, tk_tree, tk_tree.parts()[0]);
    CHECK(w1.detours.empty());
    CHECK(verify_subdivision(tk, w1));

    // Theta: part {0,1,4} needs its augmented edge {0,4} rerouted, and the
    // smallest side gives the path 0-2-4.
    Graph th = theta();
    DecompositionTree th_tree = single_cutset_tree(th);
    Part target;
    target.members = VertexSet{0, 1, 4};
    SubdivisionWitness w2 = realize_part_subdivision(th, th_tree, target);
    REQUIRE(w2.detours.size() == 1);
    CHECK(w2.detours.at({0, 4}) == std::vector<int>{0, 2, 4});
    CHECK(verify_subdivision(th, w2));

    // Three-K4 chain: the middle part needs two detours, one through each
    // outer block, and they must be disjoint for the witness to verify.
    Graph ch = three_k4_chain();
    DecompositionTree ch_tree = single_cutset_tree(ch);
    Part middle;
    middle.members = VertexSet{2, 3, 4, 5};
    SubdivisionWitness w3 = realize_part_subdivision(ch, ch_tree, middle);
    REQUIRE(w3.detours.size() == 2);
    CHECK(verify_subdivision(ch, w3));

    Part ghost;
    ghost.members = VertexSet{0, 7};
    CHECK_THROWS_AS(realize_part_subdivision(th, th_tree, ghost), DomainError);
}

TEST_CASE("witnesses extracted from whole graphs") {
    auto pw = find_kuratowski(petersen());
    REQUIRE(pw.has_value());
    CHECK(pw->model == k33());
    CHECK(verify_subdivision(petersen(), *pw));

    // The non-planar block part of subdivided K5 sits behind a cycle part;
    // composition must land the witness in the host graph.
    auto sw = find_kuratowski(subdivided_k5());
    REQUIRE(sw.has_value());
    CHECK(sw->model == k5());
    CHECK(verify_subdivision(subdivided_k5(), *sw));

    CHECK_FALSE(find_kuratowski(two_k4()).has_value());
}

TEST_CASE("criterion agrees with the whole-graph baseline on a corpus") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Graph g = random_biconnected(4 + static_cast<int>(seed % 6), 0.3, seed);
        CHECK(is_planar(g) == base_planar(g));
    }
}

TEST_CASE("non-planar hosts always yield a verified witness") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = random_biconnected(6 + static_cast<int>(seed % 3), 0.6, seed);
        if (is_planar(g)) continue;
        auto w = find_kuratowski(g);
        REQUIRE(w.has_value());
        CHECK(verify_subdivision(g, *w));
    }
}
