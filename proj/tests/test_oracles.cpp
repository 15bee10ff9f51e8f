#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "decomp/oracles.hpp"
#include "support/fixtures.hpp"

using namespace decomp;
using fixtures::complete;
using fixtures::cycle;
using fixtures::theta;
using fixtures::two_k4;

TEST_CASE("definition-level parts") {
    CutsetFamily st = single_cutsets(theta());
    std::vector<Part> ps = oracle_parts(theta(), st);
    REQUIRE(ps.size() == 3);
    CHECK(ps[0].members == VertexSet{0, 1, 4});
    CHECK(ps[1].members == VertexSet{0, 2, 4});
    CHECK(ps[2].members == VertexSet{0, 3, 4});
    CHECK(ps[0].interior == VertexSet{1});
    CHECK(ps[0].boundary == VertexSet{0, 4});

    std::vector<Part> whole = oracle_parts(theta(), CutsetFamily{});
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].members == theta().vertices());

    std::vector<Part> c4 = oracle_parts(cycle(4), single_cutsets(cycle(4)));
    REQUIRE(c4.size() == 1);
    CHECK(c4[0].members == cycle(4).vertices());
}

TEST_CASE("chromatic number") {
    CHECK(oracle_chromatic(complete(4)) == 4);
    CHECK(oracle_chromatic(cycle(5)) == 3);
    CHECK(oracle_chromatic(theta()) == 2); // bipartition {0,4} vs {1,2,3}
    CHECK(oracle_chromatic(Graph{}) == 0);
    CHECK(oracle_chromatic(fixtures::petersen()) == 3);
}

TEST_CASE("optimal colorings are proper and tight") {
    for (const Graph& g : {complete(4), cycle(5), theta(), two_k4()}) {
        auto coloring = oracle_optimal_coloring(g);
        int chi = oracle_chromatic(g);
        std::set<int> used;
        for (auto [v, c] : coloring) used.insert(c);
        CHECK(static_cast<int>(used.size()) == chi);
        for (auto [u, v] : g.edges()) CHECK(coloring.at(u) != coloring.at(v));
    }
}

TEST_CASE("choosability") {
    CHECK(oracle_choosable(cycle(4), 2));        // even cycles
    CHECK_FALSE(oracle_choosable(cycle(5), 2));  // a failing assignment exists
    CHECK(oracle_choosable(complete(4), 4));     // degeneracy shortcut
    CHECK(oracle_choosable(cycle(5), 3));
    CHECK_FALSE(oracle_choosable(complete(4), 3));
    CHECK_THROWS_AS(oracle_choosable(fixtures::petersen(), 2), BudgetError);
}

TEST_CASE("general-k cutsets") {
    CHECK(oracle_cutsets(complete(5), 3).empty());
    CHECK(oracle_cutsets(cycle(6), 2).size() == 9); // all non-adjacent pairs

    CutsetFamily k3 = oracle_cutsets(two_k4(), 3);
    std::vector<Cutset> expected{{VertexSet{0, 1, 2}},
                                 {VertexSet{0, 1, 3}},
                                 {VertexSet{0, 1, 4}},
                                 {VertexSet{0, 1, 5}}};
    CHECK(k3.items() == expected);
    // Consistent with k=2: every 3-cutset here extends the unique 2-cutset.
    for (const Cutset& c : k3.items())
        CHECK(VertexSet{0, 1}.is_subset_of(c.members));
}

TEST_CASE("criticality by deletion") {
    CHECK(oracle_critical(cycle(4)));
    CHECK_FALSE(oracle_critical(complete(4))); // K4 - x is a triangle
    CHECK_FALSE(oracle_critical(theta()));
    CHECK_THROWS_AS(oracle_critical(fixtures::path(5)), DomainError);
    CHECK_THROWS_AS(oracle_critical(complete(3)), DomainError);
}

TEST_CASE("random biconnected generator") {
    Graph tri = random_biconnected(3, 0.0, 7);
    CHECK(tri == complete(3));

    // Determinism and the golden 5-vertex instance, generated once and
    // frozen here.
    Graph g5 = random_biconnected(5, 0.2, 42);
    CHECK(g5 == random_biconnected(5, 0.2, 42));
    CHECK(g5.vertices() == VertexSet({0, 1, 2, 3, 4}));
    CHECK(g5.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4},
                                          {1, 2}, {1, 3}, {2, 4}});

    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        Graph g = random_biconnected(3 + static_cast<int>(seed % 9),
                                     0.1 * static_cast<double>(seed % 4), seed);
        CHECK(is_k_connected(g, 2));
    }
}

TEST_CASE("budgets fail loudly") {
    Graph big = random_biconnected(13, 0.1, 1);
    CHECK_THROWS_AS(oracle_chromatic(big), BudgetError);
    CHECK_THROWS_AS(oracle_parts(big, CutsetFamily{}), BudgetError);
    CHECK_THROWS_AS(oracle_choosable(complete(7), 2), BudgetError);
    OracleBudget tiny;
    tiny.max_subsets = 1;
    CHECK_THROWS_AS(oracle_cutsets(complete(6), 3, tiny), BudgetError);
}
