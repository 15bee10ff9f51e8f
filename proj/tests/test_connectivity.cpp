#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "decomp/connectivity.hpp"
#include "decomp/oracles.hpp"
#include "support/fixtures.hpp"

using namespace decomp;
using fixtures::complete;
using fixtures::cycle;
using fixtures::theta;
using fixtures::two_k4;

namespace {

std::vector<VertexSet> members_of(const CutsetFamily& f) {
    std::vector<VertexSet> out;
    for (const Cutset& c : f.items()) out.push_back(c.members);
    return out;
}

} // namespace

TEST_CASE("2-cutset enumeration") {
    CHECK(members_of(enumerate_cutsets(cycle(4), 2)) ==
          std::vector<VertexSet>{{0, 2}, {1, 3}});
    CHECK(enumerate_cutsets(complete(4), 2).empty());

    // Theta: brute force over all 10 pairs leaves only {0,4}, confirmed
    // against the oracle's independent enumeration.
    CutsetFamily t = enumerate_cutsets(theta(), 2);
    CHECK(members_of(t) == std::vector<VertexSet>{{0, 4}});
    CHECK(members_of(oracle_cutsets(theta(), 2)) == members_of(t));

    CHECK_THROWS_AS(enumerate_cutsets(erased(cycle(4), VertexSet{0, 2}), 2),
                    DomainError);
    CHECK_THROWS_AS(enumerate_cutsets(complete(5), 3), DomainError);
    CHECK_THROWS_AS(enumerate_cutsets(cycle(3), 3), DomainError);
}

TEST_CASE("1-cutsets are empty exactly on biconnected graphs") {
    CHECK(enumerate_cutsets(theta(), 1).empty());
    CHECK(members_of(enumerate_cutsets(fixtures::path(3), 1)) ==
          std::vector<VertexSet>{{1}});
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = random_biconnected(4 + static_cast<int>(seed % 6), 0.3, seed);
        CHECK(enumerate_cutsets(g, 1).empty());
    }
}

TEST_CASE("separates") {
    CHECK(separates(cycle(4), VertexSet{0, 2}, VertexSet{1}, VertexSet{3}));
    CHECK_FALSE(
        separates(complete(4), VertexSet{0, 1}, VertexSet{2}, VertexSet{3}));
    // Theta minus {0,4} has components {1}, {2}, {3}.
    CHECK(separates(theta(), VertexSet{0, 4}, VertexSet{1}, VertexSet{2}));
    CHECK_THROWS_AS(
        separates(cycle(4), VertexSet{0, 2}, VertexSet{0}, VertexSet{1}),
        DomainError);
}

TEST_CASE("splits") {
    Graph c5 = cycle(5);
    CHECK(splits(c5, VertexSet{0, 2}, VertexSet{1, 3})); // components {1},{3,4}
    CHECK_FALSE(splits(c5, VertexSet{0, 2}, VertexSet{0, 3}));
    CHECK_FALSE(splits(theta(), VertexSet{}, theta().vertices()));
    CHECK_THROWS_AS(splits(c5, VertexSet{0, 2}, VertexSet{0, 2}), DomainError);
}

TEST_CASE("k-connectivity by exhaustion") {
    CHECK(is_k_connected(cycle(4), 2));
    CHECK_FALSE(is_k_connected(cycle(4), 3));
    CHECK(is_k_connected(complete(4), 3));
    CHECK_FALSE(is_k_connected(theta(), 3)); // cutset {0,4}
    CHECK(is_biconnected(theta()));
    CHECK_FALSE(is_biconnected(fixtures::path(3)));
    CHECK_FALSE(is_k_connected(complete(3), 3)); // needs v > k
}

TEST_CASE("independence of cutset pairs") {
    Graph c4 = cycle(4);
    CHECK_FALSE(independent(c4, {VertexSet{0, 2}}, {VertexSet{1, 3}}));
    Graph c5 = cycle(5);
    CHECK(independent(c5, {VertexSet{0, 2}}, {VertexSet{0, 3}}));
    CHECK_FALSE(independent(c5, {VertexSet{0, 2}}, {VertexSet{1, 3}}));
    CHECK_THROWS_AS(independent(c5, {VertexSet{0, 1}}, {VertexSet{0, 2}}),
                    DomainError); // {0,1} is no cutset
}

TEST_CASE("single cutsets") {
    CHECK(members_of(single_cutsets(theta())) ==
          std::vector<VertexSet>{{0, 4}});
    CHECK(single_cutsets(theta()).verified_independent());
    CHECK(single_cutsets(cycle(5)).empty());
    CHECK(members_of(single_cutsets(two_k4())) ==
          std::vector<VertexSet>{{0, 1}});
    CHECK_THROWS_AS(single_cutsets(fixtures::path(4)), DomainError);
}

TEST_CASE("family verification") {
    Graph c5 = cycle(5);
    CutsetFamily good(2, {{VertexSet{0, 2}}, {VertexSet{0, 3}}});
    CHECK_FALSE(good.verified_independent());
    CHECK(verify_independent(c5, good).verified_independent());

    CutsetFamily bad(2, {{VertexSet{0, 2}}, {VertexSet{1, 3}}});
    CHECK_THROWS_AS(verify_independent(c5, bad), DomainError);

    CHECK_THROWS_AS(CutsetFamily(2, {{VertexSet{0}}}), DomainError);
}

TEST_CASE("splitting dichotomy holds on random corpora") {
    // Either independent or mutually splitting; a one-sided split inside
    // pair_relation raises logic_error, so scanning all pairs is the check.
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = random_biconnected(4 + static_cast<int>(seed % 7), 0.25, seed);
        CutsetFamily all = enumerate_cutsets(g, 2);
        const auto& items = all.items();
        for (size_t i = 0; i < items.size(); ++i)
            for (size_t j = i + 1; j < items.size(); ++j)
                CHECK_NOTHROW(pair_relation(g, items[i], items[j]));
    }
}

TEST_CASE("single cutset degree laws over random corpora") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = random_biconnected(4 + static_cast<int>(seed % 7), 0.25, seed);
        CutsetFamily singles = single_cutsets(g);
        for (const Cutset& s : singles.items()) {
            int part_count =
                static_cast<int>(components(erased(g, s.members)).size());
            for (int x : s.members) {
                CHECK(g.degree(x) >= 3);
                CHECK(g.degree(x) >= part_count);
                if (g.degree(x) == part_count) {
                    int a = s.members.ids()[0], b = s.members.ids()[1];
                    CHECK_FALSE(g.has_edge(a, b));
                }
            }
        }
    }
}
