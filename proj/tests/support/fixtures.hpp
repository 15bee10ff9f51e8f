#ifndef DECOMP_TESTS_FIXTURES_HPP
#define DECOMP_TESTS_FIXTURES_HPP

#include <vector>

#include "decomp/graph.hpp"

namespace fixtures {

using decomp::Edge;
using decomp::Graph;

inline Graph cycle(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back(decomp::make_edge(i, (i + 1) % n));
    return Graph::from_edges(es);
}

inline Graph path(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edges(es);
}

inline Graph complete(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph::from_edges(es);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> es;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) es.emplace_back(u, v);
    return Graph::from_edges(es);
}

// Two vertices 0 and 4 joined by three internally disjoint length-2
// paths through 1, 2 and 3. The single cutset is {0,4}.
inline Graph theta() {
    return Graph::from_edges(std::vector<Edge>{
        {0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

// Two K4s sharing the edge {0,1}.
inline Graph two_k4() {
    std::vector<Edge> es;
    int a[4] = {0, 1, 2, 3}, b[4] = {0, 1, 4, 5};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            es.push_back(decomp::make_edge(a[i], a[j]));
            if (!(i == 0 && j == 1)) es.push_back(decomp::make_edge(b[i], b[j]));
        }
    return Graph::from_edges(es);
}

inline Graph petersen() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.push_back(decomp::make_edge(i, (i + 1) % 5));         // outer cycle
        es.push_back(decomp::make_edge(5 + i, 5 + (i + 2) % 5)); // pentagram
        es.emplace_back(i, 5 + i);                               // spokes
    }
    return Graph::from_edges(es);
}

// Three K4s missing their shared pairs, glued along {2,3} and {4,5};
// both pairs are single cutsets and all three parts are blocks.
inline Graph three_k4_chain() {
    std::vector<Edge> es;
    auto k4_minus = [&](int v0, int v1, int v2, int v3, bool skip01) {
        int ids[4] = {v0, v1, v2, v3};
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                if (skip01 && ((i == 0 && j == 1))) continue;
                es.push_back(decomp::make_edge(ids[i], ids[j]));
            }
    };
    k4_minus(2, 3, 0, 1, true);  // part {0,1,2,3} without edge 23
    k4_minus(4, 5, 6, 7, true);  // part {4,5,6,7} without edge 45
    // middle part {2,3,4,5} without edges 23 and 45
    es.push_back(decomp::make_edge(2, 4));
    es.push_back(decomp::make_edge(2, 5));
    es.push_back(decomp::make_edge(3, 4));
    es.push_back(decomp::make_edge(3, 5));
    return Graph::from_edges(es);
}

// K5 with the edge {3,4} subdivided through 5: biconnected, one block
// part whose augmented graph is K5, so not planar.
inline Graph subdivided_k5() {
    std::vector<Edge> es;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            if (!(u == 3 && v == 4)) es.emplace_back(u, v);
    es.emplace_back(3, 5);
    es.emplace_back(4, 5);
    return Graph::from_edges(es);
}

// Central triangle {0,1,2} whose three pairs are all single cutsets,
// each carrying a terminal 4-cycle: a star-shaped tree, critical, six
// degree-2 vertices.
inline Graph star_critical() {
    return Graph::from_edges(std::vector<Edge>{
        {0, 1}, {1, 2}, {0, 2},          // central triangle
        {0, 3}, {3, 4}, {4, 1},          // 4-cycle on {0,1}
        {1, 5}, {5, 6}, {6, 2},          // 4-cycle on {1,2}
        {0, 7}, {7, 8}, {8, 2}});        // 4-cycle on {0,2}
}

// K5 block glued to a 4-cycle part across the single cutset {0,1}:
// K5 minus the edge {0,1} plus the path 0-5-6-1 plus the edge {0,1}.
inline Graph k5_with_cycle() {
    std::vector<Edge> es;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) es.emplace_back(u, v);
    es.emplace_back(0, 5);
    es.emplace_back(5, 6);
    es.emplace_back(1, 6);
    return Graph::from_edges(es);
}

} // namespace fixtures

#endif
