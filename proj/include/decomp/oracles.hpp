#ifndef DECOMP_ORACLES_HPP
#define DECOMP_ORACLES_HPP

#include <chrono>
#include <cstdint>
#include <map>

#include "decomp/decomposition.hpp"
#include "decomp/graph.hpp"

namespace decomp {

/// Caps for the exhaustive oracles. Exceeding a cap throws BudgetError;
/// an oracle never returns a silently wrong answer.
struct OracleBudget {
    int max_vertices_parts = 12;
    int max_vertices_chromatic = 12;
    int max_vertices_choosable = 6;
    int max_list_size = 3;
    long max_subsets = 5'000'000;
    std::chrono::milliseconds time_cap{10'000};
};

// The oracles below traverse their own bitmask representation and share
// no graph-walking code with the constructive modules they check.

/// Definition-level part enumeration: every vertex subset unsplit by all
/// family cutsets and separated from every outside vertex by some family
/// cutset.
std::vector<Part> oracle_parts(const Graph& g, const CutsetFamily& family,
                               const OracleBudget& budget = {});

/// Exact chromatic number by branch and bound over the color count.
int oracle_chromatic(const Graph& g, const OracleBudget& budget = {});

/// A proper coloring attaining the chromatic number, colors 1..chi.
std::map<int, int> oracle_optimal_coloring(const Graph& g,
                                           const OracleBudget& budget = {});

/// Exact k-choosability over a color universe of size k*v(G). List
/// assignments are enumerated up to color relabeling (fresh colors are
/// taken as a canonical prefix); assignments dominated by greedy
/// coloring are skipped when k exceeds the degeneracy.
bool oracle_choosable(const Graph& g, int k, const OracleBudget& budget = {});

/// All k-subsets whose removal disconnects the graph, any k.
CutsetFamily oracle_cutsets(const Graph& g, int k,
                            const OracleBudget& budget = {});

/// Criticality by deletion: every single-vertex removal destroys
/// biconnectivity. Requires a biconnected graph on >= 4 vertices.
bool oracle_critical(const Graph& g, const OracleBudget& budget = {});

/// Deterministic-by-seed biconnected graph: a seed cycle grown by ear
/// additions until all n vertices are placed, then extra chords with
/// probability `density` per non-edge.
Graph random_biconnected(int n, double density, std::uint64_t seed);

} // namespace decomp

#endif
