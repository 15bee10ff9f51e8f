#ifndef DECOMP_PLANARITY_HPP
#define DECOMP_PLANARITY_HPP

#include <map>
#include <optional>
#include <vector>

#include "decomp/decomposition.hpp"
#include "decomp/graph.hpp"

namespace decomp {

/// Evidence that a host graph contains a subdivision of a model graph:
/// an injection of the model's vertices plus, for each model edge
/// realized by more than a single host edge, the detour path. Model
/// edges absent from `detours` are realized by the host edge between the
/// mapped endpoints. Paths are stored from the image of the smaller
/// model endpoint to the larger and include both endpoints.
struct SubdivisionWitness {
    Graph model;
    std::map<int, int> main_map;             // model vertex -> host vertex
    std::map<Edge, std::vector<int>> detours; // model edge -> host path

    /// The realized subgraph: main vertices plus all path edges.
    Graph subgraph() const;
};

/// Checks the witness against the host: injective main map, every path a
/// simple host path with the right endpoints, interiors pairwise
/// disjoint and disjoint from the mains, and contraction reproducing the
/// model's edge set.
bool verify_subdivision(const Graph& host, const SubdivisionWitness& w);

/// Exhaustive search caps. Intended model graphs in production paths are
/// the two Kuratowski graphs; block size defaults keep the worst case at
/// desk scale.
inline constexpr int kDefaultBlockSizeCap = 16;
inline constexpr long kDefaultSearchSteps = 50'000'000;

/// Branch-and-bound search for a subdivision of `model` inside `g`:
/// assign main vertices respecting degrees, then route internally
/// disjoint paths, deterministically. Absence is a valid result.
std::optional<SubdivisionWitness>
contains_subdivision(const Graph& g, const Graph& model,
                     long step_cap = kDefaultSearchSteps);

/// A witness that the host contains a subdivision of the augmented
/// induced graph on a tree part: each augmented edge is rerouted through
/// the interior of a decomposition side that avoids the part, so the
/// detours are pairwise internally disjoint.
SubdivisionWitness realize_part_subdivision(const Graph& g,
                                            const DecompositionTree& tree,
                                            const Part& a);

/// Planarity of one block: the edge-count bound e <= 3v - 6 plus absence
/// of both Kuratowski subdivisions. Doubles as the witness source.
/// Requires a biconnected graph.
bool base_planar(const Graph& g);

/// Part-wise criterion for a biconnected graph: cycle parts are planar
/// by inspection, block parts defer to base_planar on their augmented
/// induced graphs.
bool is_planar(const Graph& g, int block_size_cap = kDefaultBlockSizeCap);

/// Composition over blocks for connected graphs.
bool is_planar_connected(const Graph& g,
                         int block_size_cap = kDefaultBlockSizeCap);

/// For a non-planar connected graph, a Kuratowski subdivision witness in
/// the graph itself, built by composing a witness found inside a
/// non-planar block part with that part's detour realization.
std::optional<SubdivisionWitness>
find_kuratowski(const Graph& g, int block_size_cap = kDefaultBlockSizeCap);

Graph k5();
Graph k33();

} // namespace decomp

#endif
