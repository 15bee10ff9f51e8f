#ifndef DECOMP_CRITICAL_HPP
#define DECOMP_CRITICAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "decomp/decomposition.hpp"
#include "decomp/graph.hpp"

namespace decomp {

/// Kinds a non-terminal part of a critical chain can take.
enum class MiddleKind { Triangle, CycleOfFour, BlockOnFour };

std::string middle_kind_name(MiddleKind k);

/// The shape of a critical biconnected graph with exactly four degree-2
/// vertices: either the 4-cycle (degenerate, no single cutsets) or a
/// path-shaped tree whose two terminal parts are 4-cycles and whose
/// middle parts have empty interior on 3 or 4 vertices.
struct ChainDescription {
    bool degenerate_cycle = false;
    int terminal_length_first = 0;
    int terminal_length_last = 0;
    std::vector<MiddleKind> middles;
    std::vector<VertexSet> part_sequence;   // terminal, middles..., terminal
    std::vector<VertexSet> cutset_sequence; // between consecutive parts
};

/// Structural criticality verdict plus its evidence: a deletable vertex
/// when not critical, otherwise the checked block/triangle parts whose
/// interiors are all empty.
struct CriticalReport {
    bool critical = false;
    std::optional<int> deletable_vertex;    // smallest witness when not critical
    std::vector<int> empty_interior_parts;  // checked part indices when critical
    VertexSet degree2;
    std::optional<ChainDescription> exactly_four;
};

/// Structural test: critical iff every block part and every triangle
/// part has an empty interior. With cross_check the per-vertex deletion
/// oracle runs alongside and a disagreement is a logic error.
CriticalReport is_critical(const Graph& g, const DecompositionTree& tree,
                           bool cross_check = false);

/// For a critical graph: every terminal part must be a cycle of length
/// at least 4 whose non-cutset vertices all have degree 2; returns the
/// per-part degree-2 sets. Violations surface as logic errors.
std::vector<std::pair<Part, VertexSet>>
terminal_part_check(const Graph& g, const DecompositionTree& tree);

/// Chain classification for critical graphs with exactly four degree-2
/// vertices. Returns nothing (with a reason in *why) if a condition
/// fails, which would falsify the classification.
std::optional<ChainDescription>
classify_exactly_four(const Graph& g, const DecompositionTree& tree,
                      std::string* why = nullptr);

/// Builds a critical chain: two terminal cycles around the given middle
/// parts, consecutive single cutsets sharing one vertex inside triangles
/// and disjoint inside 4-vertex parts; every cutset pair is joined by a
/// real edge. Terminal lengths of 4 give exactly four degree-2 vertices.
Graph generate_critical_chain(const std::vector<MiddleKind>& middles,
                              std::pair<int, int> terminal_lengths);

} // namespace decomp

#endif
