#ifndef DECOMP_COLORING_HPP
#define DECOMP_COLORING_HPP

#include <map>
#include <vector>

#include "decomp/decomposition.hpp"
#include "decomp/graph.hpp"

namespace decomp {

enum class ColorStrategy { Augmented, PartsPlusOne, BlocksPlusOne, ListColoring };

std::string strategy_name(ColorStrategy s);

/// A vertex coloring plus the bound it was produced under. Checkable
/// independently of its construction: proper, and (except for list
/// certificates, whose colors come from arbitrary lists) at most
/// `bound_used` distinct colors.
struct ColoringCertificate {
    std::map<int, int> assignment; // vertex -> color id
    int bound_used = 0;
    ColorStrategy strategy = ColorStrategy::Augmented;
};

/// Per-vertex color lists, each nonempty, sorted, duplicate-free.
struct ListAssignment {
    std::map<int, std::vector<int>> lists;
};

/// Tree node handle plus BFS level from a designated root part. Even
/// levels are parts, odd levels are cutsets.
struct TreeNode {
    bool is_cutset = false;
    int index = 0;
    friend auto operator<=>(const TreeNode&, const TreeNode&) = default;
};

struct LevelOrder {
    int root_part = 0;
    std::map<TreeNode, int> level_of;
};

LevelOrder level_order(const DecompositionTree& tree, const Part& root);

/// The part whose per-part bound is maximal under the given strategy, so
/// the extra color(s) of the additive bounds are never paid on the most
/// expensive part. Deterministic tie-break: smallest member set.
const Part& choose_root(const Graph& g, const DecompositionTree& tree,
                        ColorStrategy strategy);

/// Level-order coloring of the augmented graph; the bound is the largest
/// exact chromatic number over the augmented part graphs, and equality
/// holds for the augmented graph itself.
ColoringCertificate color_augmented(const Graph& g,
                                    const DecompositionTree& tree);

/// Level-order coloring of the graph itself with one color above the
/// largest exact chromatic number over the plain part graphs.
ColoringCertificate color_parts_plus_one(const Graph& g,
                                         const DecompositionTree& tree);

/// Same, except only block parts contribute to the bound and cycle parts
/// are completed greedily with three colors; bound max(3, m+1).
ColoringCertificate color_blocks_plus_one(const Graph& g,
                                          const DecompositionTree& tree);

/// Level-order list coloring: each new part drops its two pre-colored
/// cutset colors from the remaining lists before being list-colored;
/// cycle parts complete greedily from 3-color lists. A construction
/// failure with list sizes meeting the theorem bounds is a bug and
/// surfaces as std::logic_error.
ColoringCertificate list_color(const Graph& g, const DecompositionTree& tree,
                               const ListAssignment& lists);

/// Proper, everything colored, and (non-list strategies) at most
/// bound_used distinct colors.
bool verify_certificate(const Graph& g, const ColoringCertificate& cert);

/// verify_certificate plus per-vertex list membership.
bool verify_list_certificate(const Graph& g, const ColoringCertificate& cert,
                             const ListAssignment& lists);

inline constexpr int kPartSizeCap = 12;

} // namespace decomp

#endif
