#ifndef DECOMP_DECOMPOSITION_HPP
#define DECOMP_DECOMPOSITION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "decomp/connectivity.hpp"
#include "decomp/graph.hpp"

namespace decomp {

enum class PartKind { Unclassified, Cycle, Block };

/// A part of the decomposition by a pairwise-independent cutset family:
/// a vertex set split by no family cutset, with every outside vertex
/// separated from it by some family cutset. Boundary vertices lie in
/// family cutsets, interior vertices in none.
struct Part {
    VertexSet members;
    VertexSet interior;
    VertexSet boundary;
    PartKind kind = PartKind::Unclassified;
    int cycle_length = 0; // |members| when kind == Cycle

    friend bool operator==(const Part&, const Part&) = default;
};

std::string classification_label(const Part& p); // "Cycle(3)", "Block", ...

/// Bipartite tree over a cutset family and its parts, with an edge
/// between cutset S and part A exactly when S is a subset of A.
/// Construction checks the tree laws (connected, acyclic, every leaf a
/// part) and throws std::logic_error if they fail, since the underlying
/// theorems guarantee them for valid input.
class DecompositionTree {
public:
    DecompositionTree(CutsetFamily cutsets, std::vector<Part> parts);

    const CutsetFamily& cutsets() const { return cutsets_; }
    const std::vector<Part>& parts() const { return parts_; }
    /// Edges as (cutset index, part index), sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int node_count() const { return cutsets_.size() + static_cast<int>(parts_.size()); }

    const std::vector<int>& parts_of_cutset(int cutset_index) const;
    const std::vector<int>& cutsets_of_part(int part_index) const;

    int find_part(const VertexSet& members) const;   // -1 when absent
    int find_cutset(const VertexSet& members) const; // -1 when absent

    /// Optional designated root part, used by the coloring routines.
    std::optional<int> root() const { return root_; }
    void set_root(int part_index);

private:
    CutsetFamily cutsets_;
    std::vector<Part> parts_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> cutset_adj_; // cutset -> part indices
    std::vector<std::vector<int>> part_adj_;   // part -> cutset indices
    std::optional<int> root_;
};

/// Classic tree of blocks and cutpoints; coincides with the generic
/// decomposition tree over all 1-cutsets under the identification of a
/// cutpoint with its singleton set.
struct BlockCutTree {
    std::vector<int> cutpoints;                // sorted
    std::vector<VertexSet> blocks;             // sorted
    std::vector<std::pair<int, int>> edges;    // (cutpoint idx, block idx)
};

/// All parts of the family decomposition, computed by recursive
/// splitting: pick the smallest cutset, split into component-plus-cutset
/// pieces, recurse on each piece of the augmented graph with the cutsets
/// that lie inside it. The family must be pairwise independent (it is
/// re-verified unless already flagged) and the graph k-connected for the
/// family's k. An empty family yields the single part V(G).
std::vector<Part> parts(const Graph& g, const CutsetFamily& family);

/// The graph plus every missing edge inside every cutset of the family.
Graph augment(const Graph& g, const CutsetFamily& family);

DecompositionTree decomposition_tree(const Graph& g, const CutsetFamily& family);

/// Decomposition tree of a biconnected graph over its single cutsets,
/// with every part classified as a cycle or a triconnected block.
DecompositionTree single_cutset_tree(const Graph& g);

BlockCutTree block_cut_tree(const Graph& g);

/// Classification of the augmented induced graph on a part: a simple
/// cycle of |A| vertices, or triconnected. Exactly one case holds for
/// parts of a single-cutset decomposition; anything else is reported as
/// a logic error. A triangle counts as a cycle, not a block.
struct Classification {
    PartKind kind;
    int cycle_length; // 0 for blocks
};
Classification classify_part(const Graph& g, const CutsetFamily& family,
                             const Part& a);

/// All pairs of non-neighboring vertices of cycle parts of length >= 4.
/// For a single-cutset tree this is exactly the set of non-single
/// 2-cutsets of the host graph.
CutsetFamily nonsingle_cutsets_from_cycles(const Graph& g,
                                           const DecompositionTree& tree);

/// True iff removing the cutset node leaves the two part nodes in
/// different components of the tree; false when b == b2.
bool tree_separation(const DecompositionTree& tree, const Cutset& s,
                     const Part& b, const Part& b2);

/// Cyclic vertex order of a simple cycle graph, starting at the smallest
/// vertex, second element the smaller of its two neighbors.
std::vector<int> cycle_order(const Graph& cycle);

} // namespace decomp

#endif
