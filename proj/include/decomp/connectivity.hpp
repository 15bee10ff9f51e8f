#ifndef DECOMP_CONNECTIVITY_HPP
#define DECOMP_CONNECTIVITY_HPP

#include <vector>

#include "decomp/graph.hpp"

namespace decomp {

/// A k-element vertex set whose removal disconnects its host graph.
struct Cutset {
    VertexSet members;
    int k() const { return members.size(); }
    friend bool operator==(const Cutset&, const Cutset&) = default;
    friend auto operator<=>(const Cutset& a, const Cutset& b) {
        return a.members <=> b.members;
    }
};

/// Ordered family of cutsets of equal size. The pairwise-independence
/// flag is set only after an explicit verification pass.
class CutsetFamily {
public:
    CutsetFamily() = default;
    CutsetFamily(int k, std::vector<Cutset> cutsets);

    int k() const { return k_; }
    int size() const { return static_cast<int>(items_.size()); }
    bool empty() const { return items_.empty(); }
    const std::vector<Cutset>& items() const { return items_; }
    bool verified_independent() const { return verified_; }

private:
    int k_ = 0;
    std::vector<Cutset> items_;
    bool verified_ = false;

    friend CutsetFamily verify_independent(const Graph&, CutsetFamily);
    friend CutsetFamily single_cutsets(const Graph&);
};

/// Exhaustive enumeration is quadratic in the vertex count; calls on
/// graphs above this size still run but emit a one-time warning.
inline constexpr int kPairEnumerationSoftCap = 64;

/// All k-vertex cutsets, k in {1,2}, by exhaustive subset checking.
/// Requires a connected graph with more than k vertices. Larger k is
/// served by the oracle module only.
CutsetFamily enumerate_cutsets(const Graph& g, int k);

/// True iff no component of G-R contains a vertex of X\R and a vertex
/// of Y\R. Requires X and Y not contained in R.
bool separates(const Graph& g, const VertexSet& r, const VertexSet& x,
               const VertexSet& y);

/// True iff X\R meets at least two components of G-R. Requires X not
/// contained in R.
bool splits(const Graph& g, const VertexSet& r, const VertexSet& x);

/// v(G) > k, connected, and no cutset of fewer than k vertices
/// (checked by exhausting all small subsets).
bool is_k_connected(const Graph& g, int k);

bool is_biconnected(const Graph& g);

enum class PairRelation { Independent, MutuallyDependent };

/// For two distinct equal-size cutsets of a k-connected graph either
/// neither splits the other or both do; a one-sided split is reported
/// as a logic error since it falsifies the dichotomy this module is
/// built on.
PairRelation pair_relation(const Graph& g, const Cutset& s, const Cutset& t);

bool independent(const Graph& g, const Cutset& s, const Cutset& t);

/// Checks every pair and returns the family with its independence flag
/// set; throws DomainError naming the first dependent pair otherwise.
CutsetFamily verify_independent(const Graph& g, CutsetFamily family);

/// The 2-cutsets of a biconnected graph that are independent of every
/// other 2-cutset. The result is flagged pairwise independent.
CutsetFamily single_cutsets(const Graph& g);

} // namespace decomp

#endif
