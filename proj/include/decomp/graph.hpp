#ifndef DECOMP_GRAPH_HPP
#define DECOMP_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "decomp/errors.hpp"

namespace decomp {

/// Canonical vertex set: sorted and duplicate-free, so set equality is
/// representation equality. The carrier for cutsets, parts, interiors
/// and boundaries.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<int> ids);
    explicit VertexSet(std::vector<int> ids);

    bool contains(int v) const;
    bool is_subset_of(const VertexSet& other) const;
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    int front() const { return ids_.front(); }

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }
    const std::vector<int>& ids() const { return ids_; }

    VertexSet operator|(const VertexSet& other) const; // union
    VertexSet operator-(const VertexSet& other) const; // difference
    VertexSet operator&(const VertexSet& other) const; // intersection

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
        return a.ids_ <=> b.ids_;
    }

    std::string to_string() const; // "{0,2,4}"

private:
    std::vector<int> ids_;
};

/// Undirected edge, normalized so first < second.
using Edge = std::pair<int, int>;

Edge make_edge(int u, int v);

/// Immutable simple undirected graph with stable nonnegative integer
/// vertex ids. Surgery (vertex/edge deletion, edge addition, induced
/// subgraphs) returns new graphs; ids are never renumbered. No loops,
/// no multi-edges. Values are safe to share across threads.
class Graph {
public:
    Graph() = default;
    Graph(VertexSet vertices, std::vector<Edge> edges);

    /// Graph whose vertex set is exactly the endpoints of `edges`.
    static Graph from_edges(std::span<const Edge> edges);

    const VertexSet& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int vertex_count() const { return verts_.size(); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_vertex(int v) const;
    bool has_edge(int u, int v) const;

    int degree(int v) const;                  // |N(v)|; DomainError if v unknown
    const VertexSet& neighborhood(int v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.verts_ == b.verts_ && a.edges_ == b.edges_;
    }

private:
    int index_of(int v) const; // -1 if absent

    VertexSet verts_;
    std::vector<Edge> edges_;      // sorted, canonical
    std::vector<VertexSet> adj_;   // parallel to verts_
};

// Surgery. Every operation validates membership and throws DomainError
// on unknown ids; remaining ids are unchanged.

/// G - R: remove the listed vertices and edges, plus all edges incident
/// to a removed vertex.
Graph erased(const Graph& g, const VertexSet& vertices,
             std::span<const Edge> edges = {});

/// G + xy. Requires x != y, both present, edge absent.
Graph with_edge(const Graph& g, int x, int y);

/// Induced subgraph on a vertex subset.
Graph induced(const Graph& g, const VertexSet& a);

/// Connected components as vertex sets, each sorted, the list ordered by
/// smallest member. Empty graph yields an empty list.
std::vector<VertexSet> components(const Graph& g);

/// True iff the graph has at least one vertex and a single component.
bool is_connected(const Graph& g);

} // namespace decomp

#endif
