#include "decomp/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace decomp {

VertexSet::VertexSet(std::initializer_list<int> ids)
    : VertexSet(std::vector<int>(ids)) {}

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                         ids_.end());
}

VertexSet VertexSet::operator|(const VertexSet& other) const {
    std::vector<int> out;
    out.reserve(ids_.size() + other.ids_.size());
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                   other.ids_.end(), std::back_inserter(out));
    VertexSet r;
    r.ids_ = std::move(out);
    return r;
}

VertexSet VertexSet::operator-(const VertexSet& other) const {
    std::vector<int> out;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(out));
    VertexSet r;
    r.ids_ = std::move(out);
    return r;
}

VertexSet VertexSet::operator&(const VertexSet& other) const {
    std::vector<int> out;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                          other.ids_.end(), std::back_inserter(out));
    VertexSet r;
    r.ids_ = std::move(out);
    return r;
}

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < ids_.size(); ++i) {
        if (i) os << ',';
        os << ids_[i];
    }
    os << '}';
    return os.str();
}

Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

Graph::Graph(VertexSet vertices, std::vector<Edge> edges)
    : verts_(std::move(vertices)) {
    for (Edge& e : edges) e = make_edge(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u == v)
            throw DomainError("loop edge (" + std::to_string(u) + "," +
                              std::to_string(v) + ") not allowed");
        if (i > 0 && edges[i] == edges[i - 1])
            throw DomainError("duplicate edge (" + std::to_string(u) + "," +
                              std::to_string(v) + ")");
        if (!verts_.contains(u) || !verts_.contains(v))
            throw DomainError("edge (" + std::to_string(u) + "," +
                              std::to_string(v) +
                              ") has an endpoint outside the vertex set");
    }
    edges_ = std::move(edges);

    std::vector<std::vector<int>> adj(verts_.size());
    for (auto [u, v] : edges_) {
        adj[index_of(u)].push_back(v);
        adj[index_of(v)].push_back(u);
    }
    adj_.reserve(adj.size());
    for (auto& nb : adj) adj_.emplace_back(std::move(nb));
}

Graph Graph::from_edges(std::span<const Edge> edges) {
    std::vector<int> vs;
    for (auto [u, v] : edges) {
        vs.push_back(u);
        vs.push_back(v);
    }
    return Graph(VertexSet(std::move(vs)),
                 std::vector<Edge>(edges.begin(), edges.end()));
}

bool Graph::has_vertex(int v) const { return verts_.contains(v); }

bool Graph::has_edge(int u, int v) const {
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(u, v));
}

int Graph::index_of(int v) const {
    const auto& ids = verts_.ids();
    auto it = std::lower_bound(ids.begin(), ids.end(), v);
    if (it == ids.end() || *it != v) return -1;
    return static_cast<int>(it - ids.begin());
}

int Graph::degree(int v) const { return neighborhood(v).size(); }

const VertexSet& Graph::neighborhood(int v) const {
    int i = index_of(v);
    if (i < 0)
        throw DomainError("unknown vertex id " + std::to_string(v));
    return adj_[static_cast<size_t>(i)];
}

Graph erased(const Graph& g, const VertexSet& vertices,
             std::span<const Edge> edges) {
    for (int v : vertices)
        if (!g.has_vertex(v))
            throw DomainError("unknown vertex id " + std::to_string(v));
    for (auto [u, v] : edges)
        if (!g.has_edge(u, v))
            throw DomainError("unknown edge (" + std::to_string(u) + "," +
                              std::to_string(v) + ")");

    std::set<Edge> gone;
    for (auto [u, v] : edges) gone.insert(make_edge(u, v));

    VertexSet keep = g.vertices() - vertices;
    std::vector<Edge> kept;
    for (auto [u, v] : g.edges()) {
        if (vertices.contains(u) || vertices.contains(v)) continue;
        if (gone.count({u, v})) continue;
        kept.emplace_back(u, v);
    }
    return Graph(keep, std::move(kept));
}

Graph with_edge(const Graph& g, int x, int y) {
    if (!g.has_vertex(x) || !g.has_vertex(y))
        throw DomainError("unknown vertex id in edge (" + std::to_string(x) +
                          "," + std::to_string(y) + ")");
    if (x == y)
        throw DomainError("loop edge (" + std::to_string(x) + "," +
                          std::to_string(y) + ") not allowed");
    if (g.has_edge(x, y))
        throw DomainError("edge (" + std::to_string(x) + "," +
                          std::to_string(y) + ") already present");
    std::vector<Edge> es = g.edges();
    es.push_back(make_edge(x, y));
    return Graph(g.vertices(), std::move(es));
}

Graph induced(const Graph& g, const VertexSet& a) {
    if (!a.is_subset_of(g.vertices()))
        throw DomainError("induced subgraph on a set with unknown vertex ids");
    std::vector<Edge> es;
    for (auto [u, v] : g.edges())
        if (a.contains(u) && a.contains(v)) es.emplace_back(u, v);
    return Graph(a, std::move(es));
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    std::set<int> seen;
    for (int start : g.vertices()) {
        if (seen.count(start)) continue;
        std::vector<int> comp, stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighborhood(v))
                if (!seen.count(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
        }
        out.emplace_back(std::move(comp));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_connected(const Graph& g) {
    return g.vertex_count() >= 1 && components(g).size() == 1;
}

} // namespace decomp
