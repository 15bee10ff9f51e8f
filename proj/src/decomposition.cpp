#include "decomp/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace decomp {

std::string classification_label(const Part& p) {
    switch (p.kind) {
    case PartKind::Cycle:
        return "Cycle(" + std::to_string(p.cycle_length) + ")";
    case PartKind::Block:
        return "Block";
    default:
        return "Unclassified";
    }
}

DecompositionTree::DecompositionTree(CutsetFamily cutsets,
                                     std::vector<Part> parts)
    : cutsets_(std::move(cutsets)), parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(),
              [](const Part& a, const Part& b) { return a.members < b.members; });
    cutset_adj_.resize(static_cast<size_t>(cutsets_.size()));
    part_adj_.resize(parts_.size());
    for (int ci = 0; ci < cutsets_.size(); ++ci)
        for (size_t pi = 0; pi < parts_.size(); ++pi)
            if (cutsets_.items()[static_cast<size_t>(ci)].members.is_subset_of(
                    parts_[pi].members)) {
                edges_.emplace_back(ci, static_cast<int>(pi));
                cutset_adj_[static_cast<size_t>(ci)].push_back(static_cast<int>(pi));
                part_adj_[pi].push_back(ci);
            }

    // Tree laws: connected, |E| = |N| - 1, every leaf a part node.
    int n = node_count();
    if (parts_.empty())
        throw std::logic_error("decomposition tree with no part nodes");
    if (static_cast<int>(edges_.size()) != n - 1)
        throw std::logic_error("decomposition tree edge count violates tree law");
    std::vector<bool> seen_c(cutset_adj_.size(), false), seen_p(parts_.size(), false);
    std::vector<std::pair<bool, int>> stack; // (is_cutset, index)
    stack.emplace_back(false, 0);
    seen_p[0] = true;
    int visited = 1;
    while (!stack.empty()) {
        auto [is_cutset, idx] = stack.back();
        stack.pop_back();
        if (is_cutset) {
            for (int pi : cutset_adj_[static_cast<size_t>(idx)])
                if (!seen_p[static_cast<size_t>(pi)]) {
                    seen_p[static_cast<size_t>(pi)] = true;
                    ++visited;
                    stack.emplace_back(false, pi);
                }
        } else {
            for (int ci : part_adj_[static_cast<size_t>(idx)])
                if (!seen_c[static_cast<size_t>(ci)]) {
                    seen_c[static_cast<size_t>(ci)] = true;
                    ++visited;
                    stack.emplace_back(true, ci);
                }
        }
    }
    if (visited != n)
        throw std::logic_error("decomposition tree is not connected");
    for (const auto& adj : cutset_adj_)
        if (adj.size() < 2)
            throw std::logic_error("cutset node of tree degree < 2; leaves "
                                   "must be parts");
}

const std::vector<int>& DecompositionTree::parts_of_cutset(int ci) const {
    return cutset_adj_.at(static_cast<size_t>(ci));
}

const std::vector<int>& DecompositionTree::cutsets_of_part(int pi) const {
    return part_adj_.at(static_cast<size_t>(pi));
}

int DecompositionTree::find_part(const VertexSet& members) const {
    for (size_t i = 0; i < parts_.size(); ++i)
        if (parts_[i].members == members) return static_cast<int>(i);
    return -1;
}

int DecompositionTree::find_cutset(const VertexSet& members) const {
    for (int i = 0; i < cutsets_.size(); ++i)
        if (cutsets_.items()[static_cast<size_t>(i)].members == members) return i;
    return -1;
}

void DecompositionTree::set_root(int part_index) {
    if (part_index < 0 || part_index >= static_cast<int>(parts_.size()))
        throw DomainError("root must be a part node of the tree");
    root_ = part_index;
}

Graph augment(const Graph& g, const CutsetFamily& family) {
    Graph out = g;
    for (const Cutset& c : family.items()) {
        const auto& ids = c.members.ids();
        for (size_t i = 0; i < ids.size(); ++i)
            for (size_t j = i + 1; j < ids.size(); ++j) {
                if (!out.has_vertex(ids[i]) || !out.has_vertex(ids[j]))
                    throw DomainError("cutset " + c.members.to_string() +
                                      " has vertices outside the graph");
                if (!out.has_edge(ids[i], ids[j]))
                    out = with_edge(out, ids[i], ids[j]);
            }
    }
    return out;
}

namespace {

// Recursive splitting from the tree theorem's proof: split the working
// (augmented) graph by its smallest cutset, hand each piece the cutsets
// lying inside it.
void split_rec(const Graph& h, const std::vector<Cutset>& cutsets,
               std::vector<VertexSet>& out) {
    if (cutsets.empty()) {
        out.push_back(h.vertices());
        return;
    }
    const Cutset& s = cutsets.front();
    auto comps = components(erased(h, s.members));
    if (comps.size() < 2)
        throw std::logic_error("cutset " + s.members.to_string() +
                               " does not split its part graph");
    size_t assigned = 0;
    for (const VertexSet& comp : comps) {
        VertexSet a = comp | s.members;
        std::vector<Cutset> inside;
        for (size_t i = 1; i < cutsets.size(); ++i)
            if (cutsets[i].members.is_subset_of(a)) inside.push_back(cutsets[i]);
        assigned += inside.size();
        split_rec(induced(h, a), inside, out);
    }
    if (assigned != cutsets.size() - 1)
        throw std::logic_error("a cutset landed in zero or several sides of " +
                               s.members.to_string());
}

} // namespace

std::vector<Part> parts(const Graph& g, const CutsetFamily& family) {
    CutsetFamily fam = family.verified_independent()
                           ? family
                           : verify_independent(g, family);
    if (fam.empty()) {
        Part whole;
        whole.members = g.vertices();
        whole.interior = g.vertices();
        return {whole};
    }
    if (!is_k_connected(g, fam.k()))
        throw DomainError("graph is not " + std::to_string(fam.k()) +
                          "-connected for the family's k");

    Graph h = augment(g, fam);
    std::vector<VertexSet> raw;
    split_rec(h, fam.items(), raw);
    std::sort(raw.begin(), raw.end());
    for (size_t i = 1; i < raw.size(); ++i)
        if (raw[i] == raw[i - 1])
            throw std::logic_error("duplicate part " + raw[i].to_string());

    VertexSet cut_union;
    for (const Cutset& c : fam.items()) cut_union = cut_union | c.members;

    std::vector<Part> out;
    out.reserve(raw.size());
    for (VertexSet& members : raw) {
        Part p;
        p.boundary = members & cut_union;
        p.interior = members - p.boundary;
        p.members = std::move(members);
        out.push_back(std::move(p));
    }
    return out;
}

DecompositionTree decomposition_tree(const Graph& g,
                                     const CutsetFamily& family) {
    CutsetFamily fam = family.verified_independent()
                           ? family
                           : verify_independent(g, family);
    return DecompositionTree(fam, parts(g, fam));
}

Classification classify_part(const Graph& g, const CutsetFamily& family,
                             const Part& a) {
    Graph h = induced(augment(g, family), a.members);
    bool cycle = h.vertex_count() >= 3 && is_connected(h);
    if (cycle)
        for (int v : h.vertices())
            if (h.degree(v) != 2) {
                cycle = false;
                break;
            }
    if (cycle) return {PartKind::Cycle, h.vertex_count()};
    if (is_k_connected(h, 3)) return {PartKind::Block, 0};
    throw std::logic_error("part " + a.members.to_string() +
                           " is neither a simple cycle nor triconnected");
}

DecompositionTree single_cutset_tree(const Graph& g) {
    if (g.vertex_count() < 3 || !is_biconnected(g))
        throw DomainError("the single-cutset tree needs a biconnected graph "
                          "on at least 3 vertices");
    CutsetFamily singles = single_cutsets(g);
    std::vector<Part> ps = parts(g, singles);
    for (Part& p : ps) {
        Classification c = classify_part(g, singles, p);
        p.kind = c.kind;
        p.cycle_length = c.cycle_length;
    }
    return DecompositionTree(singles, std::move(ps));
}

std::vector<int> cycle_order(const Graph& cycle) {
    const auto& vs = cycle.vertices().ids();
    if (vs.size() < 3) throw DomainError("cycle order needs >= 3 vertices");
    std::vector<int> order;
    order.reserve(vs.size());
    int start = vs.front();
    const VertexSet& nb = cycle.neighborhood(start);
    if (nb.size() != 2) throw DomainError("not a simple cycle");
    order.push_back(start);
    int prev = start, cur = nb.front();
    while (cur != start) {
        order.push_back(cur);
        const VertexSet& nn = cycle.neighborhood(cur);
        if (nn.size() != 2) throw DomainError("not a simple cycle");
        int next = (nn.ids()[0] == prev) ? nn.ids()[1] : nn.ids()[0];
        prev = cur;
        cur = next;
    }
    if (order.size() != vs.size()) throw DomainError("not a simple cycle");
    return order;
}

CutsetFamily nonsingle_cutsets_from_cycles(const Graph& g,
                                           const DecompositionTree& tree) {
    std::set<Cutset> found;
    Graph h = augment(g, tree.cutsets());
    for (const Part& p : tree.parts()) {
        if (p.kind != PartKind::Cycle || p.cycle_length < 4) continue;
        std::vector<int> order = cycle_order(induced(h, p.members));
        size_t n = order.size();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 2; j < n; ++j) {
                if (i == 0 && j == n - 1) continue; // neighbors on the cycle
                found.insert({VertexSet{order[i], order[j]}});
            }
    }
    return CutsetFamily(2, std::vector<Cutset>(found.begin(), found.end()));
}

bool tree_separation(const DecompositionTree& tree, const Cutset& s,
                     const Part& b, const Part& b2) {
    int ci = tree.find_cutset(s.members);
    int p1 = tree.find_part(b.members);
    int p2 = tree.find_part(b2.members);
    if (ci < 0) throw DomainError("unknown cutset node " + s.members.to_string());
    if (p1 < 0) throw DomainError("unknown part node " + b.members.to_string());
    if (p2 < 0) throw DomainError("unknown part node " + b2.members.to_string());
    if (p1 == p2) return false;

    // Reachability from p1 avoiding the cutset node ci.
    std::vector<bool> seen_c(static_cast<size_t>(tree.cutsets().size()), false);
    std::vector<bool> seen_p(tree.parts().size(), false);
    seen_c[static_cast<size_t>(ci)] = true; // blocked
    std::vector<std::pair<bool, int>> stack{{false, p1}};
    seen_p[static_cast<size_t>(p1)] = true;
    while (!stack.empty()) {
        auto [is_cutset, idx] = stack.back();
        stack.pop_back();
        if (is_cutset) {
            for (int pi : tree.parts_of_cutset(idx))
                if (!seen_p[static_cast<size_t>(pi)]) {
                    seen_p[static_cast<size_t>(pi)] = true;
                    stack.emplace_back(false, pi);
                }
        } else {
            for (int cc : tree.cutsets_of_part(idx))
                if (!seen_c[static_cast<size_t>(cc)]) {
                    seen_c[static_cast<size_t>(cc)] = true;
                    stack.emplace_back(true, cc);
                }
        }
    }
    return !seen_p[static_cast<size_t>(p2)];
}

BlockCutTree block_cut_tree(const Graph& g) {
    if (!is_connected(g))
        throw DomainError("block-cut tree needs a connected graph");

    BlockCutTree out;
    if (g.vertex_count() == 1) {
        out.blocks.push_back(g.vertices());
        return out;
    }

    // Hopcroft-Tarjan articulation DFS with an edge stack.
    std::map<int, int> disc, low, parent;
    std::set<int> articulation;
    std::vector<Edge> estack;
    std::vector<std::set<int>> blocks;
    int timer = 0;

    std::function<void(int)> dfs = [&](int u) {
        disc[u] = low[u] = ++timer;
        int children = 0;
        for (int v : g.neighborhood(u)) {
            if (!disc.count(v)) {
                ++children;
                parent[v] = u;
                estack.push_back(make_edge(u, v));
                dfs(v);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    if (parent.count(u) || children > 1) articulation.insert(u);
                    std::set<int> block;
                    Edge top;
                    do {
                        top = estack.back();
                        estack.pop_back();
                        block.insert(top.first);
                        block.insert(top.second);
                    } while (top != make_edge(u, v));
                    blocks.push_back(std::move(block));
                }
            } else if (v != (parent.count(u) ? parent[u] : -1) &&
                       disc[v] < disc[u]) {
                estack.push_back(make_edge(u, v));
                low[u] = std::min(low[u], disc[v]);
            }
        }
    };
    dfs(g.vertices().front());

    out.cutpoints.assign(articulation.begin(), articulation.end());
    for (auto& b : blocks)
        out.blocks.emplace_back(std::vector<int>(b.begin(), b.end()));
    std::sort(out.blocks.begin(), out.blocks.end());
    for (size_t ai = 0; ai < out.cutpoints.size(); ++ai)
        for (size_t bi = 0; bi < out.blocks.size(); ++bi)
            if (out.blocks[bi].contains(out.cutpoints[ai]))
                out.edges.emplace_back(static_cast<int>(ai), static_cast<int>(bi));
    return out;
}

} // namespace decomp
