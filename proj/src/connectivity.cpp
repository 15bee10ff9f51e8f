#include "decomp/connectivity.hpp"

#include <algorithm>
#include <iostream>
#include <map>

namespace decomp {

namespace {

// Component index per vertex of G-R, or -1 for removed vertices.
std::map<int, int> component_labels(const Graph& g, const VertexSet& r) {
    std::map<int, int> label;
    for (int v : g.vertices()) label[v] = -1;
    Graph rest = erased(g, r);
    auto comps = components(rest);
    for (size_t i = 0; i < comps.size(); ++i)
        for (int v : comps[i]) label[v] = static_cast<int>(i);
    return label;
}

bool splits_by_labels(const std::map<int, int>& label, const VertexSet& x) {
    int seen = -1;
    for (int v : x) {
        int l = label.at(v);
        if (l < 0) continue; // v in R
        if (seen < 0)
            seen = l;
        else if (l != seen)
            return true;
    }
    return false;
}

void require_vertices(const Graph& g, const VertexSet& s, const char* what) {
    for (int v : s)
        if (!g.has_vertex(v))
            throw DomainError(std::string(what) + " contains unknown vertex id " +
                              std::to_string(v));
}

bool is_cutset_of(const Graph& g, const VertexSet& s) {
    return components(erased(g, s)).size() >= 2;
}

// Relation between two validated distinct cutsets.
PairRelation relation_unchecked(const Graph& g, const Cutset& s,
                                const Cutset& t) {
    bool s_splits_t = splits_by_labels(component_labels(g, s.members), t.members);
    bool t_splits_s = splits_by_labels(component_labels(g, t.members), s.members);
    if (s_splits_t != t_splits_s)
        throw std::logic_error("one-sided split between cutsets " +
                               s.members.to_string() + " and " +
                               t.members.to_string());
    return s_splits_t ? PairRelation::MutuallyDependent
                      : PairRelation::Independent;
}

} // namespace

CutsetFamily::CutsetFamily(int k, std::vector<Cutset> cutsets) : k_(k) {
    for (const Cutset& c : cutsets)
        if (c.k() != k)
            throw DomainError("cutset " + c.members.to_string() +
                              " does not have " + std::to_string(k) +
                              " vertices");
    std::sort(cutsets.begin(), cutsets.end());
    cutsets.erase(std::unique(cutsets.begin(), cutsets.end()), cutsets.end());
    items_ = std::move(cutsets);
}

CutsetFamily enumerate_cutsets(const Graph& g, int k) {
    if (k != 1 && k != 2)
        throw DomainError("cutset enumeration supports k = 1 or 2 only; "
                          "larger k is oracle-only");
    if (g.vertex_count() <= k)
        throw DomainError("cutset enumeration needs more than k vertices");
    if (!is_connected(g))
        throw DomainError("cutset enumeration needs a connected graph");
    if (g.vertex_count() > kPairEnumerationSoftCap)
        std::cerr << "warning: exhaustive cutset enumeration on "
                  << g.vertex_count() << " vertices (soft cap "
                  << kPairEnumerationSoftCap << ")\n";

    std::vector<Cutset> found;
    const auto& vs = g.vertices().ids();
    if (k == 1) {
        for (int v : vs)
            if (is_cutset_of(g, VertexSet{v})) found.push_back({VertexSet{v}});
    } else {
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j) {
                VertexSet pair{vs[i], vs[j]};
                if (is_cutset_of(g, pair)) found.push_back({pair});
            }
    }
    return CutsetFamily(k, std::move(found));
}

bool separates(const Graph& g, const VertexSet& r, const VertexSet& x,
               const VertexSet& y) {
    require_vertices(g, r, "R");
    require_vertices(g, x, "X");
    require_vertices(g, y, "Y");
    if (x.is_subset_of(r) || y.is_subset_of(r))
        throw DomainError("separates requires X and Y not contained in R");
    auto label = component_labels(g, r);
    std::vector<bool> hit_x, hit_y;
    int max_label = -1;
    for (auto [v, l] : label) max_label = std::max(max_label, l);
    hit_x.assign(static_cast<size_t>(max_label + 1), false);
    hit_y.assign(static_cast<size_t>(max_label + 1), false);
    for (int v : x)
        if (label.at(v) >= 0) hit_x[static_cast<size_t>(label.at(v))] = true;
    for (int v : y)
        if (label.at(v) >= 0) hit_y[static_cast<size_t>(label.at(v))] = true;
    for (size_t i = 0; i < hit_x.size(); ++i)
        if (hit_x[i] && hit_y[i]) return false;
    return true;
}

bool splits(const Graph& g, const VertexSet& r, const VertexSet& x) {
    require_vertices(g, r, "R");
    require_vertices(g, x, "X");
    if (x.is_subset_of(r))
        throw DomainError("splits requires X not contained in R");
    return splits_by_labels(component_labels(g, r), x);
}

bool is_k_connected(const Graph& g, int k) {
    if (g.vertex_count() <= k) return false;
    if (k <= 0) return true;
    if (!is_connected(g)) return false; // the empty set is already a cutset
    // No cutset with fewer than k vertices, by exhausting subsets.
    const auto& vs = g.vertices().ids();
    std::vector<int> pick;
    auto rec = [&](auto&& self, size_t from, int remaining) -> bool {
        if (remaining == 0)
            return !is_cutset_of(g, VertexSet(pick));
        for (size_t i = from; i < vs.size(); ++i) {
            pick.push_back(vs[i]);
            bool ok = self(self, i + 1, remaining - 1);
            pick.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    for (int size = 1; size < k; ++size)
        if (!rec(rec, 0, size)) return false;
    return true;
}

bool is_biconnected(const Graph& g) { return is_k_connected(g, 2); }

PairRelation pair_relation(const Graph& g, const Cutset& s, const Cutset& t) {
    require_vertices(g, s.members, "S");
    require_vertices(g, t.members, "T");
    if (s == t) throw DomainError("pair relation needs two distinct cutsets");
    if (s.k() != t.k())
        throw DomainError("pair relation needs cutsets of equal size");
    if (!is_cutset_of(g, s.members))
        throw DomainError(s.members.to_string() + " is not a cutset");
    if (!is_cutset_of(g, t.members))
        throw DomainError(t.members.to_string() + " is not a cutset");
    if (!is_k_connected(g, s.k()))
        throw DomainError("graph is not " + std::to_string(s.k()) +
                          "-connected");
    return relation_unchecked(g, s, t);
}

bool independent(const Graph& g, const Cutset& s, const Cutset& t) {
    return pair_relation(g, s, t) == PairRelation::Independent;
}

CutsetFamily verify_independent(const Graph& g, CutsetFamily family) {
    for (const Cutset& c : family.items()) {
        require_vertices(g, c.members, "cutset");
        if (!is_cutset_of(g, c.members))
            throw DomainError(c.members.to_string() + " is not a cutset");
    }
    if (!family.empty() && !is_k_connected(g, family.k()))
        throw DomainError("graph is not " + std::to_string(family.k()) +
                          "-connected");
    const auto& items = family.items();
    for (size_t i = 0; i < items.size(); ++i)
        for (size_t j = i + 1; j < items.size(); ++j)
            if (relation_unchecked(g, items[i], items[j]) !=
                PairRelation::Independent)
                throw DomainError("cutsets " + items[i].members.to_string() +
                                  " and " + items[j].members.to_string() +
                                  " are dependent");
    family.verified_ = true;
    return family;
}

CutsetFamily single_cutsets(const Graph& g) {
    if (!is_biconnected(g))
        throw DomainError("single cutsets are defined for biconnected graphs");
    CutsetFamily all = enumerate_cutsets(g, 2);
    std::vector<Cutset> singles;
    const auto& items = all.items();
    for (size_t i = 0; i < items.size(); ++i) {
        bool single = true;
        for (size_t j = 0; j < items.size() && single; ++j) {
            if (i == j) continue;
            if (relation_unchecked(g, items[i], items[j]) !=
                PairRelation::Independent)
                single = false;
        }
        if (single) singles.push_back(items[i]);
    }
    CutsetFamily out(2, std::move(singles));
    out.verified_ = true;
    return out;
}

} // namespace decomp
