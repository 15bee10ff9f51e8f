#include "decomp/planarity.hpp"

#include <algorithm>
#include <set>

namespace decomp {

Graph k5() {
    std::vector<Edge> es;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) es.emplace_back(u, v);
    return Graph::from_edges(es);
}

Graph k33() {
    std::vector<Edge> es;
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) es.emplace_back(u, v);
    return Graph::from_edges(es);
}

Graph SubdivisionWitness::subgraph() const {
    std::set<int> vs;
    std::set<Edge> es;
    for (auto [mv, hv] : main_map) vs.insert(hv);
    for (auto [mu, mv] : model.edges()) {
        auto it = detours.find({mu, mv});
        if (it == detours.end()) {
            es.insert(make_edge(main_map.at(mu), main_map.at(mv)));
        } else {
            const auto& path = it->second;
            for (size_t i = 0; i + 1 < path.size(); ++i) {
                vs.insert(path[i]);
                vs.insert(path[i + 1]);
                es.insert(make_edge(path[i], path[i + 1]));
            }
        }
    }
    return Graph(VertexSet(std::vector<int>(vs.begin(), vs.end())),
                 std::vector<Edge>(es.begin(), es.end()));
}

bool verify_subdivision(const Graph& host, const SubdivisionWitness& w) {
    // Injective main map into the host.
    std::set<int> images;
    for (int mv : w.model.vertices()) {
        auto it = w.main_map.find(mv);
        if (it == w.main_map.end()) return false;
        if (!host.has_vertex(it->second)) return false;
        if (!images.insert(it->second).second) return false;
    }
    std::set<int> internals_seen;
    for (auto [mu, mv] : w.model.edges()) {
        int a = w.main_map.at(mu), b = w.main_map.at(mv);
        auto it = w.detours.find({mu, mv});
        if (it == w.detours.end()) {
            if (!host.has_edge(a, b)) return false;
            continue;
        }
        const auto& path = it->second;
        if (path.size() < 3) return false;
        if (path.front() != a || path.back() != b) return false;
        std::set<int> on_path;
        for (size_t i = 0; i + 1 < path.size(); ++i)
            if (!host.has_edge(path[i], path[i + 1])) return false;
        for (size_t i = 1; i + 1 < path.size(); ++i) {
            int v = path[i];
            if (!on_path.insert(v).second) return false;     // path not simple
            if (images.count(v)) return false;               // hits a main
            if (!internals_seen.insert(v).second) return false; // shared interior
        }
    }
    // Every detour key must be a model edge (contraction gives the model
    // edge set exactly).
    for (const auto& [e, path] : w.detours) {
        (void)path;
        if (!w.model.has_edge(e.first, e.second)) return false;
    }
    return true;
}

namespace {

// Backtracking subdivision search state. Deterministic: candidates are
// scanned in ascending order, so the first witness found is canonical.
struct Search {
    const Graph& host;
    const Graph& model;
    long steps = 0;
    long step_cap;

    std::vector<int> model_vs;  // assignment order
    std::map<int, int> assign;
    std::set<int> mains;
    std::set<int> blocked; // mains + interiors in use
    std::map<Edge, std::vector<int>> paths;
    bool complete_model = false;

    Search(const Graph& h, const Graph& m, long cap)
        : host(h), model(m), step_cap(cap) {
        model_vs = m.vertices().ids();
        std::stable_sort(model_vs.begin(), model_vs.end(), [&](int x, int y) {
            return m.degree(x) > m.degree(y);
        });
        complete_model = true;
        for (int v : m.vertices())
            if (m.degree(v) != m.vertex_count() - 1) complete_model = false;
    }

    void tick() {
        if (++steps > step_cap)
            throw BudgetError("subdivision search exceeded its step budget");
    }

    bool assign_mains(size_t i) {
        if (i == model_vs.size()) return route(0);
        int mv = model_vs[static_cast<size_t>(i)];
        int need = model.degree(mv);
        for (int hv : host.vertices()) {
            tick();
            if (host.degree(hv) < need) continue;
            if (mains.count(hv)) continue;
            // Complete models are vertex-transitive here: force ascending
            // images to kill the permutation symmetry.
            if (complete_model && i > 0 && hv < assign.at(model_vs[i - 1]))
                continue;
            assign[mv] = hv;
            mains.insert(hv);
            blocked.insert(hv);
            if (assign_mains(i + 1)) return true;
            assign.erase(mv);
            mains.erase(hv);
            blocked.erase(hv);
        }
        return false;
    }

    bool route(size_t ei) {
        if (ei == model.edges().size()) return true;
        auto [mu, mv] = model.edges()[ei];
        int a = assign.at(mu), b = assign.at(mv);
        std::vector<int> path{a};
        return extend(ei, path, b);
    }

    // Depth-first extension of the current path toward `target`,
    // avoiding blocked vertices; on arrival, recurse into the next edge.
    bool extend(size_t ei, std::vector<int>& path, int target) {
        int at = path.back();
        for (int nxt : host.neighborhood(at)) {
            tick();
            if (nxt == target) {
                auto [mu, mv] = model.edges()[ei];
                if (path.size() > 1) {
                    std::vector<int> full = path;
                    full.push_back(target);
                    paths[{mu, mv}] = std::move(full);
                    if (route(ei + 1)) return true;
                    paths.erase(Edge{mu, mv});
                } else {
                    if (route(ei + 1)) return true;
                }
                continue;
            }
            if (blocked.count(nxt)) continue;
            path.push_back(nxt);
            blocked.insert(nxt);
            if (extend(ei, path, target)) return true;
            blocked.erase(nxt);
            path.pop_back();
        }
        return false;
    }
};

} // namespace

std::optional<SubdivisionWitness>
contains_subdivision(const Graph& g, const Graph& model, long step_cap) {
    if (model.vertex_count() == 0)
        throw DomainError("subdivision search needs a nonempty model");
    if (g.vertex_count() < model.vertex_count() ||
        g.edge_count() < model.edge_count())
        return std::nullopt;
    Search s(g, model, step_cap);
    if (!s.assign_mains(0)) return std::nullopt;
    SubdivisionWitness w;
    w.model = model;
    w.main_map = s.assign;
    w.detours = s.paths;
    if (!verify_subdivision(g, w))
        throw std::logic_error("subdivision search produced an invalid witness");
    return w;
}

SubdivisionWitness realize_part_subdivision(const Graph& g,
                                            const DecompositionTree& tree,
                                            const Part& a) {
    int pi = tree.find_part(a.members);
    if (pi < 0)
        throw DomainError("not a part of the tree: " + a.members.to_string());
    const Part& part = tree.parts()[static_cast<size_t>(pi)];

    Graph model = induced(augment(g, tree.cutsets()), part.members);
    SubdivisionWitness w;
    w.model = model;
    for (int v : model.vertices()) w.main_map[v] = v;

    for (auto [u, v] : model.edges()) {
        if (g.has_edge(u, v)) continue;
        // Augmented edge: its endpoints form a family cutset. Reroute
        // through the interior of a side that avoids this part.
        VertexSet pair{u, v};
        auto comps = components(erased(g, pair));
        VertexSet rest = part.members - pair;
        const VertexSet* detour_side = nullptr;
        for (const VertexSet& comp : comps) {
            if (!(rest & comp).empty()) continue; // the side holding the part
            detour_side = &comp;
            break;
        }
        if (!detour_side)
            throw std::logic_error("no decomposition side avoids part " +
                                   part.members.to_string());
        // Shortest u-v path with interior inside the chosen side.
        Graph lane = induced(g, *detour_side | pair);
        std::map<int, int> parent;
        std::vector<int> queue{u};
        parent[u] = u;
        for (size_t qi = 0; qi < queue.size() && !parent.count(v); ++qi) {
            for (int nx : lane.neighborhood(queue[qi])) {
                if (parent.count(nx)) continue;
                parent[nx] = queue[qi];
                queue.push_back(nx);
            }
        }
        if (!parent.count(v))
            throw std::logic_error("no detour path inside the chosen side");
        std::vector<int> path;
        for (int at = v; at != u; at = parent[at]) path.push_back(at);
        path.push_back(u);
        std::reverse(path.begin(), path.end());
        w.detours[{u, v}] = std::move(path);
    }
    if (!verify_subdivision(g, w))
        throw std::logic_error("part realization produced an invalid witness");
    return w;
}

bool base_planar(const Graph& g) {
    if (!is_biconnected(g))
        throw DomainError("base planarity test expects a biconnected graph");
    int v = g.vertex_count(), e = g.edge_count();
    if (v >= 3 && e > 3 * v - 6) return false;
    if (contains_subdivision(g, k5())) return false;
    if (contains_subdivision(g, k33())) return false;
    return true;
}

bool is_planar(const Graph& g, int block_size_cap) {
    DecompositionTree tree = single_cutset_tree(g);
    for (const Part& p : tree.parts()) {
        if (p.kind == PartKind::Cycle) continue;
        Graph h = induced(augment(g, tree.cutsets()), p.members);
        if (h.vertex_count() > block_size_cap)
            throw BudgetError("block part of " +
                              std::to_string(h.vertex_count()) +
                              " vertices exceeds the planarity cap of " +
                              std::to_string(block_size_cap));
        if (!base_planar(h)) return false;
    }
    return true;
}

bool is_planar_connected(const Graph& g, int block_size_cap) {
    if (!is_connected(g))
        throw DomainError("blockwise planarity needs a connected graph");
    BlockCutTree bct = block_cut_tree(g);
    for (const VertexSet& block : bct.blocks) {
        if (block.size() <= 2) continue;
        if (!is_planar(induced(g, block), block_size_cap)) return false;
    }
    return true;
}

namespace {

// Splice a path in the augmented part graph into a path in the host,
// expanding each augmented edge through its realized detour.
std::vector<int> splice(const std::vector<int>& coarse, const Graph& g,
                        const SubdivisionWitness& realization) {
    std::vector<int> fine{coarse.front()};
    for (size_t i = 0; i + 1 < coarse.size(); ++i) {
        int x = coarse[i], y = coarse[i + 1];
        auto it = realization.detours.find(make_edge(x, y));
        if (it == realization.detours.end()) {
            fine.push_back(y);
            continue;
        }
        std::vector<int> seg = it->second;
        if (seg.front() != x) std::reverse(seg.begin(), seg.end());
        fine.insert(fine.end(), seg.begin() + 1, seg.end());
    }
    (void)g;
    return fine;
}

} // namespace

std::optional<SubdivisionWitness> find_kuratowski(const Graph& g,
                                                  int block_size_cap) {
    if (!is_connected(g))
        throw DomainError("witness extraction needs a connected graph");
    BlockCutTree bct = block_cut_tree(g);
    for (const VertexSet& block : bct.blocks) {
        if (block.size() <= 2) continue;
        Graph sub = induced(g, block);
        if (is_planar(sub, block_size_cap)) continue;

        DecompositionTree tree = single_cutset_tree(sub);
        for (const Part& p : tree.parts()) {
            if (p.kind == PartKind::Cycle) continue;
            Graph h = induced(augment(sub, tree.cutsets()), p.members);
            if (base_planar(h)) continue;

            auto inner = contains_subdivision(h, k5());
            if (!inner) inner = contains_subdivision(h, k33());
            if (!inner)
                throw std::logic_error("non-planar block part without a "
                                       "Kuratowski subdivision");
            SubdivisionWitness realization =
                realize_part_subdivision(sub, tree, p);

            // Compose: expand every realized model edge of the inner
            // witness through the part realization.
            SubdivisionWitness out;
            out.model = inner->model;
            out.main_map = inner->main_map;
            for (auto [mu, mv] : inner->model.edges()) {
                std::vector<int> coarse;
                auto it = inner->detours.find({mu, mv});
                if (it == inner->detours.end())
                    coarse = {inner->main_map.at(mu), inner->main_map.at(mv)};
                else
                    coarse = it->second;
                std::vector<int> fine = splice(coarse, sub, realization);
                if (fine.size() > 2) out.detours[{mu, mv}] = std::move(fine);
            }
            if (!verify_subdivision(g, out))
                throw std::logic_error("composed Kuratowski witness failed "
                                       "verification");
            return out;
        }
        throw std::logic_error("non-planar block whose parts all test planar");
    }
    return std::nullopt;
}

} // namespace decomp
