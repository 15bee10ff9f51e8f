#include "decomp/coloring.hpp"

#include <algorithm>
#include <set>

#include "decomp/oracles.hpp"

namespace decomp {

std::string strategy_name(ColorStrategy s) {
    switch (s) {
    case ColorStrategy::Augmented: return "augmented";
    case ColorStrategy::PartsPlusOne: return "parts+1";
    case ColorStrategy::BlocksPlusOne: return "blocks+1";
    case ColorStrategy::ListColoring: return "list";
    }
    return "?";
}

namespace {

struct LevelStep {
    int part;
    int via_cutset; // -1 at the root
};

// BFS over the tree from a root part: parts in level order, each with
// the unique cutset linking it to the previous level.
std::vector<LevelStep> level_walk(const DecompositionTree& tree, int root) {
    std::vector<LevelStep> out;
    std::vector<bool> part_seen(tree.parts().size(), false);
    std::vector<bool> cut_seen(static_cast<size_t>(tree.cutsets().size()), false);
    out.push_back({root, -1});
    part_seen[static_cast<size_t>(root)] = true;
    std::vector<int> frontier{root};
    while (!frontier.empty()) {
        std::vector<int> cuts;
        for (int pi : frontier)
            for (int ci : tree.cutsets_of_part(pi))
                if (!cut_seen[static_cast<size_t>(ci)]) {
                    cut_seen[static_cast<size_t>(ci)] = true;
                    cuts.push_back(ci);
                }
        std::sort(cuts.begin(), cuts.end());
        std::vector<int> next;
        for (int ci : cuts)
            for (int pi : tree.parts_of_cutset(ci))
                if (!part_seen[static_cast<size_t>(pi)]) {
                    part_seen[static_cast<size_t>(pi)] = true;
                    out.push_back({pi, ci});
                    next.push_back(pi);
                }
        frontier = std::move(next);
    }
    if (out.size() != tree.parts().size())
        throw std::logic_error("level walk missed tree parts");
    return out;
}

int graph_degeneracy(const Graph& g) {
    std::set<int> left(g.vertices().begin(), g.vertices().end());
    int best = 0;
    while (!left.empty()) {
        int min_v = -1, min_d = 1 << 30;
        for (int v : left) {
            int d = 0;
            for (int w : g.neighborhood(v)) d += left.count(w) ? 1 : 0;
            if (d < min_d) {
                min_d = d;
                min_v = v;
            }
        }
        best = std::max(best, min_d);
        left.erase(min_v);
    }
    return best;
}

int part_chromatic(const Graph& host, const Part& p, const char* what) {
    if (p.members.size() > kPartSizeCap)
        throw BudgetError(std::string(what) + ": part " +
                          p.members.to_string() + " exceeds the size cap of " +
                          std::to_string(kPartSizeCap));
    return oracle_chromatic(induced(host, p.members));
}

// Rename the colors of `raw` into `palette` honoring `pins` (raw color
// to target), the rest mapped onto unused palette entries ascending.
std::map<int, int> remap_colors(const std::map<int, int>& raw,
                                const std::map<int, int>& pins,
                                const std::vector<int>& palette) {
    std::set<int> raw_colors;
    for (auto [v, c] : raw) raw_colors.insert(c);
    std::set<int> taken;
    std::map<int, int> color_map;
    for (auto [from, to] : pins) {
        color_map[from] = to;
        if (!taken.insert(to).second)
            throw std::logic_error("color remap pins collide");
    }
    auto next_free = palette.begin();
    for (int c : raw_colors) {
        if (color_map.count(c)) continue;
        while (next_free != palette.end() && taken.count(*next_free)) ++next_free;
        if (next_free == palette.end())
            throw std::logic_error("color remap ran out of palette entries");
        color_map[c] = *next_free;
        taken.insert(*next_free);
    }
    std::map<int, int> out;
    for (auto [v, c] : raw) out[v] = color_map.at(c);
    return out;
}

std::vector<int> palette_without(int bound, int banned) {
    std::vector<int> p;
    for (int c = 1; c <= bound; ++c)
        if (c != banned) p.push_back(c);
    return p;
}

void apply_colors(std::map<int, int>& colors, const std::map<int, int>& add,
                  const VertexSet& pinned) {
    for (auto [v, c] : add) {
        auto it = colors.find(v);
        if (it != colors.end()) {
            if (!pinned.contains(v) || it->second != c)
                throw std::logic_error("level coloring touched an already "
                                       "colored vertex " + std::to_string(v));
        } else {
            colors[v] = c;
        }
    }
}

// Cutset endpoints (a, b) of the step, a < b; verifies that they are the
// only colored vertices of the part.
std::pair<int, int> step_pins(const DecompositionTree& tree,
                              const LevelStep& step,
                              const std::map<int, int>& colors) {
    const Cutset& s =
        tree.cutsets().items()[static_cast<size_t>(step.via_cutset)];
    if (s.members.size() != 2)
        throw std::logic_error("level coloring expects 2-cutsets");
    int a = s.members.ids()[0], b = s.members.ids()[1];
    const Part& part = tree.parts()[static_cast<size_t>(step.part)];
    for (int v : part.members) {
        bool colored = colors.count(v) > 0;
        bool in_cut = (v == a || v == b);
        if (in_cut && !colored)
            throw std::logic_error("cutset vertex uncolored at its level");
        if (!in_cut && colored)
            throw std::logic_error("part vertex colored ahead of its level");
    }
    return {a, b};
}

// Middle vertices of a cycle part from `a` around to `b`, excluding
// both; a and b are neighbors on the cycle.
std::vector<int> cycle_middle(const Graph& cycle_graph, int a, int b) {
    std::vector<int> order = cycle_order(cycle_graph);
    int n = static_cast<int>(order.size()), ia = 0;
    for (int i = 0; i < n; ++i)
        if (order[static_cast<size_t>(i)] == a) ia = i;
    int dir;
    if (order[static_cast<size_t>((ia + 1) % n)] == b)
        dir = -1; // walk the long way around so we end next to b
    else if (order[static_cast<size_t>((ia + n - 1) % n)] == b)
        dir = 1;
    else
        throw std::logic_error("cutset vertices are not cycle neighbors");
    std::vector<int> mid;
    int at = (ia + n + dir) % n;
    while (order[static_cast<size_t>(at)] != b) {
        mid.push_back(order[static_cast<size_t>(at)]);
        at = (at + n + dir) % n;
    }
    return mid;
}

void finish(const Graph& g, ColoringCertificate& cert, bool renumber) {
    if (renumber) {
        std::map<int, int> rename;
        int next = 1;
        for (auto& [v, c] : cert.assignment) {
            (void)v;
            if (!rename.count(c)) rename[c] = next++;
        }
        for (auto& [v, c] : cert.assignment) {
            (void)v;
            c = rename.at(c);
        }
    }
    if (!verify_certificate(g, cert))
        throw std::logic_error("constructed coloring failed verification");
}

} // namespace

LevelOrder level_order(const DecompositionTree& tree, const Part& root) {
    int pi = tree.find_part(root.members);
    if (pi < 0)
        throw DomainError("level order root must be a part node of the tree");
    LevelOrder out;
    out.root_part = pi;
    std::vector<int> part_level(tree.parts().size(), -1);
    std::vector<int> cut_level(static_cast<size_t>(tree.cutsets().size()), -1);
    part_level[static_cast<size_t>(pi)] = 0;
    std::vector<int> frontier{pi};
    int level = 0;
    while (!frontier.empty()) {
        std::vector<int> cuts, next;
        for (int p : frontier)
            for (int c : tree.cutsets_of_part(p))
                if (cut_level[static_cast<size_t>(c)] < 0) {
                    cut_level[static_cast<size_t>(c)] = level + 1;
                    cuts.push_back(c);
                }
        for (int c : cuts)
            for (int p : tree.parts_of_cutset(c))
                if (part_level[static_cast<size_t>(p)] < 0) {
                    part_level[static_cast<size_t>(p)] = level + 2;
                    next.push_back(p);
                }
        frontier = std::move(next);
        level += 2;
    }
    for (size_t i = 0; i < part_level.size(); ++i)
        out.level_of[TreeNode{false, static_cast<int>(i)}] = part_level[i];
    for (size_t i = 0; i < cut_level.size(); ++i)
        out.level_of[TreeNode{true, static_cast<int>(i)}] = cut_level[i];
    return out;
}

const Part& choose_root(const Graph& g, const DecompositionTree& tree,
                        ColorStrategy strategy) {
    if (tree.parts().empty()) throw DomainError("empty tree");
    Graph gaug = augment(g, tree.cutsets());
    int best = -1;
    long best_score = -1;
    for (size_t i = 0; i < tree.parts().size(); ++i) {
        const Part& p = tree.parts()[i];
        long score = 0;
        switch (strategy) {
        case ColorStrategy::Augmented:
            score = part_chromatic(gaug, p, "root choice");
            break;
        case ColorStrategy::PartsPlusOne:
            score = part_chromatic(g, p, "root choice");
            break;
        case ColorStrategy::BlocksPlusOne:
            score = p.kind == PartKind::Block
                        ? part_chromatic(g, p, "root choice") + 1
                        : 3;
            break;
        case ColorStrategy::ListColoring:
            // Degeneracy bounds the choice number from above; exact
            // values are out of reach at this point.
            score = p.kind == PartKind::Block
                        ? graph_degeneracy(induced(g, p.members)) + 3
                        : 3;
            break;
        }
        if (score > best_score) { // ties keep the canonical-smaller part
            best_score = score;
            best = static_cast<int>(i);
        }
    }
    return tree.parts()[static_cast<size_t>(best)];
}

ColoringCertificate color_augmented(const Graph& g,
                                    const DecompositionTree& tree) {
    Graph gaug = augment(g, tree.cutsets());
    int bound = 1;
    for (const Part& p : tree.parts())
        bound = std::max(bound, part_chromatic(gaug, p, "augmented coloring"));

    int root = tree.find_part(
        choose_root(g, tree, ColorStrategy::Augmented).members);
    std::vector<int> full_palette;
    for (int c = 1; c <= bound; ++c) full_palette.push_back(c);

    std::map<int, int> colors;
    for (const LevelStep& step : level_walk(tree, root)) {
        const Part& part = tree.parts()[static_cast<size_t>(step.part)];
        std::map<int, int> raw =
            oracle_optimal_coloring(induced(gaug, part.members));
        if (step.via_cutset < 0) {
            apply_colors(colors, raw, VertexSet{});
            continue;
        }
        auto [a, b] = step_pins(tree, step, colors);
        int ca = colors.at(a), cb = colors.at(b);
        if (ca == cb)
            throw std::logic_error("adjacent cutset vertices share a color "
                                   "in the augmented graph");
        if (raw.at(a) == raw.at(b))
            throw std::logic_error("part coloring merged its cutset colors");
        std::map<int, int> pins{{raw.at(a), ca}, {raw.at(b), cb}};
        apply_colors(colors, remap_colors(raw, pins, full_palette),
                     VertexSet{a, b});
    }

    ColoringCertificate cert{std::move(colors), bound, ColorStrategy::Augmented};
    // The certificate colors the augmented graph, hence the graph.
    ColoringCertificate on_aug = cert;
    if (!verify_certificate(gaug, on_aug))
        throw std::logic_error("augmented coloring is improper on the "
                               "augmented graph");
    finish(g, cert, /*renumber=*/true);
    return cert;
}

ColoringCertificate color_parts_plus_one(const Graph& g,
                                         const DecompositionTree& tree) {
    int m = 1;
    for (const Part& p : tree.parts())
        m = std::max(m, part_chromatic(g, p, "parts+1 coloring"));
    int bound = m + 1;

    int root = tree.find_part(
        choose_root(g, tree, ColorStrategy::PartsPlusOne).members);
    std::map<int, int> colors;
    for (const LevelStep& step : level_walk(tree, root)) {
        const Part& part = tree.parts()[static_cast<size_t>(step.part)];
        if (step.via_cutset < 0) {
            apply_colors(colors,
                         oracle_optimal_coloring(induced(g, part.members)),
                         VertexSet{});
            continue;
        }
        auto [a, b] = step_pins(tree, step, colors);
        int ca = colors.at(a), cb = colors.at(b);
        if (ca == cb) {
            if (g.has_edge(a, b))
                throw std::logic_error("equal colors across a real edge");
            VertexSet rest = part.members - VertexSet{a, b};
            std::map<int, int> raw = oracle_optimal_coloring(induced(g, rest));
            apply_colors(colors,
                         remap_colors(raw, {}, palette_without(bound, ca)),
                         VertexSet{});
        } else {
            VertexSet sub = part.members - VertexSet{b};
            std::map<int, int> raw = oracle_optimal_coloring(induced(g, sub));
            std::map<int, int> pins{{raw.at(a), ca}};
            apply_colors(colors,
                         remap_colors(raw, pins, palette_without(bound, cb)),
                         VertexSet{a});
        }
    }
    ColoringCertificate cert{std::move(colors), bound,
                             ColorStrategy::PartsPlusOne};
    finish(g, cert, /*renumber=*/true);
    return cert;
}

ColoringCertificate color_blocks_plus_one(const Graph& g,
                                          const DecompositionTree& tree) {
    Graph gaug = augment(g, tree.cutsets());
    int m = 0;
    for (const Part& p : tree.parts())
        if (p.kind == PartKind::Block)
            m = std::max(m, part_chromatic(g, p, "blocks+1 coloring"));
    int bound = std::max(3, m + 1);

    int root = tree.find_part(
        choose_root(g, tree, ColorStrategy::BlocksPlusOne).members);
    std::map<int, int> colors;
    for (const LevelStep& step : level_walk(tree, root)) {
        const Part& part = tree.parts()[static_cast<size_t>(step.part)];
        if (step.via_cutset < 0) {
            apply_colors(colors,
                         oracle_optimal_coloring(induced(g, part.members)),
                         VertexSet{});
            continue;
        }
        auto [a, b] = step_pins(tree, step, colors);
        int ca = colors.at(a), cb = colors.at(b);
        if (part.kind == PartKind::Block) {
            if (ca == cb) {
                VertexSet rest = part.members - VertexSet{a, b};
                std::map<int, int> raw =
                    oracle_optimal_coloring(induced(g, rest));
                apply_colors(colors,
                             remap_colors(raw, {}, palette_without(bound, ca)),
                             VertexSet{});
            } else {
                VertexSet sub = part.members - VertexSet{b};
                std::map<int, int> raw =
                    oracle_optimal_coloring(induced(g, sub));
                std::map<int, int> pins{{raw.at(a), ca}};
                apply_colors(colors,
                             remap_colors(raw, pins,
                                          palette_without(bound, cb)),
                             VertexSet{a});
            }
        } else {
            // Complete the cycle greedily with three colors: walking away
            // from b, every vertex sees at most two colored neighbors.
            Graph cyc = induced(gaug, part.members);
            for (int z : cycle_middle(cyc, a, b)) {
                std::set<int> forbidden;
                for (int w : cyc.neighborhood(z))
                    if (colors.count(w)) forbidden.insert(colors.at(w));
                int chosen = 0;
                for (int c = 1; c <= 3; ++c)
                    if (!forbidden.count(c)) {
                        chosen = c;
                        break;
                    }
                if (!chosen)
                    throw std::logic_error("greedy cycle completion ran out "
                                           "of colors");
                colors[z] = chosen;
            }
        }
    }
    ColoringCertificate cert{std::move(colors), bound,
                             ColorStrategy::BlocksPlusOne};
    finish(g, cert, /*renumber=*/true);
    return cert;
}

namespace {

std::optional<std::map<int, int>>
list_backtrack(const Graph& h, const std::map<int, std::vector<int>>& lists) {
    std::vector<int> order = h.vertices().ids();
    std::map<int, int> colors;
    auto rec = [&](auto&& self, size_t i) -> bool {
        if (i == order.size()) return true;
        int v = order[i];
        for (int c : lists.at(v)) {
            bool ok = true;
            for (int w : h.neighborhood(v))
                if (colors.count(w) && colors.at(w) == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            colors[v] = c;
            if (self(self, i + 1)) return true;
            colors.erase(v);
        }
        return false;
    };
    if (rec(rec, 0)) return colors;
    return std::nullopt;
}

} // namespace

ColoringCertificate list_color(const Graph& g, const DecompositionTree& tree,
                               const ListAssignment& lists) {
    std::map<int, std::vector<int>> norm;
    int min_list = 1 << 30;
    for (int v : g.vertices()) {
        auto it = lists.lists.find(v);
        if (it == lists.lists.end())
            throw DomainError("no color list for vertex " + std::to_string(v));
        std::vector<int> l = it->second;
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        if (l.empty())
            throw DomainError("empty color list for vertex " +
                              std::to_string(v));
        min_list = std::min(min_list, static_cast<int>(l.size()));
        norm[v] = std::move(l);
    }

    // If the lists meet the degeneracy-based sufficient bounds, the
    // construction must succeed; a failure then is a bug, otherwise the
    // caller undershot the required sizes.
    bool proxy_ok = true;
    for (const Part& p : tree.parts()) {
        int need = p.kind == PartKind::Block
                       ? graph_degeneracy(induced(g, p.members)) + 3
                       : 3;
        for (int v : p.members)
            if (static_cast<int>(norm.at(v).size()) < need) proxy_ok = false;
    }
    auto fail = [&](const std::string& where) -> void {
        if (proxy_ok)
            throw std::logic_error("list coloring construction failed at " +
                                   where);
        throw DomainError("list sizes below the construction bounds (" +
                          where + ")");
    };

    Graph gaug = augment(g, tree.cutsets());
    int root = tree.find_part(
        choose_root(g, tree, ColorStrategy::ListColoring).members);
    std::map<int, int> colors;
    for (const LevelStep& step : level_walk(tree, root)) {
        const Part& part = tree.parts()[static_cast<size_t>(step.part)];
        if (step.via_cutset < 0) {
            auto sol = list_backtrack(induced(g, part.members), norm);
            if (!sol) fail("root part " + part.members.to_string());
            apply_colors(colors, *sol, VertexSet{});
            continue;
        }
        auto [a, b] = step_pins(tree, step, colors);
        if (part.kind == PartKind::Block) {
            VertexSet rest = part.members - VertexSet{a, b};
            std::map<int, std::vector<int>> reduced;
            for (int v : rest) {
                std::vector<int> l;
                for (int c : norm.at(v))
                    if (c != colors.at(a) && c != colors.at(b)) l.push_back(c);
                if (l.empty()) fail("reduced list of vertex " + std::to_string(v));
                reduced[v] = std::move(l);
            }
            auto sol = list_backtrack(induced(g, rest), reduced);
            if (!sol) fail("block part " + part.members.to_string());
            apply_colors(colors, *sol, VertexSet{});
        } else {
            Graph cyc = induced(gaug, part.members);
            for (int z : cycle_middle(cyc, a, b)) {
                std::set<int> forbidden;
                for (int w : cyc.neighborhood(z))
                    if (colors.count(w)) forbidden.insert(colors.at(w));
                bool done = false;
                for (int c : norm.at(z))
                    if (!forbidden.count(c)) {
                        colors[z] = c;
                        done = true;
                        break;
                    }
                if (!done) fail("cycle vertex " + std::to_string(z));
            }
        }
    }
    ColoringCertificate cert{std::move(colors), min_list,
                             ColorStrategy::ListColoring};
    ListAssignment normalized;
    normalized.lists = norm;
    if (!verify_list_certificate(g, cert, normalized))
        throw std::logic_error("list coloring failed verification");
    return cert;
}

bool verify_certificate(const Graph& g, const ColoringCertificate& cert) {
    for (int v : g.vertices())
        if (!cert.assignment.count(v)) return false;
    if (cert.assignment.size() != static_cast<size_t>(g.vertex_count()))
        return false;
    for (auto [u, v] : g.edges())
        if (cert.assignment.at(u) == cert.assignment.at(v)) return false;
    if (cert.strategy != ColorStrategy::ListColoring) {
        std::set<int> used;
        for (auto [v, c] : cert.assignment) {
            if (c < 1) return false;
            used.insert(c);
        }
        if (static_cast<int>(used.size()) > cert.bound_used) return false;
    }
    return true;
}

bool verify_list_certificate(const Graph& g, const ColoringCertificate& cert,
                             const ListAssignment& lists) {
    if (!verify_certificate(g, cert)) return false;
    for (auto [v, c] : cert.assignment) {
        auto it = lists.lists.find(v);
        if (it == lists.lists.end()) return false;
        if (std::find(it->second.begin(), it->second.end(), c) ==
            it->second.end())
            return false;
    }
    return true;
}

} // namespace decomp
