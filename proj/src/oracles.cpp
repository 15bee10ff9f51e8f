#include "decomp/oracles.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

namespace decomp {

namespace {

using Clock = std::chrono::steady_clock;

// Bitmask view of a graph, the oracles' own representation.
struct BitGraph {
    int n = 0;
    std::vector<int> ids;            // index -> original id
    std::vector<std::uint64_t> adj;  // adj[i] over bit indices

    static BitGraph from(const Graph& g) {
        BitGraph b;
        b.ids = g.vertices().ids();
        b.n = static_cast<int>(b.ids.size());
        if (b.n > 64) throw BudgetError("oracle representation caps at 64 vertices");
        b.adj.assign(static_cast<size_t>(b.n), 0);
        for (auto [u, v] : g.edges()) {
            int iu = b.index(u), iv = b.index(v);
            b.adj[static_cast<size_t>(iu)] |= 1ULL << iv;
            b.adj[static_cast<size_t>(iv)] |= 1ULL << iu;
        }
        return b;
    }

    int index(int id) const {
        auto it = std::lower_bound(ids.begin(), ids.end(), id);
        return static_cast<int>(it - ids.begin());
    }

    std::uint64_t all() const {
        return b_n_mask(n);
    }

    static std::uint64_t b_n_mask(int n) {
        return n >= 64 ? ~0ULL : (1ULL << n) - 1;
    }

    // Vertices of `sub` reachable from its lowest bit.
    std::uint64_t reach(std::uint64_t sub) const {
        if (!sub) return 0;
        std::uint64_t seen = sub & (~sub + 1); // lowest set bit
        for (;;) {
            std::uint64_t next = seen;
            std::uint64_t frontier = seen;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= adj[static_cast<size_t>(v)] & sub;
            }
            if (next == seen) return seen;
            seen = next;
        }
    }

    bool connected(std::uint64_t sub) const {
        return sub != 0 && reach(sub) == sub;
    }

    bool biconnected(std::uint64_t sub) const {
        if (std::popcount(sub) < 3) return false;
        if (!connected(sub)) return false;
        std::uint64_t rest = sub;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (!connected(sub & ~(1ULL << v))) return false;
        }
        return true;
    }

    // Component label per bit of V \ removed, -1 inside removed.
    std::vector<int> labels(std::uint64_t removed) const {
        std::vector<int> lab(static_cast<size_t>(n), -1);
        std::uint64_t left = all() & ~removed;
        int next = 0;
        while (left) {
            std::uint64_t comp = reach(left);
            std::uint64_t bits = comp;
            while (bits) {
                int v = std::countr_zero(bits);
                bits &= bits - 1;
                lab[static_cast<size_t>(v)] = next;
            }
            left &= ~comp;
            ++next;
        }
        return lab;
    }
};

void check_deadline(const Clock::time_point& deadline, const char* what) {
    if (Clock::now() > deadline)
        throw BudgetError(std::string(what) + " exceeded its time cap");
}

// Backtracking k-colorability on the bit representation; vertices in
// static order, colors capped at one above the current maximum to kill
// color-name symmetry.
bool colorable(const BitGraph& b, int k, std::vector<int>& color) {
    std::vector<int> order(static_cast<size_t>(b.n));
    for (int i = 0; i < b.n; ++i) order[static_cast<size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return std::popcount(b.adj[static_cast<size_t>(x)]) >
               std::popcount(b.adj[static_cast<size_t>(y)]);
    });
    color.assign(static_cast<size_t>(b.n), 0);
    auto rec = [&](auto&& self, size_t pos, int used) -> bool {
        if (pos == order.size()) return true;
        int v = order[pos];
        int limit = std::min(k, used + 1);
        for (int c = 1; c <= limit; ++c) {
            bool ok = true;
            std::uint64_t nb = b.adj[static_cast<size_t>(v)];
            while (nb && ok) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                if (color[static_cast<size_t>(w)] == c) ok = false;
            }
            if (!ok) continue;
            color[static_cast<size_t>(v)] = c;
            if (self(self, pos + 1, std::max(used, c))) return true;
            color[static_cast<size_t>(v)] = 0;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

int degeneracy(const BitGraph& b) {
    std::uint64_t left = b.all();
    int best = 0;
    while (left) {
        int min_deg = 65, min_v = -1;
        std::uint64_t scan = left;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            int d = std::popcount(b.adj[static_cast<size_t>(v)] & left);
            if (d < min_deg) {
                min_deg = d;
                min_v = v;
            }
        }
        best = std::max(best, min_deg);
        left &= ~(1ULL << min_v);
    }
    return best;
}

// Proper list coloring existence, lists as color-id vectors per vertex.
bool list_colorable(const BitGraph& b,
                    const std::vector<std::vector<int>>& lists) {
    std::vector<int> color(static_cast<size_t>(b.n), -1);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == b.n) return true;
        for (int c : lists[static_cast<size_t>(v)]) {
            bool ok = true;
            std::uint64_t nb = b.adj[static_cast<size_t>(v)];
            while (nb && ok) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                if (color[static_cast<size_t>(w)] == c) ok = false;
            }
            if (!ok) continue;
            color[static_cast<size_t>(v)] = c;
            if (self(self, v + 1)) return true;
            color[static_cast<size_t>(v)] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace

std::vector<Part> oracle_parts(const Graph& g, const CutsetFamily& family,
                               const OracleBudget& budget) {
    if (g.vertex_count() > budget.max_vertices_parts)
        throw BudgetError("part oracle capped at " +
                          std::to_string(budget.max_vertices_parts) +
                          " vertices");
    BitGraph b = BitGraph::from(g);
    std::vector<std::uint64_t> cut_masks;
    std::vector<std::vector<int>> cut_labels;
    for (const Cutset& c : family.items()) {
        std::uint64_t m = 0;
        for (int v : c.members) m |= 1ULL << b.index(v);
        cut_masks.push_back(m);
        cut_labels.push_back(b.labels(m));
    }
    std::uint64_t cut_union = 0;
    for (auto m : cut_masks) cut_union |= m;

    std::vector<Part> out;
    std::uint64_t full = b.all();
    for (std::uint64_t a = 1; a <= full; ++a) {
        // Unsplit by every cutset.
        bool ok = true;
        for (size_t s = 0; s < cut_masks.size() && ok; ++s) {
            std::uint64_t outside = a & ~cut_masks[s];
            int seen = -1;
            while (outside) {
                int v = std::countr_zero(outside);
                outside &= outside - 1;
                int l = cut_labels[s][static_cast<size_t>(v)];
                if (seen < 0)
                    seen = l;
                else if (l != seen) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        // Every outside vertex separated from A by some cutset.
        std::uint64_t rest = full & ~a;
        while (rest && ok) {
            int bvert = std::countr_zero(rest);
            rest &= rest - 1;
            bool separated = false;
            for (size_t s = 0; s < cut_masks.size() && !separated; ++s) {
                if (cut_masks[s] & (1ULL << bvert)) continue; // {b} inside S
                if ((a & ~cut_masks[s]) == 0) continue;       // A inside S
                int bl = cut_labels[s][static_cast<size_t>(bvert)];
                std::uint64_t asurv = a & ~cut_masks[s];
                bool meets = false;
                while (asurv) {
                    int v = std::countr_zero(asurv);
                    asurv &= asurv - 1;
                    if (cut_labels[s][static_cast<size_t>(v)] == bl) {
                        meets = true;
                        break;
                    }
                }
                if (!meets) separated = true;
            }
            if (!separated) ok = false;
        }
        if (!ok) continue;

        Part p;
        std::vector<int> members, interior, boundary;
        std::uint64_t bits = a;
        while (bits) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            int id = b.ids[static_cast<size_t>(v)];
            members.push_back(id);
            if (cut_union & (1ULL << v))
                boundary.push_back(id);
            else
                interior.push_back(id);
        }
        p.members = VertexSet(std::move(members));
        p.interior = VertexSet(std::move(interior));
        p.boundary = VertexSet(std::move(boundary));
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [](const Part& x, const Part& y) {
        return x.members < y.members;
    });
    return out;
}

int oracle_chromatic(const Graph& g, const OracleBudget& budget) {
    if (g.vertex_count() > budget.max_vertices_chromatic)
        throw BudgetError("chromatic oracle capped at " +
                          std::to_string(budget.max_vertices_chromatic) +
                          " vertices");
    if (g.vertex_count() == 0) return 0;
    BitGraph b = BitGraph::from(g);
    std::vector<int> color;
    for (int k = 1; k <= b.n; ++k)
        if (colorable(b, k, color)) return k;
    return b.n;
}

std::map<int, int> oracle_optimal_coloring(const Graph& g,
                                           const OracleBudget& budget) {
    if (g.vertex_count() > budget.max_vertices_chromatic)
        throw BudgetError("chromatic oracle capped at " +
                          std::to_string(budget.max_vertices_chromatic) +
                          " vertices");
    std::map<int, int> out;
    if (g.vertex_count() == 0) return out;
    BitGraph b = BitGraph::from(g);
    std::vector<int> color;
    for (int k = 1; k <= b.n; ++k)
        if (colorable(b, k, color)) break;
    for (int i = 0; i < b.n; ++i)
        out[b.ids[static_cast<size_t>(i)]] = color[static_cast<size_t>(i)];
    return out;
}

bool oracle_choosable(const Graph& g, int k, const OracleBudget& budget) {
    if (k < 1) throw DomainError("choosability needs k >= 1");
    if (g.vertex_count() > budget.max_vertices_choosable)
        throw BudgetError("choosability oracle capped at " +
                          std::to_string(budget.max_vertices_choosable) +
                          " vertices");
    if (g.vertex_count() == 0) return true;
    BitGraph b = BitGraph::from(g);
    // Greedy in degeneracy order succeeds on every assignment.
    if (k >= degeneracy(b) + 1) return true;
    if (k > budget.max_list_size)
        throw BudgetError("choosability oracle capped at list size " +
                          std::to_string(budget.max_list_size));

    auto deadline = Clock::now() + budget.time_cap;
    // Enumerate list systems up to color relabeling: the list of each
    // next vertex combines colors already in use with a canonical prefix
    // of fresh ones. The constant assignment {0..k-1} comes first, so a
    // chromatic deficit fails fast.
    std::vector<std::vector<int>> lists(static_cast<size_t>(b.n));
    long counter = 0;
    auto rec = [&](auto&& self, int v, int used) -> bool {
        if (v == b.n) {
            if (++counter % 1024 == 0)
                check_deadline(deadline, "choosability oracle");
            return list_colorable(b, lists);
        }
        // t = how many fresh colors this list introduces.
        for (int t = 0; t <= k; ++t) {
            int from_old = k - t;
            if (from_old > used) continue;
            std::vector<int> base(static_cast<size_t>(t));
            for (int i = 0; i < t; ++i) base[static_cast<size_t>(i)] = used + i;
            // Choose `from_old` colors out of 0..used-1.
            std::vector<int> pick;
            auto choose = [&](auto&& chooser, int from) -> bool {
                if (static_cast<int>(pick.size()) == from_old) {
                    auto& list = lists[static_cast<size_t>(v)];
                    list = pick;
                    list.insert(list.end(), base.begin(), base.end());
                    bool ok = self(self, v + 1, used + t);
                    list.clear();
                    return ok;
                }
                for (int c = from; c < used; ++c) {
                    pick.push_back(c);
                    bool ok = chooser(chooser, c + 1);
                    pick.pop_back();
                    if (!ok) return false;
                }
                return true;
            };
            if (!choose(choose, 0)) return false;
        }
        return true;
    };
    return rec(rec, 0, 0);
}

CutsetFamily oracle_cutsets(const Graph& g, int k, const OracleBudget& budget) {
    if (k < 1 || k >= g.vertex_count())
        throw DomainError("cutset oracle needs 1 <= k < v(G)");
    double subsets = 1;
    for (int i = 0; i < k; ++i)
        subsets = subsets * (g.vertex_count() - i) / (i + 1);
    if (subsets > static_cast<double>(budget.max_subsets))
        throw BudgetError("cutset oracle subset count exceeds budget");

    BitGraph b = BitGraph::from(g);
    std::vector<Cutset> found;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == k) {
            std::uint64_t removed = 0;
            for (int i : pick) removed |= 1ULL << i;
            std::uint64_t rest = b.all() & ~removed;
            if (rest && !b.connected(rest)) {
                std::vector<int> ids;
                for (int i : pick) ids.push_back(b.ids[static_cast<size_t>(i)]);
                found.push_back({VertexSet(std::move(ids))});
            }
            return;
        }
        for (int i = from; i < b.n; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return CutsetFamily(k, std::move(found));
}

bool oracle_critical(const Graph& g, const OracleBudget& budget) {
    (void)budget;
    BitGraph b = BitGraph::from(g);
    if (b.n < 4) throw DomainError("criticality needs at least 4 vertices");
    if (!b.biconnected(b.all()))
        throw DomainError("criticality is defined for biconnected graphs");
    for (int v = 0; v < b.n; ++v)
        if (b.biconnected(b.all() & ~(1ULL << v))) return false;
    return true;
}

Graph random_biconnected(int n, double density, std::uint64_t seed) {
    if (n < 3) throw DomainError("biconnected graphs need at least 3 vertices");
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) { // inclusive
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    std::set<Edge> edges;
    int cycle_len = pick(3, n);
    for (int i = 0; i < cycle_len; ++i)
        edges.insert(make_edge(i, (i + 1) % cycle_len));
    int placed = cycle_len;
    while (placed < n) {
        int ear = pick(1, std::min(n - placed, 3));
        int a = pick(0, placed - 1);
        int bvert = pick(0, placed - 2);
        if (bvert >= a) ++bvert; // distinct endpoints
        int prev = a;
        for (int i = 0; i < ear; ++i) {
            edges.insert(make_edge(prev, placed));
            prev = placed;
            ++placed;
        }
        edges.insert(make_edge(prev, bvert));
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool coin = (rng() >> 11) * 0x1.0p-53 < density;
            if (coin) edges.insert(make_edge(u, v));
        }
    std::vector<int> vs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) vs[static_cast<size_t>(i)] = i;
    return Graph(VertexSet(std::move(vs)),
                 std::vector<Edge>(edges.begin(), edges.end()));
}

} // namespace decomp
