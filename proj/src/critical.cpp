#include "decomp/critical.hpp"

#include <algorithm>

#include "decomp/oracles.hpp"

namespace decomp {

std::string middle_kind_name(MiddleKind k) {
    switch (k) {
    case MiddleKind::Triangle: return "triangle";
    case MiddleKind::CycleOfFour: return "cycle4";
    case MiddleKind::BlockOnFour: return "block4";
    }
    return "?";
}

CriticalReport is_critical(const Graph& g, const DecompositionTree& tree,
                           bool cross_check) {
    if (g.vertex_count() < 4)
        throw DomainError("criticality needs at least 4 vertices");

    CriticalReport report;
    std::vector<int> deg2;
    for (int v : g.vertices())
        if (g.degree(v) == 2) deg2.push_back(v);
    report.degree2 = VertexSet(std::move(deg2));

    int witness = -1;
    for (size_t i = 0; i < tree.parts().size(); ++i) {
        const Part& p = tree.parts()[i];
        if (p.kind == PartKind::Unclassified)
            throw std::logic_error("criticality needs classified parts");
        bool constrained = p.kind == PartKind::Block ||
                           (p.kind == PartKind::Cycle && p.cycle_length == 3);
        if (!constrained) continue;
        if (p.interior.empty()) {
            report.empty_interior_parts.push_back(static_cast<int>(i));
        } else if (witness < 0 || p.interior.front() < witness) {
            witness = p.interior.front();
        }
    }
    report.critical = witness < 0;
    if (!report.critical) {
        report.deletable_vertex = witness;
        report.empty_interior_parts.clear();
    }

    if (cross_check && oracle_critical(g) != report.critical)
        throw std::logic_error("structural criticality disagrees with the "
                               "deletion oracle");
    return report;
}

std::vector<std::pair<Part, VertexSet>>
terminal_part_check(const Graph& g, const DecompositionTree& tree) {
    if (!is_critical(g, tree).critical)
        throw DomainError("terminal part law applies to critical graphs");
    std::vector<std::pair<Part, VertexSet>> out;
    if (tree.cutsets().empty()) return out; // single part, no terminals
    for (size_t pi = 0; pi < tree.parts().size(); ++pi) {
        if (tree.cutsets_of_part(static_cast<int>(pi)).size() != 1) continue;
        const Part& p = tree.parts()[pi];
        int ci = tree.cutsets_of_part(static_cast<int>(pi)).front();
        const Cutset& s = tree.cutsets().items()[static_cast<size_t>(ci)];
        if (p.kind != PartKind::Cycle || p.cycle_length < 4)
            throw std::logic_error("terminal part " + p.members.to_string() +
                                   " is not a cycle of length >= 4");
        if (!(p.boundary == s.members))
            throw std::logic_error("terminal part boundary differs from its "
                                   "cutset");
        VertexSet rest = p.members - s.members;
        for (int v : rest)
            if (g.degree(v) != 2)
                throw std::logic_error("terminal vertex " + std::to_string(v) +
                                       " does not have degree 2");
        out.emplace_back(p, rest);
    }
    return out;
}

namespace {

bool fail(std::string* why, const std::string& reason) {
    if (why) *why = reason;
    return false;
}

// Chain read-off: walks the path-shaped tree from one terminal part to
// the other, filling the description. Returns false with a reason when a
// classification condition does not hold.
bool read_chain(const Graph& g, const DecompositionTree& tree,
                ChainDescription& chain, std::string* why) {
    std::vector<int> leaves;
    for (size_t pi = 0; pi < tree.parts().size(); ++pi)
        if (tree.cutsets_of_part(static_cast<int>(pi)).size() == 1)
            leaves.push_back(static_cast<int>(pi));
    for (int ci = 0; ci < tree.cutsets().size(); ++ci)
        if (tree.parts_of_cutset(ci).size() != 2)
            return fail(why, "a single cutset with more than two sides");
    if (leaves.size() != 2) return fail(why, "tree does not have exactly two leaves");

    int at = std::min(leaves[0], leaves[1]); // canonical orientation
    int via = -1;
    std::vector<int> part_path;
    std::vector<int> cut_path;
    for (;;) {
        part_path.push_back(at);
        int next_cut = -1;
        for (int ci : tree.cutsets_of_part(at))
            if (ci != via) next_cut = ci;
        if (next_cut < 0) break;
        cut_path.push_back(next_cut);
        via = next_cut;
        int next_part = -1;
        for (int pi : tree.parts_of_cutset(next_cut))
            if (pi != at) next_part = pi;
        at = next_part;
    }
    if (part_path.size() != tree.parts().size())
        return fail(why, "tree is not a path");

    auto terminal_len = [&](int pi, std::string* reason) -> int {
        const Part& p = tree.parts()[static_cast<size_t>(pi)];
        if (p.kind != PartKind::Cycle || p.cycle_length < 4) {
            if (reason) *reason = "terminal part is not a cycle of length >= 4";
            return 0;
        }
        int deg2 = 0;
        for (int v : p.members - p.boundary)
            if (g.degree(v) == 2) ++deg2;
        if (deg2 != 2 || p.interior.size() != 2) {
            if (reason)
                *reason = "terminal part does not contribute exactly two "
                          "degree-2 vertices";
            return 0;
        }
        return p.cycle_length;
    };
    std::string reason;
    chain.terminal_length_first = terminal_len(part_path.front(), &reason);
    if (!chain.terminal_length_first) return fail(why, reason);
    chain.terminal_length_last = terminal_len(part_path.back(), &reason);
    if (!chain.terminal_length_last) return fail(why, reason);

    for (size_t i = 1; i + 1 < part_path.size(); ++i) {
        const Part& p = tree.parts()[static_cast<size_t>(part_path[i])];
        if (!p.interior.empty())
            return fail(why, "middle part " + p.members.to_string() +
                                 " has a nonempty interior");
        const Cutset& left =
            tree.cutsets().items()[static_cast<size_t>(cut_path[i - 1])];
        const Cutset& right =
            tree.cutsets().items()[static_cast<size_t>(cut_path[i])];
        if (!(p.members == (left.members | right.members)))
            return fail(why, "middle part " + p.members.to_string() +
                                 " has vertices outside its two cutsets");
        if (p.kind == PartKind::Cycle && p.cycle_length == 3)
            chain.middles.push_back(MiddleKind::Triangle);
        else if (p.kind == PartKind::Cycle && p.cycle_length == 4)
            chain.middles.push_back(MiddleKind::CycleOfFour);
        else if (p.kind == PartKind::Block && p.members.size() == 4)
            chain.middles.push_back(MiddleKind::BlockOnFour);
        else
            return fail(why, "middle part " + p.members.to_string() +
                                 " is not a triangle, 4-cycle or 4-vertex "
                                 "block");
    }
    for (int pi : part_path)
        chain.part_sequence.push_back(
            tree.parts()[static_cast<size_t>(pi)].members);
    for (int ci : cut_path)
        chain.cutset_sequence.push_back(
            tree.cutsets().items()[static_cast<size_t>(ci)].members);
    return true;
}

} // namespace

std::optional<ChainDescription>
classify_exactly_four(const Graph& g, const DecompositionTree& tree,
                      std::string* why) {
    CriticalReport report = is_critical(g, tree);
    if (!report.critical)
        throw DomainError("chain classification applies to critical graphs");
    if (report.degree2.size() != 4)
        throw DomainError("chain classification needs exactly four degree-2 "
                          "vertices, found " +
                          std::to_string(report.degree2.size()));

    ChainDescription chain;
    if (tree.cutsets().empty()) {
        const Part& p = tree.parts().front();
        if (p.kind != PartKind::Cycle || p.cycle_length != 4) {
            fail(why, "single part is not a 4-cycle");
            return std::nullopt;
        }
        chain.degenerate_cycle = true;
        chain.terminal_length_first = chain.terminal_length_last = 4;
        chain.part_sequence.push_back(p.members);
        return chain;
    }
    if (!read_chain(g, tree, chain, why)) return std::nullopt;
    return chain;
}

Graph generate_critical_chain(const std::vector<MiddleKind>& middles,
                              std::pair<int, int> terminal_lengths) {
    auto [len_first, len_last] = terminal_lengths;
    if (len_first < 4 || len_last < 4)
        throw DomainError("terminal cycle lengths must be at least 4");

    std::vector<Edge> edges;
    int next_id = 0;
    auto fresh = [&] { return next_id++; };

    // First cutset, joined by a real edge; the first terminal cycle hangs
    // off it as a path through fresh interior vertices.
    int a = fresh(), b = fresh();
    edges.emplace_back(a, b);
    int prev = a;
    for (int i = 0; i < len_first - 2; ++i) {
        int t = fresh();
        edges.emplace_back(prev, t);
        prev = t;
    }
    edges.emplace_back(prev, b);

    // Middle parts between consecutive cutsets {a,b} -> {c,d} (or {b,c}
    // for triangles, which share a vertex).
    for (MiddleKind kind : middles) {
        switch (kind) {
        case MiddleKind::Triangle: {
            int c = fresh();
            edges.emplace_back(b, c); // next cutset {b,c}
            edges.emplace_back(a, c); // the triangle's real side
            a = b;
            b = c;
            break;
        }
        case MiddleKind::CycleOfFour: {
            int c = fresh(), d = fresh();
            edges.emplace_back(c, d); // next cutset {c,d}
            edges.emplace_back(b, c); // 4-cycle a-b-c-d-a
            edges.emplace_back(a, d);
            a = c;
            b = d;
            break;
        }
        case MiddleKind::BlockOnFour: {
            int c = fresh(), d = fresh();
            edges.emplace_back(c, d);
            edges.emplace_back(a, c);
            edges.emplace_back(a, d);
            edges.emplace_back(b, c);
            edges.emplace_back(b, d);
            a = c;
            b = d;
            break;
        }
        }
    }

    // Last terminal cycle on the final cutset {a,b}.
    prev = a;
    for (int i = 0; i < len_last - 2; ++i) {
        int t = fresh();
        edges.emplace_back(prev, t);
        prev = t;
    }
    edges.emplace_back(prev, b);

    return Graph::from_edges(edges);
}

} // namespace decomp
