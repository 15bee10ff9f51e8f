#include "decomp/serialize.hpp"

#include <sstream>

namespace decomp {

std::string to_dot(const DecompositionTree& tree) {
    std::ostringstream os;
    os << "graph decomposition {\n";
    os << "  node [fontsize=10];\n";
    for (int ci = 0; ci < tree.cutsets().size(); ++ci)
        os << "  c" << ci << " [shape=box, label=\""
           << tree.cutsets().items()[static_cast<size_t>(ci)].members.to_string()
           << "\"];\n";
    for (size_t pi = 0; pi < tree.parts().size(); ++pi) {
        const Part& p = tree.parts()[pi];
        os << "  p" << pi << " [shape=ellipse, label=\""
           << p.members.to_string() << "\\n" << classification_label(p)
           << "\"];\n";
    }
    for (auto [ci, pi] : tree.edges())
        os << "  c" << ci << " -- p" << pi << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const BlockCutTree& tree) {
    std::ostringstream os;
    os << "graph blocks {\n";
    os << "  node [fontsize=10];\n";
    for (size_t ai = 0; ai < tree.cutpoints.size(); ++ai)
        os << "  a" << ai << " [shape=box, label=\"{" << tree.cutpoints[ai]
           << "}\"];\n";
    for (size_t bi = 0; bi < tree.blocks.size(); ++bi)
        os << "  b" << bi << " [shape=ellipse, label=\""
           << tree.blocks[bi].to_string() << "\"];\n";
    for (auto [ai, bi] : tree.edges)
        os << "  a" << ai << " -- b" << bi << ";\n";
    os << "}\n";
    return os.str();
}

json to_json(const VertexSet& s) { return json(s.ids()); }

json to_json(const Part& p) {
    json j;
    j["members"] = to_json(p.members);
    j["interior"] = to_json(p.interior);
    j["boundary"] = to_json(p.boundary);
    j["classification"] = classification_label(p);
    return j;
}

json to_json(const DecompositionTree& tree) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "decomposition-tree";
    json cutsets = json::array();
    for (const Cutset& c : tree.cutsets().items())
        cutsets.push_back(to_json(c.members));
    j["cutsets"] = std::move(cutsets);
    json parts = json::array();
    for (const Part& p : tree.parts()) parts.push_back(to_json(p));
    j["parts"] = std::move(parts);
    json edges = json::array();
    for (auto [ci, pi] : tree.edges()) edges.push_back(json::array({ci, pi}));
    j["edges"] = std::move(edges);
    if (tree.root())
        j["root"] = *tree.root();
    else
        j["root"] = nullptr;
    return j;
}

json to_json(const BlockCutTree& tree) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "block-cut-tree";
    j["cutpoints"] = json(tree.cutpoints);
    json blocks = json::array();
    for (const VertexSet& b : tree.blocks) blocks.push_back(to_json(b));
    j["blocks"] = std::move(blocks);
    json edges = json::array();
    for (auto [ai, bi] : tree.edges) edges.push_back(json::array({ai, bi}));
    j["edges"] = std::move(edges);
    return j;
}

} // namespace decomp
