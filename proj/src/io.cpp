#include "decomp/io.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace decomp {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

} // namespace

Graph parse_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        std::string body = strip_comment(line);
        if (blank(body)) continue;
        std::istringstream iss(body);
        long long u, v;
        std::string extra;
        if (!(iss >> u >> v) || (iss >> extra))
            throw ParseError("expected \"u v\"", ln);
        if (u < 0 || v < 0)
            throw ParseError("vertex ids must be nonnegative", ln);
        if (u == v)
            throw ParseError("loop edge " + std::to_string(u) + " " +
                                 std::to_string(v),
                             ln);
        Edge e = make_edge(static_cast<int>(u), static_cast<int>(v));
        if (!seen.insert(e).second)
            throw ParseError("duplicate edge " + std::to_string(u) + " " +
                                 std::to_string(v),
                             ln);
        edges.push_back(e);
    }
    return Graph::from_edges(edges);
}

Graph parse_dimacs(std::istream& in) {
    std::string line;
    int ln = 0;
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    while (std::getline(in, line)) {
        ++ln;
        if (blank(line) || line[0] == 'c') continue;
        std::istringstream iss(line);
        std::string tag;
        iss >> tag;
        if (tag == "p") {
            if (n >= 0) throw ParseError("duplicate problem line", ln);
            std::string kind;
            if (!(iss >> kind >> n >> m) || (kind != "edge" && kind != "col"))
                throw ParseError("expected \"p edge n m\"", ln);
            if (n < 0 || m < 0)
                throw ParseError("negative counts in problem line", ln);
        } else if (tag == "e") {
            if (n < 0) throw ParseError("edge before problem line", ln);
            long long u, v;
            if (!(iss >> u >> v))
                throw ParseError("expected \"e u v\"", ln);
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError("vertex id out of range 1.." +
                                     std::to_string(n),
                                 ln);
            if (u == v)
                throw ParseError("loop edge " + std::to_string(u) + " " +
                                     std::to_string(v),
                                 ln);
            Edge e = make_edge(static_cast<int>(u), static_cast<int>(v));
            if (!seen.insert(e).second)
                throw ParseError("duplicate edge " + std::to_string(u) + " " +
                                     std::to_string(v),
                                 ln);
            edges.push_back(e);
        } else {
            throw ParseError("unrecognized line type \"" + tag + "\"", ln);
        }
    }
    if (n < 0) throw ParseError("missing problem line", ln);
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("declared " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()),
                         ln);
    std::vector<int> vs(static_cast<size_t>(n));
    for (long long i = 0; i < n; ++i) vs[static_cast<size_t>(i)] = static_cast<int>(i + 1);
    return Graph(VertexSet(std::move(vs)), std::move(edges));
}

Graph read_graph(const std::string& path, GraphFormat format) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream f(path);
        if (!f) throw ParseError("cannot open \"" + path + "\"", 0);
        std::ostringstream buf;
        buf << f.rdbuf();
        text = buf.str();
    }
    if (format == GraphFormat::Auto) {
        format = GraphFormat::EdgeList;
        std::istringstream probe(text);
        std::string line;
        while (std::getline(probe, line)) {
            if (blank(line)) continue;
            char c = line[0];
            if (c == 'p' || c == 'c') format = GraphFormat::Dimacs;
            break;
        }
    }
    std::istringstream in(text);
    return format == GraphFormat::Dimacs ? parse_dimacs(in)
                                         : parse_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream os;
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

std::string graph_digest(const Graph& g) {
    std::ostringstream os;
    os << g.vertices().to_string() << ';';
    for (auto [u, v] : g.edges()) os << u << '-' << v << ',';
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : os.str()) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream hex;
    hex << "fnv1a64:" << std::hex << h;
    return hex.str();
}

} // namespace decomp
