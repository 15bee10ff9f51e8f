// Command-line front end: parse graphs, run the decomposition analyses,
// emit deterministic JSON (or DOT) reports.
//
// Exit codes: 0 ok, 1 parse error, 2 precondition violation, 3 budget
// exceeded, 4 internal invariant violation or failed verification.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "decomp/coloring.hpp"
#include "decomp/connectivity.hpp"
#include "decomp/critical.hpp"
#include "decomp/decomposition.hpp"
#include "decomp/errors.hpp"
#include "decomp/graph.hpp"
#include "decomp/io.hpp"
#include "decomp/oracles.hpp"
#include "decomp/planarity.hpp"
#include "decomp/serialize.hpp"

using namespace decomp;

namespace {

struct CommonOpts {
    std::string input;
    std::string format = "auto";
    bool human = false;
    bool timing = false;
};

GraphFormat parse_format(const std::string& name) {
    if (name == "auto") return GraphFormat::Auto;
    if (name == "edgelist") return GraphFormat::EdgeList;
    if (name == "dimacs") return GraphFormat::Dimacs;
    throw DomainError("unknown format \"" + name + "\"");
}

bool color_allowed() {
    if (std::getenv("NO_COLOR")) return false;
    return isatty(fileno(stdout));
}

std::string paint(const std::string& text, bool good) {
    if (!color_allowed()) return text;
    return (good ? "\033[32m" : "\033[31m") + text + "\033[0m";
}

json report_header(const std::string& command, const Graph& g) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    json in;
    in["digest"] = graph_digest(g);
    in["vertex_count"] = g.vertex_count();
    in["edge_count"] = g.edge_count();
    j["input"] = std::move(in);
    return j;
}

void emit(json j, const CommonOpts& opts,
          std::chrono::steady_clock::time_point started) {
    if (opts.timing) {
        auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
        j["timing_us"] = us;
    }
    std::cout << j.dump(2) << "\n";
}

json assignment_json(const std::map<int, int>& assignment) {
    json a = json::array();
    for (auto [v, c] : assignment) a.push_back(json::array({v, c}));
    return a;
}

json witness_json(const SubdivisionWitness& w) {
    json j;
    j["model"] = w.model.vertex_count() == 5 ? "K5" : "K3,3";
    json branch = json::array();
    for (auto [mv, hv] : w.main_map) branch.push_back(json::array({mv, hv}));
    j["branch_map"] = std::move(branch);
    json paths = json::array();
    for (const auto& [e, path] : w.detours) {
        json p;
        p["model_edge"] = json::array({e.first, e.second});
        p["path"] = json(path);
        paths.push_back(std::move(p));
    }
    j["paths"] = std::move(paths);
    json edges = json::array();
    Graph sub = w.subgraph();
    for (auto [u, v] : sub.edges()) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    return j;
}

ListAssignment parse_lists(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open \"" + path + "\"", 0);
    ListAssignment out;
    std::string line;
    int ln = 0;
    while (std::getline(f, line)) {
        ++ln;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected \"vertex: c1,c2,...\"", ln);
        int v;
        try {
            v = std::stoi(line.substr(0, colon));
        } catch (...) {
            throw ParseError("bad vertex id", ln);
        }
        if (out.lists.count(v)) throw ParseError("duplicate vertex list", ln);
        std::vector<int> colors;
        std::stringstream items(line.substr(colon + 1));
        std::string item;
        while (std::getline(items, item, ',')) {
            try {
                colors.push_back(std::stoi(item));
            } catch (...) {
                throw ParseError("bad color id \"" + item + "\"", ln);
            }
        }
        if (colors.empty()) throw ParseError("empty color list", ln);
        out.lists[v] = std::move(colors);
    }
    return out;
}

json lists_json(const ListAssignment& lists) {
    json a = json::array();
    for (const auto& [v, l] : lists.lists) {
        json entry;
        entry["vertex"] = v;
        entry["colors"] = json(l);
        a.push_back(std::move(entry));
    }
    return a;
}

int run_cutsets(const CommonOpts& opts, int k) {
    auto started = std::chrono::steady_clock::now();
    Graph g = read_graph(opts.input, parse_format(opts.format));
    CutsetFamily family = enumerate_cutsets(g, k);
    json result;
    result["k"] = k;
    json cutsets = json::array();
    for (const Cutset& c : family.items()) cutsets.push_back(to_json(c.members));
    result["cutsets"] = std::move(cutsets);

    const auto& items = family.items();
    json matrix = json::array();
    for (size_t i = 0; i < items.size(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < items.size(); ++j) {
            if (i == j) {
                row.push_back(1);
                continue;
            }
            row.push_back(independent(g, items[i], items[j]) ? 1 : 0);
        }
        matrix.push_back(std::move(row));
    }
    result["independence"] = std::move(matrix);

    if (k == 2) {
        CutsetFamily singles = single_cutsets(g);
        json sj = json::array();
        for (const Cutset& c : singles.items()) sj.push_back(to_json(c.members));
        result["single_cutsets"] = std::move(sj);
    } else {
        result["single_cutsets"] = nullptr;
    }

    if (opts.human) {
        std::cout << family.size() << " cutset(s) of size " << k << "\n";
        for (const Cutset& c : family.items())
            std::cout << "  " << c.members.to_string() << "\n";
        return 0;
    }
    json j = report_header("cutsets", g);
    j["result"] = std::move(result);
    emit(std::move(j), opts, started);
    return 0;
}

int run_tree(const CommonOpts& opts, bool dot, bool k1) {
    auto started = std::chrono::steady_clock::now();
    Graph g = read_graph(opts.input, parse_format(opts.format));
    if (k1) {
        BlockCutTree tree = block_cut_tree(g);
        if (dot) {
            std::cout << to_dot(tree);
            return 0;
        }
        json j = report_header("tree", g);
        j["result"] = to_json(tree);
        emit(std::move(j), opts, started);
        return 0;
    }
    DecompositionTree tree = single_cutset_tree(g);
    if (dot) {
        std::cout << to_dot(tree);
        return 0;
    }
    json j = report_header("tree", g);
    j["result"] = to_json(tree);
    emit(std::move(j), opts, started);
    return 0;
}

int run_color(const CommonOpts& opts, const std::string& strategy,
              const std::string& lists_path) {
    auto started = std::chrono::steady_clock::now();
    Graph g = read_graph(opts.input, parse_format(opts.format));
    DecompositionTree tree = single_cutset_tree(g);

    ColoringCertificate cert;
    json lists_payload = nullptr;
    if (strategy == "augmented") {
        cert = color_augmented(g, tree);
    } else if (strategy == "parts+1") {
        cert = color_parts_plus_one(g, tree);
    } else if (strategy == "blocks+1") {
        cert = color_blocks_plus_one(g, tree);
    } else if (strategy == "list") {
        if (lists_path.empty())
            throw DomainError("list strategy needs --lists FILE");
        ListAssignment lists = parse_lists(lists_path);
        cert = list_color(g, tree, lists);
        lists_payload = lists_json(lists);
    } else {
        throw DomainError("unknown strategy \"" + strategy + "\"");
    }

    std::set<int> used;
    for (auto [v, c] : cert.assignment) used.insert(c);
    if (opts.human) {
        std::cout << strategy_name(cert.strategy) << ": " << used.size()
                  << " color(s), bound " << cert.bound_used << "\n";
        return 0;
    }
    json result;
    result["strategy"] = strategy_name(cert.strategy);
    result["bound"] = cert.bound_used;
    result["colors_used"] = used.size();
    result["assignment"] = assignment_json(cert.assignment);
    result["lists"] = std::move(lists_payload);
    json j = report_header("color", g);
    j["result"] = std::move(result);
    emit(std::move(j), opts, started);
    return 0;
}

int run_planar(const CommonOpts& opts, int block_cap) {
    auto started = std::chrono::steady_clock::now();
    Graph g = read_graph(opts.input, parse_format(opts.format));

    bool planar = true;
    json witness = nullptr;
    for (const VertexSet& comp : components(g)) {
        Graph sub = induced(g, comp);
        if (!is_planar_connected(sub, block_cap)) {
            planar = false;
            auto w = find_kuratowski(sub, block_cap);
            if (!w)
                throw std::logic_error("non-planar component without a "
                                       "witness");
            witness = witness_json(*w);
            break;
        }
    }
    if (opts.human) {
        std::cout << paint(planar ? "planar" : "not planar", planar) << "\n";
        return 0;
    }
    json result;
    result["planar"] = planar;
    result["witness"] = std::move(witness);
    json j = report_header("planar", g);
    j["result"] = std::move(result);
    emit(std::move(j), opts, started);
    return 0;
}

int run_critical(const CommonOpts& opts, bool cross_check) {
    auto started = std::chrono::steady_clock::now();
    Graph g = read_graph(opts.input, parse_format(opts.format));
    DecompositionTree tree = single_cutset_tree(g);
    CriticalReport report = is_critical(g, tree, cross_check);

    json result;
    result["critical"] = report.critical;
    result["deletable_vertex"] =
        report.deletable_vertex ? json(*report.deletable_vertex) : json(nullptr);
    result["degree2_vertices"] = to_json(report.degree2);
    json chain = nullptr;
    if (report.critical && report.degree2.size() == 4) {
        std::string why;
        auto c = classify_exactly_four(g, tree, &why);
        if (!c)
            throw std::logic_error("chain classification failed: " + why);
        json cj;
        cj["degenerate_cycle"] = c->degenerate_cycle;
        cj["terminal_lengths"] = json::array(
            {c->terminal_length_first, c->terminal_length_last});
        json kinds = json::array();
        for (MiddleKind k : c->middles) kinds.push_back(middle_kind_name(k));
        cj["middle_kinds"] = std::move(kinds);
        json parts_seq = json::array();
        for (const VertexSet& p : c->part_sequence) parts_seq.push_back(to_json(p));
        cj["part_sequence"] = std::move(parts_seq);
        json cut_seq = json::array();
        for (const VertexSet& s : c->cutset_sequence) cut_seq.push_back(to_json(s));
        cj["cutset_sequence"] = std::move(cut_seq);
        chain = std::move(cj);
    }
    result["chain"] = std::move(chain);
    result["cross_checked"] = cross_check;

    if (opts.human) {
        std::cout << paint(report.critical ? "critical" : "not critical",
                           report.critical)
                  << ", degree-2 vertices " << report.degree2.to_string()
                  << "\n";
        return 0;
    }
    json j = report_header("critical", g);
    j["result"] = std::move(result);
    emit(std::move(j), opts, started);
    return 0;
}

int run_generate(const std::string& terminals, const std::string& middles) {
    auto comma = terminals.find(',');
    if (comma == std::string::npos)
        throw DomainError("--terminals wants \"L1,L2\"");
    int l1, l2;
    try {
        l1 = std::stoi(terminals.substr(0, comma));
        l2 = std::stoi(terminals.substr(comma + 1));
    } catch (...) {
        throw DomainError("--terminals wants \"L1,L2\"");
    }
    std::vector<MiddleKind> kinds;
    if (!middles.empty()) {
        std::stringstream items(middles);
        std::string item;
        while (std::getline(items, item, ',')) {
            if (item == "triangle")
                kinds.push_back(MiddleKind::Triangle);
            else if (item == "cycle4")
                kinds.push_back(MiddleKind::CycleOfFour);
            else if (item == "block4")
                kinds.push_back(MiddleKind::BlockOnFour);
            else
                throw DomainError("unknown middle kind \"" + item +
                                  "\" (triangle, cycle4, block4)");
        }
    }
    Graph g = generate_critical_chain(kinds, {l1, l2});
    std::cout << "# critical chain: terminals (" << l1 << "," << l2
              << "), middles [" << middles << "]\n";
    std::cout << write_edge_list(g);
    return 0;
}

int run_verify(const CommonOpts& opts, const std::string& report_path) {
    Graph g = read_graph(opts.input, parse_format(opts.format));
    std::ifstream f(report_path);
    if (!f) throw ParseError("cannot open \"" + report_path + "\"", 0);
    json report;
    try {
        report = json::parse(f);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad report JSON: ") + e.what(), 0);
    }

    bool ok = false;
    std::string kind = report.value("command", "");
    if (kind == "color") {
        const json& r = report.at("result");
        ColoringCertificate cert;
        cert.bound_used = r.at("bound").get<int>();
        std::string strategy = r.at("strategy").get<std::string>();
        cert.strategy = strategy == "augmented"   ? ColorStrategy::Augmented
                        : strategy == "parts+1"  ? ColorStrategy::PartsPlusOne
                        : strategy == "blocks+1" ? ColorStrategy::BlocksPlusOne
                                                 : ColorStrategy::ListColoring;
        for (const auto& pair : r.at("assignment"))
            cert.assignment[pair.at(0).get<int>()] = pair.at(1).get<int>();
        if (cert.strategy == ColorStrategy::ListColoring) {
            ListAssignment lists;
            for (const auto& entry : r.at("lists"))
                lists.lists[entry.at("vertex").get<int>()] =
                    entry.at("colors").get<std::vector<int>>();
            ok = verify_list_certificate(g, cert, lists);
        } else {
            ok = verify_certificate(g, cert);
        }
    } else if (kind == "planar") {
        const json& r = report.at("result");
        bool claimed = r.at("planar").get<bool>();
        bool actual = true;
        for (const VertexSet& comp : components(g))
            if (!is_planar_connected(induced(g, comp))) actual = false;
        ok = claimed == actual;
        if (ok && !claimed) {
            // Re-check the witness edge paths against the host.
            const json& w = r.at("witness");
            SubdivisionWitness sw;
            sw.model = w.at("model").get<std::string>() == "K5" ? k5() : k33();
            for (const auto& pair : w.at("branch_map"))
                sw.main_map[pair.at(0).get<int>()] = pair.at(1).get<int>();
            for (const auto& p : w.at("paths")) {
                Edge e{p.at("model_edge").at(0).get<int>(),
                       p.at("model_edge").at(1).get<int>()};
                sw.detours[e] = p.at("path").get<std::vector<int>>();
            }
            ok = verify_subdivision(g, sw);
        }
    } else {
        throw DomainError("verify supports color and planar reports, got \"" +
                          kind + "\"");
    }

    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "verify";
    j["verified"] = ok;
    std::cout << j.dump(2) << "\n";
    return ok ? 0 : 4;
}

int run_oracle(const CommonOpts& opts, const std::string& op, int k) {
    auto started = std::chrono::steady_clock::now();
    Graph g = read_graph(opts.input, parse_format(opts.format));
    json result;
    if (op == "chromatic") {
        result["chromatic_number"] = oracle_chromatic(g);
    } else if (op == "cutsets") {
        CutsetFamily family = oracle_cutsets(g, k);
        json cutsets = json::array();
        for (const Cutset& c : family.items())
            cutsets.push_back(to_json(c.members));
        result["k"] = k;
        result["cutsets"] = std::move(cutsets);
    } else if (op == "critical") {
        result["critical"] = oracle_critical(g);
    } else if (op == "choosable") {
        result["k"] = k;
        result["choosable"] = oracle_choosable(g, k);
    } else if (op == "parts") {
        CutsetFamily singles = single_cutsets(g);
        json parts = json::array();
        for (const Part& p : oracle_parts(g, singles)) parts.push_back(to_json(p));
        result["parts"] = std::move(parts);
    } else {
        throw DomainError("unknown oracle op \"" + op + "\"");
    }
    json j = report_header("oracle", g);
    j["result"] = std::move(result);
    emit(std::move(j), opts, started);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"decomposition trees of biconnected graphs by independent "
                 "cutsets: parts, planarity, coloring bounds, critical "
                 "graphs"};
    app.require_subcommand(1);

    CommonOpts opts;
    auto add_common = [&](CLI::App* cmd, bool with_input = true) {
        if (with_input)
            cmd->add_option("input", opts.input,
                            "graph file (edge list or DIMACS), -, for stdin")
                ->required();
        cmd->add_option("--format", opts.format, "auto|edgelist|dimacs");
        cmd->add_flag("--human", opts.human, "human-readable summary");
        cmd->add_flag("--timing", opts.timing, "include timing in the report");
    };

    int k_cutsets = 2;
    auto* cmd_cutsets = app.add_subcommand(
        "cutsets", "cutsets, their independence matrix, single cutsets");
    add_common(cmd_cutsets);
    cmd_cutsets->add_option("-k", k_cutsets, "cutset size (1 or 2)");

    bool dot = false, k1 = false;
    auto* cmd_tree =
        app.add_subcommand("tree", "decomposition tree with classified parts");
    add_common(cmd_tree);
    cmd_tree->add_flag("--dot", dot, "DOT output");
    cmd_tree->add_flag("--k1", k1, "block-cut tree instead");

    std::string strategy = "blocks+1", lists_path;
    auto* cmd_color = app.add_subcommand("color", "constructive coloring");
    add_common(cmd_color);
    cmd_color->add_option("--strategy", strategy,
                          "augmented|parts+1|blocks+1|list");
    cmd_color->add_option("--lists", lists_path,
                          "color list file (vertex: c1,c2,... per line)");

    int block_cap = kDefaultBlockSizeCap;
    auto* cmd_planar = app.add_subcommand("planar", "planarity with witness");
    add_common(cmd_planar);
    cmd_planar->add_option("--block-cap", block_cap,
                           "largest block the search will take");

    bool cross_check = false;
    auto* cmd_critical =
        app.add_subcommand("critical", "critical biconnected recognition");
    add_common(cmd_critical);
    cmd_critical->add_flag("--cross-check", cross_check,
                           "also run the deletion oracle");

    std::string terminals = "4,4", middles;
    auto* cmd_generate =
        app.add_subcommand("generate", "emit a critical chain as an edge list");
    cmd_generate->add_option("--terminals", terminals,
                             "terminal cycle lengths L1,L2");
    cmd_generate->add_option("--middles", middles,
                             "comma list of triangle|cycle4|block4");

    std::string report_path;
    auto* cmd_verify =
        app.add_subcommand("verify", "re-check an emitted report");
    add_common(cmd_verify);
    cmd_verify->add_option("report", report_path, "report JSON file")
        ->required();

    std::string oracle_op = "chromatic";
    int oracle_k = 2;
    auto* cmd_oracle = app.add_subcommand("oracle", "debug oracles");
    cmd_oracle->group(""); // hidden
    add_common(cmd_oracle);
    cmd_oracle->add_option("--op", oracle_op,
                           "chromatic|cutsets|critical|choosable|parts");
    cmd_oracle->add_option("-k", oracle_k, "k for cutsets/choosable");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (cmd_cutsets->parsed()) return run_cutsets(opts, k_cutsets);
        if (cmd_tree->parsed()) return run_tree(opts, dot, k1);
        if (cmd_color->parsed()) return run_color(opts, strategy, lists_path);
        if (cmd_planar->parsed()) return run_planar(opts, block_cap);
        if (cmd_critical->parsed()) return run_critical(opts, cross_check);
        if (cmd_generate->parsed()) return run_generate(terminals, middles);
        if (cmd_verify->parsed()) return run_verify(opts, report_path);
        if (cmd_oracle->parsed()) return run_oracle(opts, oracle_op, oracle_k);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 3;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
