#ifndef DECOMP_IO_HPP
#define DECOMP_IO_HPP

#include <iosfwd>
#include <string>

#include "decomp/graph.hpp"

namespace decomp {

enum class GraphFormat { Auto, EdgeList, Dimacs };

/// Edge-list text: one "u v" pair per line, '#' starts a comment, blank
/// lines ignored. Loops and duplicate edges are rejected with the line
/// number. The vertex set is the union of all endpoints.
Graph parse_edge_list(std::istream& in);

/// DIMACS: one "p edge n m" header, then "e u v" lines; 'c' comments.
/// Ids are 1-based and preserved as written. Strict about the declared
/// counts; rejects loops and duplicates with line numbers.
Graph parse_dimacs(std::istream& in);

/// Parse from a file path or "-" for stdin. Auto-detection: a first
/// meaningful line starting with 'p' or 'c' means DIMACS, anything else
/// is treated as an edge list.
Graph read_graph(const std::string& path, GraphFormat format = GraphFormat::Auto);

/// Canonical edge-list serialization (sorted "u v" lines).
std::string write_edge_list(const Graph& g);

/// FNV-1a digest of the canonical vertex/edge lists, for report headers.
std::string graph_digest(const Graph& g);

} // namespace decomp

#endif
