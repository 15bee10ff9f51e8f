#ifndef DECOMP_SERIALIZE_HPP
#define DECOMP_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "decomp/decomposition.hpp"

namespace decomp {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// DOT export of a decomposition tree: cutset nodes as boxes, part nodes
/// as ellipses labeled with their set and classification. Output order
/// is canonical, so equal trees render byte-identically.
std::string to_dot(const DecompositionTree& tree);
std::string to_dot(const BlockCutTree& tree);

json to_json(const VertexSet& s);
json to_json(const Part& p);
json to_json(const DecompositionTree& tree);
json to_json(const BlockCutTree& tree);

} // namespace decomp

#endif
