#pragma once

#include <string>

#include "bicirc/graph.hpp"

namespace bicirc {

// graph6 text format: big-endian 6-bit groups, upper-triangle column order,
// value offset 63. Decode accepts an optional ">>graph6<<" header and
// reports malformed input as ParseError with the byte offset.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& text);

// {"n": m, "edges": [[a,b], ...]}; ParseError carries the byte offset for
// syntax errors and 0 for structural ones.
std::string to_edge_list_json(const Graph& g);
Graph from_edge_list_json(const std::string& text);

}  // namespace bicirc
