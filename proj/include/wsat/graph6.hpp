#pragma once

#include <string>
#include <string_view>

#include "wsat/graph.hpp"

namespace wsat {

/// Decode a graph6 string (standard nauty format). Orders up to 62 use the
/// single-byte size prefix, 63..258047 the '~' three-byte prefix. Malformed
/// input raises ParseError naming the byte offset.
LabeledGraph parse_graph6(std::string_view text);

/// Canonical graph6 encoding of g under its current labeling.
std::string to_graph6(const LabeledGraph& g);

} // namespace wsat
