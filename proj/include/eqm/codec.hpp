#pragma once

#include <string>
#include <string_view>

#include "eqm/graph.hpp"

namespace eqm {

// graph6 interchange format, bit-exact: 6-bit big-endian groups offset by 63,
// upper-triangle bits in column-major order, zero padding to a 6-bit boundary.
Graph decode_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

// Edge-list text: lines "u v" (0-based), optional first line "n <count>".
// Blank lines and lines starting with '#' are skipped. Without the header,
// n is one past the largest index mentioned.
Graph decode_edge_list(std::string_view text);
std::string encode_edge_list(const Graph& g);

}  // namespace eqm
