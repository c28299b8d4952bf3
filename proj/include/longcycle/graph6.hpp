#pragma once

#include <string>
#include <string_view>

#include "longcycle/graph.hpp"

namespace longcycle {

// graph6: header byte 63+n (or '~' plus 18/36-bit extended forms), then the
// upper triangle in column-major order packed six bits per byte, each byte
// offset by 63. An optional ">>graph6<<" prefix and a trailing newline are
// tolerated. Throws ParseError carrying the offending byte offset.
Graph parse_graph6(std::string_view line);

std::string to_graph6(const Graph& g);

}  // namespace longcycle
