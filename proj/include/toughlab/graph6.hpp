#pragma once

#include <string>
#include <string_view>

#include "toughlab/graph.hpp"

namespace toughlab {

// Standard graph6: order byte(s) followed by the upper triangle of the
// adjacency matrix, column by column, packed six bits per printable byte.
// A leading ">>graph6<<" header and one trailing newline are tolerated.
// Throws ParseError with the byte offset of the first bad character.
Graph parse_graph6(std::string_view line);

std::string write_graph6(const Graph& g);

}  // namespace toughlab
