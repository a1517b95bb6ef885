#pragma once

#include "sepgraph/graph.hpp"

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace sepgraph {

/// Largest order representable with the 4-byte length prefix.
inline constexpr int kGraph6MaxOrder = 258047;

/// Decodes one graph6 line. A leading ">>graph6<<" header and trailing
/// CR/LF are tolerated. Nonzero padding bits, bytes outside 63..126 and
/// trailing bytes raise ParseError with the byte offset.
Graph parse_graph6(std::string_view line);

/// Canonical graph6 encoding without header or newline.
std::string write_graph6(const Graph& g);

struct Graph6Line {
  std::size_t line_number; ///< 1-based
  Graph graph;
};

/// Reads all graphs from a stream, skipping blank lines and a standalone
/// ">>graph6<<" header line. Errors are rethrown as ParseError mentioning
/// the line number.
std::vector<Graph6Line> read_graph6_stream(std::istream& in);

} // namespace sepgraph
