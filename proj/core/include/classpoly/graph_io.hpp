#ifndef CLASSPOLY_GRAPH_IO_HPP
#define CLASSPOLY_GRAPH_IO_HPP

#include <istream>
#include <string>
#include <string_view>

#include "classpoly/graph.hpp"

namespace classpoly {

// graph6: one byte n+63 (1 <= n <= 62), then the upper triangle in column
// order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, most
// significant first, each byte offset by 63, zero padded.

/// Throws ParseError (with byte offset) for bytes outside 63..126, a bad
/// length, or a truncated/overlong bit stream; non-zero padding is rejected.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// "n m" on the first line, then m lines "j k". Blank lines and lines
/// starting with '#' are ignored.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_text(std::string_view text);

}  // namespace classpoly

#endif  // CLASSPOLY_GRAPH_IO_HPP
