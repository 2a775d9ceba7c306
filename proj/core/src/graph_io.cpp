#include "classpoly/graph_io.hpp"

#include <sstream>
#include <vector>

#include "classpoly/errors.hpp"

namespace classpoly {

namespace {

constexpr int kOffset = 63;

std::size_t body_bytes(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", i);
  }
  const int n = static_cast<unsigned char>(text[0]) - kOffset;
  if (n == kOffset) throw ParseError("multi-byte graph6 length (n > 62) is not supported", 0);
  if (n == 0) throw ParseError("graph6 encodes the empty graph; at least one vertex is required", 0);

  const std::size_t want = body_bytes(n);
  if (text.size() - 1 < want) throw ParseError("truncated graph6 bit stream", text.size());
  if (text.size() - 1 > want) throw ParseError("trailing bytes after graph6 bit stream", 1 + want);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - kOffset;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  if (want > 0 && k % 6 != 0) {
    const int last = static_cast<unsigned char>(text[want]) - kOffset;
    if ((last & ((1 << (6 - k % 6)) - 1)) != 0) throw ParseError("non-zero graph6 padding bits", want);
  }
  return Graph::build(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1 + body_bytes(n), static_cast<char>(kOffset));
  out[0] = static_cast<char>(n + kOffset);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.adjacent(i, j)) out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
  return out;
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t offset = 0;
  auto next_line = [&](std::string& dst) {
    while (std::getline(in, dst)) {
      offset += dst.size() + 1;
      const auto first = dst.find_first_not_of(" \t\r");
      if (first == std::string::npos || dst[first] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line(line)) throw ParseError("empty edge list", 0);
  int n = 0;
  int m = 0;
  {
    std::istringstream head(line);
    if (!(head >> n >> m) || m < 0) throw ParseError("expected header 'n m'", 0);
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    if (!next_line(line)) throw ParseError("edge list ends after " + std::to_string(i) + " edges", offset);
    std::istringstream row(line);
    Edge e;
    if (!(row >> e.u >> e.v)) throw ParseError("expected 'j k' on edge line " + std::to_string(i + 1), offset);
    edges.push_back(e);
  }
  if (next_line(line)) throw ParseError("more edge lines than announced", offset);
  return Graph::build(n, edges);
}

Graph parse_edge_list_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

}  // namespace classpoly
