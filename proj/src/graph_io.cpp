#include "gaplab/graph.hpp"

#include "gaplab/errors.hpp"
#include "text_util.hpp"

#include <istream>
#include <iterator>
#include <set>
#include <sstream>

namespace gaplab {

Graph parse_graph(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) {
    throw ParseError(1, "missing header line \"n m\"");
  }
  const auto header = detail::split_tokens(lines.front().text, " \t");
  if (header.size() != 2) {
    throw ParseError(lines.front().number, "header must be \"n m\"");
  }
  const auto n = detail::parse_index(header[0], lines.front().number);
  const auto m = detail::parse_index(header[1], lines.front().number);
  if (lines.size() - 1 != m) {
    const auto at = lines.size() - 1 < m ? lines.back().number : lines[m + 1].number;
    throw ParseError(at, "header declares " + std::to_string(m) + " edges, found " +
                             std::to_string(lines.size() - 1));
  }

  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto tokens = detail::split_tokens(line.text, " \t");
    if (tokens.size() != 2) {
      throw ParseError(line.number, "edge line must be \"u v\"");
    }
    const auto u = detail::parse_index(tokens[0], line.number);
    const auto v = detail::parse_index(tokens[1], line.number);
    if (u >= n || v >= n) {
      throw ParseError(line.number, "vertex out of range 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (u == v) {
      throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
    }
    const auto e = make_edge(u, v);
    if (!seen.insert(e).second) {
      throw ParseError(line.number, "duplicate edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ")");
    }
    edges.push_back(e);
  }
  return Graph(n, std::move(edges));
}

Graph read_graph(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_graph(text);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) {
    out << e.u << ' ' << e.v << '\n';
  }
  return out.str();
}

} // namespace gaplab
