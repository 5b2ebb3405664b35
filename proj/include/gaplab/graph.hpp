#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gaplab {

// Vertices are dense indices 0..n-1.
using Vertex = std::size_t;

// Unordered pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

Edge make_edge(Vertex a, Vertex b);

// Simple undirected graph. Immutable once built; edge removal returns a new
// graph. Disconnected graphs are representable.
class Graph {
public:
  Graph() = default;

  // Throws InvalidArgument on self-loops, duplicate edges or endpoints >= n.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  // Lexicographically sorted.
  std::span<const Edge> edges() const { return edges_; }

  // Sorted ascending.
  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_.at(v); }

  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool has_edge(Vertex a, Vertex b) const;

  bool operator==(const Graph& other) const { return edges_ == other.edges_ && vertex_count() == other.vertex_count(); }

private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

Graph complete_graph(std::size_t n);

// k-th power of the path v_0 - v_1 - ... - v_{n-1}: uv is an edge iff |u-v| <= k.
Graph path_power(std::size_t n, std::size_t k);

// k-th power of the cycle on n vertices: uv is an edge iff the circular
// distance min(|u-v|, n-|u-v|) is at most k.
Graph cycle_power(std::size_t n, std::size_t k);

// Copy of g without the listed edges. Every pair must be a present edge and
// appear once; otherwise throws MissingEdge / InvalidArgument.
Graph remove_edges(const Graph& g, std::span<const Edge> removals);

// Edges of the complete graph on g's vertex set that are absent from g.
std::vector<Edge> complement_edges(const Graph& g);

bool is_connected(const Graph& g);

// Vertex sets of the connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

// Subgraph induced by `vertices` (sorted); vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// Edge-list text: "n m" then m lines "u v". Blank lines and lines starting
// with '#' are skipped. Throws ParseError carrying the 1-based line number.
Graph parse_graph(std::string_view text);
Graph read_graph(std::istream& in);

// Canonical text: edges sorted lexicographically, u < v, newline-terminated.
std::string serialize_graph(const Graph& g);

} // namespace gaplab
