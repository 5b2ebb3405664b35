#include "gaplab/graph.hpp"

#include "gaplab/errors.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace gaplab {

Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

Graph::Graph(std::size_t n, std::vector<Edge> edges) : edges_(std::move(edges)), adjacency_(n) {
  for (auto& e : edges_) {
    if (e.u == e.v) {
      throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u >= n || e.v >= n) {
      throw InvalidArgument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InvalidArgument("duplicate edge (" + std::to_string(dup->u) + "," +
                          std::to_string(dup->v) + ")");
  }
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
  }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= vertex_count() || b >= vertex_count()) {
    return false;
  }
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

Graph complete_graph(std::size_t n) {
  if (n == 0) {
    throw InvalidArgument("complete graph needs n >= 1");
  }
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

Graph path_power(std::size_t n, std::size_t k) {
  if (n < 2) {
    throw InvalidArgument("path power needs n >= 2");
  }
  if (k < 1 || k > n - 1) {
    throw InvalidArgument("path power needs 1 <= k <= n-1");
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n && v - u <= k; ++v) {
      edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

Graph cycle_power(std::size_t n, std::size_t k) {
  if (n < 3) {
    throw InvalidArgument("cycle power needs n >= 3");
  }
  if (k < 1) {
    throw InvalidArgument("cycle power needs k >= 1");
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (std::min(v - u, n - (v - u)) <= k) {
        edges.push_back({u, v});
      }
    }
  }
  return Graph(n, std::move(edges));
}

Graph remove_edges(const Graph& g, std::span<const Edge> removals) {
  std::vector<Edge> doomed;
  doomed.reserve(removals.size());
  for (const auto& r : removals) {
    if (!g.has_edge(r.u, r.v)) {
      throw MissingEdge(r.u, r.v);
    }
    doomed.push_back(make_edge(r.u, r.v));
  }
  std::sort(doomed.begin(), doomed.end());
  auto dup = std::adjacent_find(doomed.begin(), doomed.end());
  if (dup != doomed.end()) {
    throw InvalidArgument("edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) +
                          ") listed twice for removal");
  }
  std::vector<Edge> kept;
  kept.reserve(g.edge_count() - doomed.size());
  std::set_difference(g.edges().begin(), g.edges().end(), doomed.begin(), doomed.end(),
                      std::back_inserter(kept));
  return Graph(g.vertex_count(), std::move(kept));
}

std::vector<Edge> complement_edges(const Graph& g) {
  std::vector<Edge> missing;
  const auto n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) {
        missing.push_back({u, v});
      }
    }
  }
  return missing;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> components;
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) {
      continue;
    }
    std::vector<Vertex> component;
    std::queue<Vertex> frontier;
    frontier.push(start);
    seen[start] = true;
    while (!frontier.empty()) {
      const auto v = frontier.front();
      frontier.pop();
      component.push_back(v);
      for (auto w : g.neighbours(v)) {
        if (!seen[w]) {
          seen[w] = true;
          frontier.push(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.has_edge(vertices[i], vertices[j])) {
        edges.push_back({i, j});
      }
    }
  }
  return Graph(vertices.size(), std::move(edges));
}

} // namespace gaplab
