#pragma once

#include "gaplab/graph.hpp"
#include "gaplab/labelling.hpp"
#include "oracles.hpp"

#include <string>
#include <vector>

namespace testing {

inline oracle::Matrix to_matrix(const gaplab::Graph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto e : g.edges()) {
    edges.emplace_back(e.u, e.v);
  }
  return oracle::matrix(g.vertex_count(), edges);
}

inline gaplab::Graph from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<gaplab::Edge> edges;
  for (auto [u, v] : pairs) {
    edges.push_back(gaplab::make_edge(u, v));
  }
  return gaplab::Graph(n, edges);
}

inline std::vector<long long> small_labels(const gaplab::Labelling& pi) {
  std::vector<long long> out;
  for (const auto& label : pi.values()) {
    out.push_back(label.convert_to<long long>());
  }
  return out;
}

inline std::vector<std::string> strings(std::span<const gaplab::BigInt> values) {
  std::vector<std::string> out;
  for (const auto& v : values) {
    out.push_back(v.str());
  }
  return out;
}

inline gaplab::Graph star(std::size_t leaves) {
  std::vector<gaplab::Edge> edges;
  for (std::size_t v = 1; v <= leaves; ++v) {
    edges.push_back({0, v});
  }
  return gaplab::Graph(leaves + 1, edges);
}

} // namespace testing
