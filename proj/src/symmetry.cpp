#include "symmetry.hpp"

#include "gaplab/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

namespace gaplab::detail {

std::vector<std::size_t> refine_partition(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<std::size_t> colour(n);
  for (Vertex v = 0; v < n; ++v) {
    colour[v] = g.degree(v);
  }
  std::size_t classes = 0;
  while (true) {
    using Signature = std::pair<std::size_t, std::vector<std::size_t>>;
    std::vector<Signature> signatures(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<std::size_t> around;
      for (auto w : g.neighbours(v)) {
        around.push_back(colour[w]);
      }
      std::sort(around.begin(), around.end());
      signatures[v] = {colour[v], std::move(around)};
    }
    auto distinct = signatures;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Vertex v = 0; v < n; ++v) {
      colour[v] = static_cast<std::size_t>(
          std::lower_bound(distinct.begin(), distinct.end(), signatures[v]) - distinct.begin());
    }
    if (distinct.size() == classes) {
      return colour;
    }
    classes = distinct.size();
  }
}

namespace {

class AutomorphismSearch {
public:
  AutomorphismSearch(const Graph& g, const std::vector<std::size_t>& cells, std::size_t limit)
      : g_(g), cells_(cells), limit_(limit), image_(g.vertex_count(), kUnmapped),
        used_(g.vertex_count(), false) {}

  // Automorphism sending `from` to `to`, std::nullopt if none exists or the
  // node limit was hit (see exhausted()).
  std::optional<std::vector<Vertex>> find(Vertex from, Vertex to) {
    order_.clear();
    order_.push_back(from);
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (v != from) {
        order_.push_back(v);
      }
    }
    std::fill(image_.begin(), image_.end(), kUnmapped);
    std::fill(used_.begin(), used_.end(), false);
    nodes_ = 0;
    exhausted_ = false;
    if (!assign(0, from, to)) {
      return std::nullopt;
    }
    return image_;
  }

  bool exhausted() const { return exhausted_; }

private:
  static constexpr Vertex kUnmapped = static_cast<Vertex>(-1);

  bool consistent(Vertex v, Vertex target) const {
    if (cells_[v] != cells_[target] || used_[target]) {
      return false;
    }
    for (Vertex u = 0; u < g_.vertex_count(); ++u) {
      if (image_[u] != kUnmapped && g_.has_edge(u, v) != g_.has_edge(image_[u], target)) {
        return false;
      }
    }
    return true;
  }

  bool assign(std::size_t depth, Vertex v, Vertex target) {
    if (++nodes_ > limit_) {
      exhausted_ = true;
      return false;
    }
    if (!consistent(v, target)) {
      return false;
    }
    image_[v] = target;
    used_[target] = true;
    if (depth + 1 == order_.size()) {
      return true;
    }
    const auto next = order_[depth + 1];
    for (Vertex candidate = 0; candidate < g_.vertex_count(); ++candidate) {
      if (assign(depth + 1, next, candidate)) {
        return true;
      }
      if (exhausted_) {
        break;
      }
    }
    image_[v] = kUnmapped;
    used_[target] = false;
    return false;
  }

  const Graph& g_;
  const std::vector<std::size_t>& cells_;
  std::size_t limit_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
};

Vertex find_root(std::vector<Vertex>& parent, Vertex v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

} // namespace

std::vector<std::vector<Vertex>> automorphism_orbits(const Graph& g, std::size_t node_limit) {
  const auto n = g.vertex_count();
  const auto cells = refine_partition(g);
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  AutomorphismSearch search(g, cells, node_limit);

  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (cells[a] != cells[b] || find_root(parent, a) == find_root(parent, b)) {
        continue;
      }
      if (auto sigma = search.find(a, b)) {
        for (Vertex v = 0; v < n; ++v) {
          const auto ra = find_root(parent, v);
          const auto rb = find_root(parent, (*sigma)[v]);
          parent[std::max(ra, rb)] = std::min(ra, rb);
        }
      }
    }
  }

  std::map<Vertex, std::vector<Vertex>> grouped;
  for (Vertex v = 0; v < n; ++v) {
    grouped[find_root(parent, v)].push_back(v);
  }
  std::vector<std::vector<Vertex>> orbits;
  for (auto& [root, members] : grouped) {
    orbits.push_back(std::move(members));
  }
  return orbits;
}

namespace {

std::string adjacency_code(const Graph& g, const std::vector<Vertex>& order) {
  const auto n = order.size();
  std::string code;
  code.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      code.push_back(g.has_edge(order[i], order[j]) ? '1' : '0');
    }
  }
  return code;
}

void enumerate_orderings(const Graph& g, std::vector<std::vector<Vertex>>& cells, std::size_t cell,
                         std::vector<Vertex>& order, std::string& best) {
  if (cell == cells.size()) {
    auto code = adjacency_code(g, order);
    if (best.empty() || code < best) {
      best = std::move(code);
    }
    return;
  }
  auto& members = cells[cell];
  std::sort(members.begin(), members.end());
  do {
    const auto mark = order.size();
    order.insert(order.end(), members.begin(), members.end());
    enumerate_orderings(g, cells, cell + 1, order, best);
    order.resize(mark);
  } while (std::next_permutation(members.begin(), members.end()));
}

} // namespace

std::string canonical_code(const Graph& g) {
  const auto n = g.vertex_count();
  if (n > 10) {
    throw UnsupportedInput("canonical_code is limited to graphs with at most 10 vertices");
  }
  const auto colour = refine_partition(g);
  std::map<std::size_t, std::vector<Vertex>> by_cell;
  for (Vertex v = 0; v < n; ++v) {
    by_cell[colour[v]].push_back(v);
  }
  std::vector<std::vector<Vertex>> cells;
  std::string prefix = std::to_string(n) + ":";
  for (auto& [c, members] : by_cell) {
    prefix += std::to_string(c) + "x" + std::to_string(members.size()) + ",";
    cells.push_back(std::move(members));
  }
  std::vector<Vertex> order;
  std::string best;
  enumerate_orderings(g, cells, 0, order, best);
  return prefix + "|" + best;
}

std::string degree_triangle_key(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<std::size_t> degrees(n);
  std::vector<std::size_t> triangles(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    degrees[v] = g.degree(v);
    const auto nbrs = g.neighbours(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (g.has_edge(nbrs[i], nbrs[j])) {
          ++triangles[v];
        }
      }
    }
  }
  std::sort(degrees.begin(), degrees.end());
  std::sort(triangles.begin(), triangles.end());
  std::string key = std::to_string(n) + "|";
  for (auto d : degrees) {
    key += std::to_string(d) + ",";
  }
  key += "|";
  for (auto t : triangles) {
    key += std::to_string(t) + ",";
  }
  return key;
}

} // namespace gaplab::detail
