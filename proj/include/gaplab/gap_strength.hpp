#pragma once

#include "gaplab/graph.hpp"
#include "gaplab/labelling.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gaplab {

// Partition of V by adjacency to the extreme-labelled vertices: X sees only
// v_max, Y only v_min, I both, Z neither. `removed` lists the edges of K_n
// missing from the graph.
struct Decomposition {
  Vertex v_max = 0;
  Vertex v_min = 0;
  std::vector<Vertex> x;
  std::vector<Vertex> y;
  std::vector<Vertex> z;
  std::vector<Vertex> i;
  std::vector<Edge> removed;
};

Decomposition decompose(const Graph& g, Vertex v_max, Vertex v_min);

// One level of the recursive restricted decomposition on a complete graph of
// order `order` (v_max plus the current vertex set).
struct RestrictedIteration {
  std::size_t order = 0;
  std::size_t independent = 0; // i_j
  std::size_t rest = 0;        // x_j
  Vertex v_min = 0;
  std::vector<Vertex> i_set;
  std::vector<Vertex> x_set;
};

struct RestrictedDecompositionPlan {
  std::vector<RestrictedIteration> iterations;
  std::size_t total_removed = 0;
};

struct UpperBoundConstruction {
  std::size_t n = 0;
  Vertex v_max = 0;
  std::vector<Edge> removed;
  Labelling labelling;
  RestrictedDecompositionPlan plan;

  Graph graph() const;
};

// Removes O(n^{3/2}) edges from K_n by recursive restricted decomposition and
// labels the result with powers of two. Throws InvalidArgument for n < 4.
UpperBoundConstruction construct_upper(std::size_t n);

// Number of edges construct_upper(n) removes, without building anything.
std::size_t upper_bound_edge_count(std::size_t n);

// l'(n): 0 for n <= 3, else min over x + i = n-2 of x + C(i,2) + l'(x+1).
// Index n of the result holds l'(n), for 0 <= n <= n_max.
std::vector<std::uint64_t> restricted_lb(std::size_t n_max);

// L(n): 0 for n <= 3, else min over x + y + z + i = n-2 of
// x + y + 2z + C(i,2) + l'(x+1) + l'(y+1) + L(z).
std::vector<std::uint64_t> general_lb(std::size_t n_max);

struct DpTables {
  std::size_t n_max = 0;
  std::vector<std::uint64_t> lprime;
  std::vector<std::uint64_t> general;
  // 3/100 * n^{6/5}, rounded to 4 decimal places.
  std::vector<std::string> omega;
};

DpTables compute_tables(std::size_t n_max);

// 3/100 * n^{6/5} evaluated with 50 significant digits, rounded half-up to
// `places` decimals.
std::string omega_text(std::size_t n, unsigned places = 4);

struct BoundsReport {
  std::size_t n_max = 0;
  // First n in [4, n_max] with (10 l'(n))^2 < n^3.
  std::optional<std::size_t> restricted_violation;
  // First n in [4, n_max] with (100 L(n))^5 < 3^5 n^6.
  std::optional<std::size_t> general_violation;
  // First n in [4, n_max] with l'(n) < l'(n-1).
  std::optional<std::size_t> monotonicity_violation;

  bool ok() const { return !restricted_violation && !general_violation; }
};

// Exact integer comparisons only.
BoundsReport check_bounds(const DpTables& tables);

struct ExactStrength {
  std::size_t strength = 0;
  std::vector<Edge> removed;
  Labelling witness;
  std::size_t graphs_decided = 0;
  std::size_t duplicates_skipped = 0;
};

// Least l such that removing some l edges from K_n leaves a gap-vertex-labelable
// graph. Subsets are enumerated by size and isomorphic duplicates skipped.
// Supported for 4 <= n <= 6; UnsupportedInput otherwise.
ExactStrength exact_strength(std::size_t n);

// CSV with header "n,lprime,general,omega" and rows 4..n_max. Only "csv" is
// accepted as format; InvalidArgument otherwise.
std::string emit_tables(const DpTables& tables, std::string_view format = "csv");

// "# removed from K_n" followed by the removed edges in edge-list format.
std::string serialize_removed(std::size_t n, const std::vector<Edge>& removed);

} // namespace gaplab
