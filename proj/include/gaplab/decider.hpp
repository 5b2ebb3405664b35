#pragma once

#include "gaplab/graph.hpp"
#include "gaplab/labelling.hpp"

#include <cstddef>
#include <optional>

namespace gaplab {

struct DecisionResult {
  bool labelable = false;
  // Present iff labelable; always passes is_gap_labelling.
  std::optional<Labelling> witness;
  // Partial assignments (vertex placements) explored.
  unsigned long long assignments_tried = 0;
};

struct DecideOptions {
  // Search fan-out over placements of the largest mark. Decisions do not depend
  // on it; the counter and the witness may.
  std::size_t workers = 1;
  // Cap on assignments_tried; exceeding it throws SearchBudgetExceeded.
  std::optional<unsigned long long> budget;
  // Restrict the largest mark to one vertex per automorphism orbit.
  bool use_symmetry = true;
};

// Decides gap-vertex-labelability by trying every assignment of the shifted
// Erdos-Turan marks a_i + 2p^2 (p = next_prime(n)) to the vertices. Complete:
// any gap-vertex-labelling can be made injective and then moved onto the marks
// in the same order. Throws UnsupportedInput for disconnected graphs or n < 2.
DecisionResult decide(const Graph& g, const DecideOptions& options = {});

// Least k <= k_max such that some labelling with values in {1..k} (repeats
// allowed) is a gap-vertex-labelling, or std::nullopt if none exists up to
// k_max. `budget` caps the assignments explored across all k.
std::optional<std::size_t> vertex_gap_number(const Graph& g, std::size_t k_max,
                                             std::optional<unsigned long long> budget = std::nullopt);

} // namespace gaplab
