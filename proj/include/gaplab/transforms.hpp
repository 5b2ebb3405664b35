#pragma once

#include "gaplab/errors.hpp"
#include "gaplab/graph.hpp"
#include "gaplab/labelling.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace gaplab {

// Strictly increasing marks whose pairwise differences are all distinct.
class GolombRuler {
public:
  // Throws InvalidArgument if the marks are not increasing or repeat a difference.
  explicit GolombRuler(std::vector<std::uint64_t> marks);

  std::size_t order() const { return marks_.size(); }
  std::span<const std::uint64_t> marks() const { return marks_; }
  std::uint64_t largest_mark() const { return marks_.empty() ? 0 : marks_.back(); }

private:
  std::vector<std::uint64_t> marks_;
};

// Exhaustive O(n^2) difference check.
bool is_golomb(std::span<const std::uint64_t> marks);

struct PrimeWitness {
  std::uint64_t p = 0;
  std::uint64_t range_low = 0;
  std::uint64_t range_high = 0;
};

bool is_prime(std::uint64_t value);

// Smallest prime p >= max(n, 2); Bertrand's postulate puts it in [n, 2n].
PrimeWitness next_prime(std::uint64_t n);

// Order-p ruler with marks a_k = 2pk + (k^2 mod p), k = 0..p-1. The largest
// mark is 2p^2 - p - 1.
GolombRuler erdos_turan_ruler(std::uint64_t p);

// Raised when a transform receives a labelling that is not a gap-vertex-labelling.
class InvalidLabellingError : public PreconditionViolation {
public:
  InvalidLabellingError(const std::string& what, ConflictReport report)
      : PreconditionViolation(what), report_(std::move(report)) {}

  const ConflictReport& report() const { return report_; }

private:
  ConflictReport report_;
};

// Vertices sorted by (label, vertex index).
std::vector<Vertex> rank_order(const Labelling& pi);

// pi'(v) = pi(v) * 2n + rank(v), with ties in pi broken by vertex index.
// Output labels are distinct and the labelling stays valid.
Labelling distinctify(const Graph& g, const Labelling& pi);

// The vertex of rank i (0-based) receives 2^i. Requires distinct labels.
Labelling power_two_relabel(const Graph& g, const Labelling& pi);

// The vertex of rank i receives a_i + 2p^2, where a is the Erdos-Turan ruler
// for p = next_prime(n). Requires distinct labels. Every label is below 4p^2.
Labelling golomb_relabel(const Graph& g, const Labelling& pi);

// Same, with an explicit prime p >= n in place of next_prime(n).
Labelling golomb_relabel(const Graph& g, const Labelling& pi, std::uint64_t p);

} // namespace gaplab
