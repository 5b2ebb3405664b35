#pragma once

#include "gaplab/big_int.hpp"
#include "gaplab/graph.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gaplab {

// Vertex labelling pi: one positive label per vertex.
class Labelling {
public:
  Labelling() = default;
  // Throws InvalidArgument if any label is < 1.
  explicit Labelling(std::vector<BigInt> labels);
  Labelling(std::initializer_list<long long> labels);

  std::size_t size() const { return labels_.size(); }
  const BigInt& operator[](Vertex v) const { return labels_[v]; }
  std::span<const BigInt> values() const { return labels_; }
  const BigInt& max() const;

  bool operator==(const Labelling&) const = default;

private:
  std::vector<BigInt> labels_;
};

// Colouring induced by a labelling; colours are nonnegative.
class Colouring {
public:
  Colouring() = default;
  explicit Colouring(std::vector<BigInt> colours);
  Colouring(std::initializer_list<long long> colours);

  std::size_t size() const { return colours_.size(); }
  const BigInt& operator[](Vertex v) const { return colours_[v]; }
  std::span<const BigInt> values() const { return colours_; }

  bool operator==(const Colouring&) const = default;

private:
  std::vector<BigInt> colours_;
};

struct Conflict {
  Edge edge;
  BigInt colour;

  bool operator==(const Conflict&) const = default;
};

// Every edge whose endpoints share a colour; empty iff the colouring is proper.
struct ConflictReport {
  std::vector<Conflict> conflicts;

  bool empty() const { return conflicts.empty(); }
  std::string describe() const;
};

struct GapCheck {
  bool valid = false;
  Colouring colouring;
  ConflictReport report;
};

// Gap colouring: a vertex of degree >= 2 gets the largest minus the smallest
// neighbour label, a degree-1 vertex gets its neighbour's label.
// Throws UnsupportedInput if g has an isolated vertex and InvalidArgument if
// the labelling length differs from the vertex count.
Colouring induced_colouring(const Graph& g, const Labelling& pi);

GapCheck is_gap_labelling(const Graph& g, const Labelling& pi);

// Text forms: one "vertex label" line per vertex, or a single comma-separated
// line of labels in vertex order.
Labelling parse_labelling(std::string_view text);
std::string format_labelling(const Labelling& pi);
std::string format_labelling_csv(const Labelling& pi);
std::string format_colouring(const Colouring& c);

} // namespace gaplab
