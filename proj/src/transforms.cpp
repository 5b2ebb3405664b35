#include "gaplab/transforms.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace gaplab {

bool is_golomb(std::span<const std::uint64_t> marks) {
  for (std::size_t i = 1; i < marks.size(); ++i) {
    if (marks[i] <= marks[i - 1]) {
      return false;
    }
  }
  std::unordered_set<std::uint64_t> differences;
  for (std::size_t i = 0; i < marks.size(); ++i) {
    for (std::size_t j = i + 1; j < marks.size(); ++j) {
      if (!differences.insert(marks[j] - marks[i]).second) {
        return false;
      }
    }
  }
  return true;
}

GolombRuler::GolombRuler(std::vector<std::uint64_t> marks) : marks_(std::move(marks)) {
  if (!is_golomb(marks_)) {
    throw InvalidArgument("marks do not form a Golomb ruler");
  }
}

bool is_prime(std::uint64_t value) {
  if (value < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) {
      return false;
    }
  }
  return true;
}

PrimeWitness next_prime(std::uint64_t n) {
  if (n < 1) {
    throw InvalidArgument("next_prime needs n >= 1");
  }
  auto p = std::max<std::uint64_t>(n, 2);
  while (!is_prime(p)) {
    ++p;
  }
  return {p, n, 2 * n};
}

GolombRuler erdos_turan_ruler(std::uint64_t p) {
  if (!is_prime(p)) {
    throw InvalidArgument(std::to_string(p) + " is not prime");
  }
  std::vector<std::uint64_t> marks(p);
  for (std::uint64_t k = 0; k < p; ++k) {
    marks[k] = 2 * p * k + (k * k) % p;
  }
  return GolombRuler(std::move(marks));
}

std::vector<Vertex> rank_order(const Labelling& pi) {
  std::vector<Vertex> order(pi.size());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return pi[a] < pi[b]; });
  return order;
}

namespace {

void require_valid(const Graph& g, const Labelling& pi, const char* transform) {
  auto check = is_gap_labelling(g, pi);
  if (!check.valid) {
    throw InvalidLabellingError(std::string(transform) + ": input is not a gap-vertex-labelling",
                                std::move(check.report));
  }
}

void require_distinct(const Labelling& pi, const std::vector<Vertex>& order, const char* transform) {
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (pi[order[i]] == pi[order[i - 1]]) {
      throw PreconditionViolation(std::string(transform) + ": vertices " +
                                  std::to_string(order[i - 1]) + " and " +
                                  std::to_string(order[i]) +
                                  " share a label; apply distinctify first");
    }
  }
}

} // namespace

Labelling distinctify(const Graph& g, const Labelling& pi) {
  require_valid(g, pi, "distinctify");
  const auto order = rank_order(pi);
  const BigInt scale = 2 * static_cast<unsigned long long>(pi.size());
  std::vector<BigInt> labels(pi.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    labels[order[rank]] = pi[order[rank]] * scale + rank;
  }
  return Labelling(std::move(labels));
}

Labelling power_two_relabel(const Graph& g, const Labelling& pi) {
  require_valid(g, pi, "power_two_relabel");
  const auto order = rank_order(pi);
  require_distinct(pi, order, "power_two_relabel");
  std::vector<BigInt> labels(pi.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    labels[order[rank]] = pow2(static_cast<unsigned>(rank));
  }
  return Labelling(std::move(labels));
}

Labelling golomb_relabel(const Graph& g, const Labelling& pi) {
  return golomb_relabel(g, pi, next_prime(std::max<std::size_t>(pi.size(), 1)).p);
}

Labelling golomb_relabel(const Graph& g, const Labelling& pi, std::uint64_t p) {
  if (p < pi.size()) {
    throw InvalidArgument("ruler prime " + std::to_string(p) + " is smaller than n = " +
                          std::to_string(pi.size()));
  }
  require_valid(g, pi, "golomb_relabel");
  const auto order = rank_order(pi);
  require_distinct(pi, order, "golomb_relabel");
  const auto ruler = erdos_turan_ruler(p);
  const BigInt offset = BigInt(2) * p * p;
  std::vector<BigInt> labels(pi.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    labels[order[rank]] = offset + ruler.marks()[rank];
  }
  return Labelling(std::move(labels));
}

} // namespace gaplab
