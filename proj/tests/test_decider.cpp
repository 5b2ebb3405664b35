#include "gaplab/decider.hpp"
#include "gaplab/errors.hpp"
#include "gaplab/families.hpp"
#include "gaplab/transforms.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace gaplab;

namespace {

Graph permuted(const Graph& g, const std::vector<Vertex>& map) {
  std::vector<Edge> edges;
  for (auto e : g.edges()) {
    edges.push_back(make_edge(map[e.u], map[e.v]));
  }
  return Graph(g.vertex_count(), edges);
}

} // namespace

TEST_CASE("complete graphs") {
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto g = complete_graph(n);
    const auto result = decide(g);
    CHECK(result.labelable == (n <= 3));
    CHECK(result.witness.has_value() == result.labelable);
    if (result.witness) {
      CHECK(is_gap_labelling(g, *result.witness).valid);
    }
    CHECK(result.assignments_tried > 0);
  }
  CHECK(decide(path_power(5, 2)).labelable);
}

TEST_CASE("witness labels are shifted Erdos-Turan marks") {
  const auto result = decide(complete_graph(3));
  REQUIRE(result.witness);
  const auto p = next_prime(3).p;
  const auto ruler = erdos_turan_ruler(p);
  std::set<BigInt> allowed;
  for (auto mark : ruler.marks()) {
    allowed.insert(BigInt(mark + 2 * p * p));
  }
  for (const auto& label : result.witness->values()) {
    CHECK(allowed.count(label) == 1);
  }
}

TEST_CASE("preconditions of decide") {
  CHECK_THROWS_AS(decide(Graph(4, {{0, 1}, {2, 3}})), UnsupportedInput);
  CHECK_THROWS_AS(decide(Graph(1, {})), UnsupportedInput);
  DecideOptions options;
  options.budget = 3;
  CHECK_THROWS_AS(decide(path_power(8, 3), options), SearchBudgetExceeded);
}

TEST_CASE("agreement with brute force on random connected graphs") {
  std::mt19937_64 rng(31);
  int yes = 0;
  int no = 0;
  for (int round = 0; round < 400; ++round) {
    const std::size_t n = 2 + rng() % 6;
    const double density = 0.2 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
    const auto g = testing::from_pairs(n, oracle::random_connected(n, density, rng));
    const auto expected = oracle::labelable(testing::to_matrix(g)).has_value();
    const auto result = decide(g);
    CHECK(result.labelable == expected);
    if (result.witness) {
      CHECK(oracle::proper(testing::to_matrix(g), testing::small_labels(*result.witness)));
      CHECK(is_gap_labelling(g, golomb_relabel(g, distinctify(g, *result.witness))).valid);
    }
    (expected ? yes : no) += 1;
  }
  // The sample should exercise both answers.
  CHECK(yes > 30);
  CHECK(no > 30);
}

TEST_CASE("options do not change decisions") {
  std::mt19937_64 rng(32);
  for (int round = 0; round < 150; ++round) {
    const std::size_t n = 3 + rng() % 6;
    const auto g = testing::from_pairs(n, oracle::random_connected(n, 0.6, rng));
    const auto base = decide(g);

    DecideOptions plain;
    plain.use_symmetry = false;
    CHECK(decide(g, plain).labelable == base.labelable);

    DecideOptions wide;
    wide.workers = 3;
    const auto parallel = decide(g, wide);
    CHECK(parallel.labelable == base.labelable);
    if (parallel.witness) {
      CHECK(is_gap_labelling(g, *parallel.witness).valid);
    }
    // Repeated runs give the same witness.
    CHECK(decide(g, wide).witness == parallel.witness);

    std::vector<Vertex> map(n);
    std::iota(map.begin(), map.end(), 0);
    std::shuffle(map.begin(), map.end(), rng);
    CHECK(decide(permuted(g, map)).labelable == base.labelable);
  }
}

TEST_CASE("single-threaded runs are reproducible") {
  const auto g = cycle_power(9, 2);
  const auto a = decide(g);
  const auto b = decide(g);
  CHECK(a.assignments_tried == b.assignments_tried);
  CHECK(a.witness == b.witness);
}

TEST_CASE("vertex-gap numbers") {
  CHECK(vertex_gap_number(complete_graph(3), 5) == std::optional<std::size_t>{4});
  CHECK(vertex_gap_number(complete_graph(3), 3) == std::nullopt);
  CHECK(vertex_gap_number(complete_graph(2), 3) == std::optional<std::size_t>{2});
  CHECK(vertex_gap_number(path_power(4, 1), 3) == std::optional<std::size_t>{2});
  CHECK(vertex_gap_number(complete_graph(4), 6) == std::nullopt);
  for (std::size_t n = 4; n <= 6; ++n) {
    CHECK(vertex_gap_number(path_power(n, 1), 4) == std::optional<std::size_t>{2});
  }
  // All-ones on a star: the centre gets 0, every leaf gets 1.
  CHECK(vertex_gap_number(path_power(3, 1), 4) == std::optional<std::size_t>{1});
  for (std::size_t leaves = 2; leaves <= 4; ++leaves) {
    const auto star = testing::star(leaves);
    CHECK(vertex_gap_number(star, 4) == std::optional<std::size_t>{1});
    CHECK(is_gap_labelling(star, Labelling(std::vector<BigInt>(leaves + 1, 1))).valid);
  }
  CHECK(vertex_gap_number(testing::star(1), 4) == std::optional<std::size_t>{2});
  CHECK_THROWS_AS(vertex_gap_number(complete_graph(6), 6, 100), SearchBudgetExceeded);
}

TEST_CASE("vertex-gap numbers match plain enumeration") {
  std::mt19937_64 rng(33);
  for (int round = 0; round < 120; ++round) {
    const std::size_t n = 2 + rng() % 4;
    const auto g = testing::from_pairs(n, oracle::random_connected(n, 0.5, rng));
    const std::size_t k_max = 5;
    const auto got = vertex_gap_number(g, k_max);
    CHECK(got == oracle::gap_number(testing::to_matrix(g), k_max));
    if (got) {
      CHECK(vertex_gap_number(g, *got) == got);
      CHECK(vertex_gap_number(g, *got + 2) == got);
    }
  }
}

TEST_CASE("agreement with brute force at n = 8") {
  std::mt19937_64 rng(34);
  for (int round = 0; round < 40; ++round) {
    const auto g = testing::from_pairs(8, oracle::random_connected(8, 0.3 + 0.02 * round, rng));
    CHECK(decide(g).labelable == oracle::labelable(testing::to_matrix(g)).has_value());
  }
}
