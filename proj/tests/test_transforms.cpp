#include "gaplab/decider.hpp"
#include "gaplab/transforms.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace gaplab;

TEST_CASE("distinctify") {
  const auto k3 = complete_graph(3);
  const auto d = distinctify(k3, {2, 1, 4});
  CHECK(d == Labelling{13, 6, 26});
  CHECK(is_gap_labelling(k3, d).valid);

  const auto p42 = path_power(4, 2);
  const auto dp = distinctify(p42, {2, 1, 4, 2});
  CHECK(is_gap_labelling(p42, dp).valid);
  // Tie between v_0 and v_3 goes to the lower index.
  CHECK(dp == Labelling{2 * 8 + 1, 1 * 8 + 0, 4 * 8 + 3, 2 * 8 + 2});

  CHECK(rank_order(Labelling{2, 1, 4, 2}) == std::vector<Vertex>{1, 0, 3, 2});

  try {
    distinctify(k3, {1, 2, 3});
    FAIL("expected a precondition violation");
  } catch (const InvalidLabellingError& e) {
    CHECK(e.report().conflicts.size() == 1);
  }
}

TEST_CASE("power-of-two relabelling") {
  const auto k3 = complete_graph(3);
  CHECK(power_two_relabel(k3, distinctify(k3, {2, 1, 4})) == Labelling{2, 1, 4});
  CHECK(power_two_relabel(complete_graph(2), {7, 3}) == Labelling{2, 1});
  CHECK_THROWS_AS(power_two_relabel(path_power(4, 2), {2, 1, 4, 2}), PreconditionViolation);

  const auto p93 = path_power(9, 3);
  std::vector<BigInt> scaled, reversed;
  for (unsigned i = 0; i < 9; ++i) {
    scaled.push_back(5 * pow2(8 - i));
    reversed.push_back(pow2(8 - i));
  }
  // Reversed powers of two are valid on P_9^3 since reversal is an automorphism.
  const auto relabelled = power_two_relabel(p93, Labelling(scaled));
  CHECK(relabelled == Labelling(reversed));
  CHECK(relabelled.max() == pow2(8));
  CHECK(is_gap_labelling(p93, relabelled).valid);
}

TEST_CASE("primes") {
  CHECK(next_prime(4).p == 5);
  CHECK(next_prime(7).p == 7);
  CHECK(next_prime(1).p == 2);
  CHECK(next_prime(2).p == 2);
  CHECK(next_prime(90).p == 97);
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    const auto w = next_prime(n);
    CHECK(is_prime(w.p));
    CHECK(w.p >= n);
    CHECK(w.p <= 2 * n);
    for (auto q = n; q < w.p; ++q) {
      CHECK_FALSE(is_prime(q));
    }
  }
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(7919));
  CHECK_FALSE(is_prime(7917));
}

TEST_CASE("Erdos-Turan rulers") {
  const auto r5 = erdos_turan_ruler(5);
  CHECK(std::vector<std::uint64_t>(r5.marks().begin(), r5.marks().end()) ==
        std::vector<std::uint64_t>{0, 11, 24, 34, 41});
  CHECK(r5.largest_mark() <= 44);
  const auto r2 = erdos_turan_ruler(2);
  CHECK(std::vector<std::uint64_t>(r2.marks().begin(), r2.marks().end()) ==
        std::vector<std::uint64_t>{0, 5});
  CHECK(erdos_turan_ruler(7).largest_mark() <= 90);
  CHECK_THROWS_AS(erdos_turan_ruler(9), InvalidArgument);

  for (std::uint64_t p = 2; p <= 97; ++p) {
    if (!is_prime(p)) {
      continue;
    }
    const auto r = erdos_turan_ruler(p);
    const std::vector<std::uint64_t> marks(r.marks().begin(), r.marks().end());
    CHECK(r.order() == p);
    CHECK(oracle::golomb(marks));
    CHECK(r.largest_mark() == 2 * p * (p - 1) + ((p - 1) * (p - 1)) % p);
    CHECK(r.largest_mark() <= 2 * p * p - p - 1);
  }

  CHECK(is_golomb(std::vector<std::uint64_t>{0, 1, 4, 6}));
  CHECK_FALSE(is_golomb(std::vector<std::uint64_t>{0, 1, 2}));
  CHECK_THROWS_AS(GolombRuler({0, 2, 4}), InvalidArgument);
  CHECK_THROWS_AS(GolombRuler({3, 1}), InvalidArgument);
}

TEST_CASE("Golomb relabelling") {
  const auto k3 = complete_graph(3);
  CHECK(golomb_relabel(k3, {2, 1, 4}, 5) == Labelling{61, 50, 74});
  CHECK(golomb_relabel(k3, {1, 2, 4}, 5) == Labelling{50, 61, 74});
  CHECK(golomb_relabel(k3, {1, 2, 4}) == Labelling{18, 25, 31});
  CHECK(is_gap_labelling(k3, golomb_relabel(k3, {2, 1, 4})).valid);
  CHECK_THROWS_AS(golomb_relabel(k3, {1, 2, 4}, 2), InvalidArgument);
  CHECK_THROWS_AS(golomb_relabel(k3, {1, 2, 4}, 4), InvalidArgument);

  const auto k2 = golomb_relabel(complete_graph(2), {7, 3});
  const auto c = induced_colouring(complete_graph(2), k2);
  CHECK(c[0] == k2[1]);
  CHECK(c[1] == k2[0]);
  CHECK(c[0] != c[1]);
}

TEST_CASE("transforms on decider witnesses of random graphs") {
  std::mt19937_64 rng(21);
  int checked = 0;
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 2 + rng() % 7;
    const auto g = testing::from_pairs(n, oracle::random_connected(n, 0.45, rng));
    const auto result = decide(g);
    if (!result.labelable) {
      continue;
    }
    ++checked;
    const auto& w = *result.witness;
    const auto d = distinctify(g, w);
    CHECK(is_gap_labelling(g, d).valid);
    const auto order = rank_order(w);
    const auto order_d = rank_order(d);
    CHECK(order == order_d);

    const auto two = power_two_relabel(g, d);
    CHECK(is_gap_labelling(g, two).valid);
    CHECK(two.max() == pow2(static_cast<unsigned>(n - 1)));

    const auto gol = golomb_relabel(g, d);
    CHECK(is_gap_labelling(g, gol).valid);
    const BigInt p = next_prime(n).p;
    CHECK(gol.max() < 4 * p * p);
    // Degree-1 colours sit above every degree >= 2 colour.
    const auto c = induced_colouring(g, gol);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (g.degree(u) == 1 && g.degree(v) >= 2) {
          CHECK(c[u] > c[v]);
        }
      }
    }
    // Rank functions: scaling the input changes nothing.
    std::vector<BigInt> scaled(d.values().begin(), d.values().end());
    for (auto& x : scaled) {
      x *= 3;
    }
    CHECK(golomb_relabel(g, Labelling(scaled)) == gol);
    CHECK(power_two_relabel(g, Labelling(scaled)) == two);
  }
  CHECK(checked > 50);
}

TEST_CASE("distinctify on labellings with ties") {
  std::mt19937_64 rng(22);
  int checked = 0;
  for (int round = 0; round < 4000 && checked < 300; ++round) {
    const std::size_t n = 2 + rng() % 7;
    const auto g = testing::from_pairs(n, oracle::random_connected(n, 0.4, rng));
    std::vector<BigInt> raw(n);
    for (auto& x : raw) {
      x = 1 + rng() % 3;
    }
    const Labelling pi(raw);
    if (!is_gap_labelling(g, pi).valid) {
      continue;
    }
    ++checked;
    const auto d = distinctify(g, pi);
    CHECK(is_gap_labelling(g, d).valid);
    CHECK(rank_order(d) == rank_order(pi));
    const auto values = d.values();
    CHECK(std::set<BigInt>(values.begin(), values.end()).size() == n);
    CHECK(is_gap_labelling(g, golomb_relabel(g, d)).valid);
  }
  CHECK(checked >= 300);
}
