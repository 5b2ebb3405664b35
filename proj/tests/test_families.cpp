#include "gaplab/decider.hpp"
#include "gaplab/errors.hpp"
#include "gaplab/families.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace gaplab;

namespace {

Labelling powers(std::initializer_list<unsigned> exponents) {
  std::vector<BigInt> labels;
  for (auto e : exponents) {
    labels.push_back(pow2(e));
  }
  return Labelling(std::move(labels));
}

} // namespace

TEST_CASE("family names") {
  CHECK(parse_family("complete") == Family::complete);
  CHECK(parse_family("path-power") == Family::path_power);
  CHECK(parse_family("cycle-power") == Family::cycle_power);
  CHECK_THROWS_AS(parse_family("wheel"), InvalidArgument);
  CHECK(family_name(Family::cycle_power) == "cycle-power");
  CHECK(generate({Family::path_power, 6, 3}) == path_power(6, 3));
  CHECK(generate({Family::cycle_power, 8, 2}) == cycle_power(8, 2));
  CHECK(generate({Family::complete, 5, 0}) == complete_graph(5));
}

TEST_CASE("labelability predicates") {
  CHECK(labelable_complete(1));
  CHECK(labelable_complete(2));
  CHECK(labelable_complete(3));
  CHECK_FALSE(labelable_complete(4));
  CHECK_FALSE(labelable_complete(7));

  CHECK(labelable_path_power(3, 2));
  CHECK(labelable_path_power(4, 2));
  CHECK_FALSE(labelable_path_power(4, 3));
  CHECK(labelable_path_power(8, 3));
  CHECK(labelable_path_power(9, 4));
  CHECK_FALSE(labelable_path_power(8, 4));
  CHECK_FALSE(labelable_path_power(5, 3));
  CHECK(labelable_path_power(5, 2));
  CHECK_THROWS_AS(labelable_path_power(5, 1), InvalidArgument);
  CHECK_THROWS_AS(labelable_path_power(5, 5), InvalidArgument);
  CHECK_THROWS_AS(labelable_path_power(2, 2), InvalidArgument);

  CHECK(labelable_cycle_power(6, 2));
  CHECK(labelable_cycle_power(7, 2));
  CHECK_FALSE(labelable_cycle_power(5, 2));
  CHECK(labelable_cycle_power(8, 2));
  CHECK_FALSE(labelable_cycle_power(8, 3));
  CHECK_FALSE(labelable_cycle_power(11, 3));
  CHECK(labelable_cycle_power(12, 3));
  CHECK_THROWS_AS(labelable_cycle_power(8, 4), InvalidArgument);
  CHECK_THROWS_AS(labelable_cycle_power(8, 1), InvalidArgument);
}

TEST_CASE("reference labellings and their colours") {
  CHECK(construct_complete_labelling(2) == Labelling{2, 1});
  CHECK(construct_complete_labelling(3) == Labelling{2, 1, 4});
  CHECK_THROWS_AS(construct_complete_labelling(4), DomainError);

  const auto p42 = construct_path_power_labelling(4, 2);
  CHECK(p42 == Labelling{2, 1, 4, 2});
  CHECK(induced_colouring(path_power(4, 2), p42) == Colouring{3, 2, 1, 3});
  CHECK(construct_path_power_labelling(3, 2) == Labelling{2, 1, 4});

  const auto p83 = construct_path_power_labelling(8, 3);
  CHECK(p83 == powers({0, 1, 2, 3, 4, 5, 6, 7}));
  CHECK(induced_colouring(path_power(8, 3), p83) == Colouring{6, 15, 31, 63, 126, 124, 120, 48});

  const auto p94 = construct_path_power_labelling(9, 4);
  CHECK(induced_colouring(path_power(9, 4), p94) ==
        Colouring{14, 31, 63, 127, 255, 254, 252, 248, 112});

  const auto c62 = construct_cycle_power_labelling(6, 2);
  CHECK(c62 == Labelling{1, 2, 4, 1, 2, 4});
  CHECK(induced_colouring(cycle_power(6, 2), c62) == Colouring{2, 3, 1, 2, 3, 1});

  const auto c72 = construct_cycle_power_labelling(7, 2);
  CHECK(c72 == Labelling{1, 8, 4, 4, 4, 4, 2});
  CHECK(induced_colouring(cycle_power(7, 2), c72) == Colouring{6, 3, 7, 4, 2, 3, 7});

  // v_0 sees labels 2^1, 2^2, 2^6, 2^7 (C_8^2) and 2^1, 2^2, 2^7, 2^8 (C_9^2).
  const auto c82 = construct_cycle_power_labelling(8, 2);
  CHECK(c82 == powers({0, 1, 2, 3, 8, 7, 6, 5}));
  CHECK(induced_colouring(cycle_power(8, 2), c82) == Colouring{62, 31, 255, 254, 124, 248, 255, 127});

  const auto c92 = construct_cycle_power_labelling(9, 2);
  CHECK(c92 == powers({0, 1, 2, 3, 4, 9, 8, 7, 6}));
  CHECK(induced_colouring(cycle_power(9, 2), c92) ==
        Colouring{126, 63, 15, 510, 508, 248, 496, 511, 255});

  CHECK_THROWS_AS(construct_path_power_labelling(8, 4), DomainError);
  CHECK_THROWS_AS(construct_cycle_power_labelling(8, 3), DomainError);
}

TEST_CASE("constructions verify across a wide sweep") {
  for (std::size_t n = 3; n <= 40; ++n) {
    for (std::size_t k = 2; k < n; ++k) {
      if (labelable_path_power(n, k)) {
        const auto g = path_power(n, k);
        const auto check = is_gap_labelling(g, construct_path_power_labelling(n, k));
        CHECK(check.valid);
        if (n >= 5) {
          const auto values = check.colouring.values();
          CHECK(std::set<BigInt>(values.begin(), values.end()).size() == n);
        }
      }
    }
    for (std::size_t k = 2; 2 * k < n && n >= 4; ++k) {
      if (labelable_cycle_power(n, k)) {
        CHECK(is_gap_labelling(cycle_power(n, k), construct_cycle_power_labelling(n, k)).valid);
      }
    }
  }
  for (std::size_t n = 41; n <= 200; ++n) {
    for (std::size_t k : {std::size_t{2}, std::size_t{3}, n / 4, (n - 1) / 2}) {
      if (labelable_path_power(n, k)) {
        CHECK(is_gap_labelling(path_power(n, k), construct_path_power_labelling(n, k)).valid);
      }
      if (2 * k < n && labelable_cycle_power(n, k)) {
        CHECK(is_gap_labelling(cycle_power(n, k), construct_cycle_power_labelling(n, k)).valid);
      }
    }
  }
}

TEST_CASE("refutation certificates") {
  const auto k4 = refute_witness({Family::complete, 4, 0});
  CHECK(k4.complete());
  CHECK(k4.certificates.size() == 12);

  const auto p53 = refute_witness({Family::path_power, 5, 3});
  CHECK(p53.complete());
  CHECK(p53.certificates.size() == 20);

  const auto c83 = refute_witness({Family::cycle_power, 8, 3});
  CHECK(c83.complete());
  CHECK(c83.certificates.size() == 56);

  CHECK_THROWS_AS(refute_witness({Family::cycle_power, 8, 2}), DomainError);
  CHECK_THROWS_AS(refute_witness({Family::complete, 3, 0}), DomainError);

  const auto g = complete_graph(4);
  CHECK(certificate_holds(g, {0, 1, 2, 3}));
  CHECK_FALSE(certificate_holds(path_power(4, 1), {0, 3, 1, 2}));
  CHECK_FALSE(certificate_holds(g, {0, 0, 2, 3}));
}

TEST_CASE("every non-labelable family member is refuted") {
  auto check_all = [](const FamilySpec& spec) {
    const auto g = generate(spec);
    const auto evidence = refute_witness(spec);
    CHECK(evidence.complete());
    CHECK(evidence.certificates.size() == g.vertex_count() * (g.vertex_count() - 1));
    for (const auto& c : evidence.certificates) {
      // Check the certificate independently of certificate_holds.
      const auto adj = testing::to_matrix(g);
      CHECK(c.v_max != c.v_min);
      CHECK(c.u != c.w);
      CHECK(adj[c.u][c.w]);
      CHECK(adj[c.u][c.v_max]);
      CHECK(adj[c.u][c.v_min]);
      CHECK(adj[c.w][c.v_max]);
      CHECK(adj[c.w][c.v_min]);
    }
  };
  for (std::size_t n = 4; n <= 12; ++n) {
    check_all({Family::complete, n, 0});
  }
  for (std::size_t n = 3; n <= 14; ++n) {
    for (std::size_t k = 2; k < n; ++k) {
      if (!labelable_path_power(n, k)) {
        check_all({Family::path_power, n, k});
      }
    }
  }
  for (std::size_t n = 5; n <= 16; ++n) {
    for (std::size_t k = 2; 2 * k < n; ++k) {
      if (!labelable_cycle_power(n, k)) {
        check_all({Family::cycle_power, n, k});
      }
    }
  }
}

TEST_CASE("labelable members leave some placement uncertified") {
  CHECK_FALSE(extreme_conflicts(path_power(8, 3)).complete());
  CHECK_FALSE(extreme_conflicts(cycle_power(8, 2)).complete());
  CHECK_FALSE(extreme_conflicts(complete_graph(3)).complete());
}
