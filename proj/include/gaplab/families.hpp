#pragma once

#include "gaplab/graph.hpp"
#include "gaplab/labelling.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gaplab {

enum class Family { complete, path_power, cycle_power };

struct FamilySpec {
  Family family = Family::complete;
  std::size_t n = 0;
  std::size_t k = 0; // ignored for complete graphs

  bool operator==(const FamilySpec&) const = default;
};

// "complete", "path-power", "cycle-power".
Family parse_family(std::string_view name);
std::string family_name(Family family);
std::string describe(const FamilySpec& spec);

Graph generate(const FamilySpec& spec);

// K_n is labelable iff n <= 3.
bool labelable_complete(std::size_t n);

// P_n^k, n >= 3 and 2 <= k < n: labelable iff (n,k) is (3,2) or (4,2), or
// n >= 5 and 2k < n. InvalidArgument outside that parameter range.
bool labelable_path_power(std::size_t n, std::size_t k);

// C_n^k, n >= 4 and 2 <= k < n/2: labelable iff (n,k) is (6,2) or (7,2), or
// n >= 8 and k <= floor(n/4). InvalidArgument outside that parameter range.
bool labelable_cycle_power(std::size_t n, std::size_t k);

bool labelable(const FamilySpec& spec);

// K_2 -> (2,1), K_3 -> (2,1,4). DomainError for n >= 4.
Labelling construct_complete_labelling(std::size_t n);

// (3,2) -> (2,1,4); (4,2) -> (2,1,4,2); otherwise v_i -> 2^i.
// DomainError when P_n^k is not labelable.
Labelling construct_path_power_labelling(std::size_t n, std::size_t k);

// (6,2) -> (1,2,4,1,2,4); (7,2) -> (1,8,4,4,4,4,2); otherwise
// v_i -> 2^i for i < ceil(n/2) and v_j -> 2^(ceil(n/2) + n - j) for the rest.
// DomainError when C_n^k is not labelable.
Labelling construct_cycle_power_labelling(std::size_t n, std::size_t k);

Labelling construct_labelling(const FamilySpec& spec);

// For one placement of the extreme labels: u and w are adjacent and both have
// v_max and v_min as neighbours, so any labelling with those unique extremes
// gives u and w the same colour.
struct ExtremeCertificate {
  Vertex v_max = 0;
  Vertex v_min = 0;
  Vertex u = 0;
  Vertex w = 0;
};

struct ConflictEvidence {
  FamilySpec spec;
  std::vector<ExtremeCertificate> certificates;
  // Ordered (v_max, v_min) placements for which no certificate exists.
  std::vector<std::pair<Vertex, Vertex>> uncovered;

  // True when every ordered placement is certified, which refutes labelability.
  bool complete() const { return uncovered.empty(); }
};

// Exhausts all ordered (v_max, v_min) placements of a non-labelable family
// member. DomainError if the spec is labelable.
ConflictEvidence refute_witness(const FamilySpec& spec);

// Certificate search for an arbitrary graph; used by refute_witness.
ConflictEvidence extreme_conflicts(const Graph& g);

// Independent soundness check of a single certificate against g.
bool certificate_holds(const Graph& g, const ExtremeCertificate& c);

} // namespace gaplab
