#include "gaplab/families.hpp"

#include "gaplab/errors.hpp"

namespace gaplab {

Family parse_family(std::string_view name) {
  if (name == "complete") {
    return Family::complete;
  }
  if (name == "path-power") {
    return Family::path_power;
  }
  if (name == "cycle-power") {
    return Family::cycle_power;
  }
  throw InvalidArgument("unknown family '" + std::string(name) +
                        "' (expected complete, path-power or cycle-power)");
}

std::string family_name(Family family) {
  switch (family) {
  case Family::complete:
    return "complete";
  case Family::path_power:
    return "path-power";
  case Family::cycle_power:
    return "cycle-power";
  }
  return "unknown";
}

std::string describe(const FamilySpec& spec) {
  switch (spec.family) {
  case Family::complete:
    return "K_" + std::to_string(spec.n);
  case Family::path_power:
    return "P_" + std::to_string(spec.n) + "^" + std::to_string(spec.k);
  case Family::cycle_power:
    return "C_" + std::to_string(spec.n) + "^" + std::to_string(spec.k);
  }
  return "?";
}

Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
  case Family::complete:
    return complete_graph(spec.n);
  case Family::path_power:
    return path_power(spec.n, spec.k);
  case Family::cycle_power:
    return cycle_power(spec.n, spec.k);
  }
  throw InvalidArgument("unknown family");
}

bool labelable_complete(std::size_t n) {
  if (n < 1) {
    throw InvalidArgument("complete graph needs n >= 1");
  }
  return n <= 3;
}

bool labelable_path_power(std::size_t n, std::size_t k) {
  if (n < 3 || k < 2 || k >= n) {
    throw InvalidArgument("path-power predicate needs n >= 3 and 2 <= k < n");
  }
  if (n <= 4) {
    return k == 2;
  }
  return 2 * k < n;
}

bool labelable_cycle_power(std::size_t n, std::size_t k) {
  if (n < 4 || k < 2 || 2 * k >= n) {
    throw InvalidArgument("cycle-power predicate needs n >= 4 and 2 <= k < n/2");
  }
  if (n <= 7) {
    return k == 2 && (n == 6 || n == 7);
  }
  return k <= n / 4;
}

bool labelable(const FamilySpec& spec) {
  switch (spec.family) {
  case Family::complete:
    return labelable_complete(spec.n);
  case Family::path_power:
    return labelable_path_power(spec.n, spec.k);
  case Family::cycle_power:
    return labelable_cycle_power(spec.n, spec.k);
  }
  throw InvalidArgument("unknown family");
}

Labelling construct_complete_labelling(std::size_t n) {
  if (!labelable_complete(n)) {
    throw DomainError("K_" + std::to_string(n) + " admits no gap-vertex-labelling");
  }
  switch (n) {
  case 1:
    return Labelling{1};
  case 2:
    return Labelling{2, 1};
  default:
    return Labelling{2, 1, 4};
  }
}

Labelling construct_path_power_labelling(std::size_t n, std::size_t k) {
  if (!labelable_path_power(n, k)) {
    throw DomainError("P_" + std::to_string(n) + "^" + std::to_string(k) +
                      " admits no gap-vertex-labelling");
  }
  if (n == 3) {
    return Labelling{2, 1, 4};
  }
  if (n == 4) {
    return Labelling{2, 1, 4, 2};
  }
  std::vector<BigInt> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = pow2(static_cast<unsigned>(i));
  }
  return Labelling(std::move(labels));
}

Labelling construct_cycle_power_labelling(std::size_t n, std::size_t k) {
  if (!labelable_cycle_power(n, k)) {
    throw DomainError("C_" + std::to_string(n) + "^" + std::to_string(k) +
                      " admits no gap-vertex-labelling");
  }
  if (n == 6) {
    return Labelling{1, 2, 4, 1, 2, 4};
  }
  if (n == 7) {
    return Labelling{1, 8, 4, 4, 4, 4, 2};
  }
  const auto half = (n + 1) / 2;
  std::vector<BigInt> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = i < half ? pow2(static_cast<unsigned>(i)) : pow2(static_cast<unsigned>(half + n - i));
  }
  return Labelling(std::move(labels));
}

Labelling construct_labelling(const FamilySpec& spec) {
  switch (spec.family) {
  case Family::complete:
    return construct_complete_labelling(spec.n);
  case Family::path_power:
    return construct_path_power_labelling(spec.n, spec.k);
  case Family::cycle_power:
    return construct_cycle_power_labelling(spec.n, spec.k);
  }
  throw InvalidArgument("unknown family");
}

bool certificate_holds(const Graph& g, const ExtremeCertificate& c) {
  const auto distinct = c.v_max != c.v_min && c.u != c.w;
  return distinct && g.has_edge(c.u, c.w) && g.has_edge(c.u, c.v_max) &&
         g.has_edge(c.u, c.v_min) && g.has_edge(c.w, c.v_max) && g.has_edge(c.w, c.v_min);
}

ConflictEvidence extreme_conflicts(const Graph& g) {
  ConflictEvidence evidence;
  const auto n = g.vertex_count();
  for (Vertex hi = 0; hi < n; ++hi) {
    for (Vertex lo = 0; lo < n; ++lo) {
      if (hi == lo) {
        continue;
      }
      std::vector<Vertex> common;
      for (auto v : g.neighbours(hi)) {
        if (g.has_edge(v, lo)) {
          common.push_back(v);
        }
      }
      bool found = false;
      for (std::size_t a = 0; a < common.size() && !found; ++a) {
        for (std::size_t b = a + 1; b < common.size() && !found; ++b) {
          if (g.has_edge(common[a], common[b])) {
            evidence.certificates.push_back({hi, lo, common[a], common[b]});
            found = true;
          }
        }
      }
      if (!found) {
        evidence.uncovered.emplace_back(hi, lo);
      }
    }
  }
  return evidence;
}

ConflictEvidence refute_witness(const FamilySpec& spec) {
  if (labelable(spec)) {
    throw DomainError(describe(spec) + " is gap-vertex-labelable; nothing to refute");
  }
  auto evidence = extreme_conflicts(generate(spec));
  evidence.spec = spec;
  return evidence;
}

} // namespace gaplab
