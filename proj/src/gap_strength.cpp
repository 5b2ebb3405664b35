#include "gaplab/gap_strength.hpp"

#include "gaplab/decider.hpp"
#include "gaplab/errors.hpp"
#include "symmetry.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace gaplab {

namespace {

std::uint64_t choose2(std::uint64_t m) { return m * (m - (m > 0 ? 1 : 0)) / 2; }

std::size_t isqrt(std::size_t value) {
  std::size_t root = 0;
  while ((root + 1) * (root + 1) <= value) {
    ++root;
  }
  return root;
}

// (i_j, x_j) for a level of order n_j; i_j = floor(sqrt(n_j)) unless that
// leaves X empty (n_j = 4), in which case one vertex moves from I to X.
std::pair<std::size_t, std::size_t> level_sizes(std::size_t order) {
  auto independent = isqrt(order);
  auto rest = order - independent - 2;
  if (rest == 0) {
    --independent;
    rest = 1;
  }
  return {independent, rest};
}

} // namespace

Decomposition decompose(const Graph& g, Vertex v_max, Vertex v_min) {
  const auto n = g.vertex_count();
  if (v_max >= n || v_min >= n || v_max == v_min) {
    throw InvalidArgument("decomposition needs two distinct vertices of the graph");
  }
  Decomposition d;
  d.v_max = v_max;
  d.v_min = v_min;
  for (Vertex v = 0; v < n; ++v) {
    if (v == v_max || v == v_min) {
      continue;
    }
    const bool sees_max = g.has_edge(v, v_max);
    const bool sees_min = g.has_edge(v, v_min);
    auto& bucket = sees_max ? (sees_min ? d.i : d.x) : (sees_min ? d.y : d.z);
    bucket.push_back(v);
  }
  d.removed = complement_edges(g);
  return d;
}

Graph UpperBoundConstruction::graph() const { return remove_edges(complete_graph(n), removed); }

UpperBoundConstruction construct_upper(std::size_t n) {
  if (n < 4) {
    throw InvalidArgument("construct_upper needs n >= 4; K_1..K_3 are already labelable");
  }
  UpperBoundConstruction out;
  out.n = n;
  out.v_max = 0;
  std::vector<BigInt> labels(n);
  labels[out.v_max] = pow2(static_cast<unsigned>(n - 1));

  std::vector<Vertex> current;
  for (Vertex v = 1; v < n; ++v) {
    current.push_back(v);
  }
  std::size_t order = n;
  for (std::size_t j = 1;; ++j) {
    const auto [independent, rest] = level_sizes(order);
    RestrictedIteration level;
    level.order = order;
    level.independent = independent;
    level.rest = rest;
    level.v_min = current.front();
    level.i_set.assign(current.begin() + 1, current.begin() + 1 + static_cast<std::ptrdiff_t>(independent));
    level.x_set.assign(current.begin() + 1 + static_cast<std::ptrdiff_t>(independent), current.end());

    for (auto u : level.x_set) {
      out.removed.push_back(make_edge(level.v_min, u));
    }
    for (std::size_t a = 0; a < level.i_set.size(); ++a) {
      for (std::size_t b = a + 1; b < level.i_set.size(); ++b) {
        out.removed.push_back(make_edge(level.i_set[a], level.i_set[b]));
      }
    }
    labels[level.v_min] = pow2(static_cast<unsigned>(j - 1));
    for (auto v : level.i_set) {
      labels[v] = pow2(static_cast<unsigned>(n - 2));
    }
    out.plan.total_removed += rest + choose2(independent);

    const bool recurse = rest >= 3;
    if (!recurse) {
      // One or two vertices remain in the last X.
      for (std::size_t t = 0; t < level.x_set.size(); ++t) {
        labels[level.x_set[t]] = pow2(static_cast<unsigned>(j + t));
      }
    }
    current = level.x_set;
    order = rest + 1;
    out.plan.iterations.push_back(std::move(level));
    if (!recurse) {
      break;
    }
  }
  std::sort(out.removed.begin(), out.removed.end());
  out.labelling = Labelling(std::move(labels));
  return out;
}

std::size_t upper_bound_edge_count(std::size_t n) {
  if (n < 4) {
    return 0;
  }
  std::size_t total = 0;
  for (std::size_t order = n;;) {
    const auto [independent, rest] = level_sizes(order);
    total += rest + choose2(independent);
    if (rest < 3) {
      return total;
    }
    order = rest + 1;
  }
}

std::vector<std::uint64_t> restricted_lb(std::size_t n_max) {
  std::vector<std::uint64_t> lp(std::max<std::size_t>(n_max, 3) + 1, 0);
  for (std::size_t n = 4; n <= n_max; ++n) {
    auto best = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t x = 0; x <= n - 2; ++x) {
      best = std::min(best, x + choose2(n - 2 - x) + lp[x + 1]);
    }
    lp[n] = best;
  }
  lp.resize(n_max + 1);
  return lp;
}

std::vector<std::uint64_t> general_lb(std::size_t n_max) {
  const auto top = std::max<std::size_t>(n_max, 3);
  const auto lp = restricted_lb(top);
  // pair_cost[s] = min over x + y = s of l'(x+1) + l'(y+1).
  std::vector<std::uint64_t> pair_cost(top + 1, 0);
  for (std::size_t s = 0; s + 1 <= top; ++s) {
    auto best = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t x = 0; x <= s; ++x) {
      best = std::min(best, lp[x + 1] + lp[s - x + 1]);
    }
    pair_cost[s] = best;
  }
  std::vector<std::uint64_t> general(top + 1, 0);
  for (std::size_t n = 4; n <= n_max; ++n) {
    auto best = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t z = 0; z <= n - 2; ++z) {
      for (std::size_t i = 0; z + i <= n - 2; ++i) {
        const auto s = n - 2 - z - i;
        best = std::min(best, s + pair_cost[s] + 2 * z + choose2(i) + general[z]);
      }
    }
    general[n] = best;
  }
  general.resize(n_max + 1);
  return general;
}

std::string omega_text(std::size_t n, unsigned places) {
  using Decimal = boost::multiprecision::cpp_dec_float_50;
  const Decimal value =
      Decimal(3) * boost::multiprecision::pow(Decimal(n), Decimal(6) / Decimal(5)) / Decimal(100);
  Decimal scale = 1;
  for (unsigned p = 0; p < places; ++p) {
    scale *= 10;
  }
  const BigInt scaled(boost::multiprecision::floor(value * scale + Decimal(0.5)));
  const BigInt denominator(scale);
  std::string fraction = BigInt(scaled % denominator).str();
  fraction.insert(0, places - std::min<std::size_t>(places, fraction.size()), '0');
  std::string text = BigInt(scaled / denominator).str();
  if (places > 0) {
    text += "." + fraction;
  }
  return text;
}

DpTables compute_tables(std::size_t n_max) {
  DpTables t;
  t.n_max = n_max;
  t.lprime = restricted_lb(n_max);
  t.general = general_lb(n_max);
  t.omega.resize(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    t.omega[n] = omega_text(n);
  }
  return t;
}

BoundsReport check_bounds(const DpTables& tables) {
  BoundsReport report;
  report.n_max = tables.n_max;
  for (std::size_t n = 4; n <= tables.n_max; ++n) {
    const BigInt nn = n;
    const BigInt restricted = BigInt(10) * tables.lprime[n];
    if (!report.restricted_violation && restricted * restricted < nn * nn * nn) {
      report.restricted_violation = n;
    }
    const BigInt general = BigInt(100) * tables.general[n];
    if (!report.general_violation &&
        boost::multiprecision::pow(general, 5) < BigInt(243) * boost::multiprecision::pow(nn, 6)) {
      report.general_violation = n;
    }
    if (!report.monotonicity_violation && tables.lprime[n] < tables.lprime[n - 1]) {
      report.monotonicity_violation = n;
    }
  }
  return report;
}

namespace {

// Labelable iff every component is; a lone vertex counts as labelable.
std::optional<Labelling> labelling_if_labelable(const Graph& g) {
  std::vector<BigInt> labels(g.vertex_count(), 1);
  for (const auto& component : connected_components(g)) {
    if (component.size() < 2) {
      continue;
    }
    const auto sub = induced_subgraph(g, component);
    auto result = decide(sub);
    if (!result.labelable) {
      return std::nullopt;
    }
    for (std::size_t i = 0; i < component.size(); ++i) {
      labels[component[i]] = (*result.witness)[i];
    }
  }
  return Labelling(std::move(labels));
}

bool next_combination(std::vector<std::size_t>& pick, std::size_t universe) {
  const auto k = pick.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (pick[pos] < universe - k + pos) {
      ++pick[pos];
      for (auto rest = pos + 1; rest < k; ++rest) {
        pick[rest] = pick[rest - 1] + 1;
      }
      return true;
    }
  }
  return false;
}

} // namespace

ExactStrength exact_strength(std::size_t n) {
  if (n < 4 || n > 6) {
    throw UnsupportedInput("exact gap-strength search supports 4 <= n <= 6");
  }
  const auto full = complete_graph(n);
  const std::vector<Edge> all(full.edges().begin(), full.edges().end());
  ExactStrength out;
  for (std::size_t l = 1; l <= all.size(); ++l) {
    std::map<std::string, std::set<std::string>> seen;
    std::vector<std::size_t> pick(l);
    for (std::size_t t = 0; t < l; ++t) {
      pick[t] = t;
    }
    do {
      std::vector<Edge> removal;
      for (auto idx : pick) {
        removal.push_back(all[idx]);
      }
      const auto g = remove_edges(full, removal);
      auto& bucket = seen[detail::degree_triangle_key(g)];
      if (!bucket.insert(detail::canonical_code(g)).second) {
        ++out.duplicates_skipped;
        continue;
      }
      ++out.graphs_decided;
      if (auto witness = labelling_if_labelable(g)) {
        out.strength = l;
        out.removed = std::move(removal);
        out.witness = std::move(*witness);
        return out;
      }
    } while (next_combination(pick, all.size()));
  }
  throw UnsupportedInput("no edge removal produced a labelable graph");
}

std::string emit_tables(const DpTables& tables, std::string_view format) {
  if (format != "csv") {
    throw InvalidArgument("unsupported table format '" + std::string(format) + "' (expected csv)");
  }
  std::ostringstream out;
  out << "n,lprime,general,omega\n";
  for (std::size_t n = 4; n <= tables.n_max; ++n) {
    out << n << ',' << tables.lprime[n] << ',' << tables.general[n] << ',' << tables.omega[n] << '\n';
  }
  return out.str();
}

std::string serialize_removed(std::size_t n, const std::vector<Edge>& removed) {
  return "# removed from K_" + std::to_string(n) + "\n" + serialize_graph(Graph(n, removed));
}

} // namespace gaplab
