#include "gaplab/labelling.hpp"

#include "gaplab/errors.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <sstream>

namespace gaplab {

namespace {

std::vector<BigInt> to_big(std::initializer_list<long long> values) {
  std::vector<BigInt> out;
  out.reserve(values.size());
  for (auto v : values) {
    out.emplace_back(v);
  }
  return out;
}

} // namespace

Labelling::Labelling(std::vector<BigInt> labels) : labels_(std::move(labels)) {
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (labels_[v] < 1) {
      throw InvalidArgument("label of vertex " + std::to_string(v) + " must be >= 1, got " +
                            labels_[v].str());
    }
  }
}

Labelling::Labelling(std::initializer_list<long long> labels) : Labelling(to_big(labels)) {}

const BigInt& Labelling::max() const {
  if (labels_.empty()) {
    throw InvalidArgument("empty labelling has no maximum");
  }
  return *std::max_element(labels_.begin(), labels_.end());
}

Colouring::Colouring(std::vector<BigInt> colours) : colours_(std::move(colours)) {
  for (std::size_t v = 0; v < colours_.size(); ++v) {
    if (colours_[v] < 0) {
      throw InvalidArgument("colour of vertex " + std::to_string(v) + " is negative");
    }
  }
}

Colouring::Colouring(std::initializer_list<long long> colours) : Colouring(to_big(colours)) {}

std::string ConflictReport::describe() const {
  std::ostringstream out;
  for (const auto& c : conflicts) {
    out << "conflict " << c.edge.u << ' ' << c.edge.v << " colour " << c.colour << '\n';
  }
  return out.str();
}

Colouring induced_colouring(const Graph& g, const Labelling& pi) {
  const auto n = g.vertex_count();
  if (pi.size() != n) {
    throw InvalidArgument("labelling has " + std::to_string(pi.size()) + " labels for " +
                          std::to_string(n) + " vertices");
  }
  std::vector<BigInt> colours(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto nbrs = g.neighbours(v);
    if (nbrs.empty()) {
      throw UnsupportedInput("vertex " + std::to_string(v) +
                             " is isolated; gap colours are defined for degree >= 1");
    }
    if (nbrs.size() == 1) {
      colours[v] = pi[nbrs.front()];
      continue;
    }
    const BigInt* lo = &pi[nbrs.front()];
    const BigInt* hi = lo;
    for (auto w : nbrs.subspan(1)) {
      const auto& label = pi[w];
      if (label < *lo) {
        lo = &label;
      } else if (label > *hi) {
        hi = &label;
      }
    }
    colours[v] = *hi - *lo;
  }
  return Colouring(std::move(colours));
}

GapCheck is_gap_labelling(const Graph& g, const Labelling& pi) {
  GapCheck check;
  check.colouring = induced_colouring(g, pi);
  for (const auto& e : g.edges()) {
    if (check.colouring[e.u] == check.colouring[e.v]) {
      check.report.conflicts.push_back({e, check.colouring[e.u]});
    }
  }
  check.valid = check.report.empty();
  return check;
}

namespace {

BigInt parse_decimal(std::string_view token, std::size_t line) {
  if (!detail::is_decimal(token)) {
    throw ParseError(line, "expected a decimal label, got '" + std::string(token) + "'");
  }
  // cpp_int reads a leading 0 as an octal prefix.
  const auto digits = token.find_first_not_of('0');
  BigInt value(digits == std::string_view::npos ? std::string("0") : std::string(token.substr(digits)));
  if (value < 1) {
    throw ParseError(line, "labels must be >= 1");
  }
  return value;
}

} // namespace

Labelling parse_labelling(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) {
    throw ParseError(1, "empty labelling");
  }
  std::vector<BigInt> labels;
  if (lines.size() == 1 && lines.front().text.find(',') != std::string_view::npos) {
    auto rest = lines.front().text;
    while (true) {
      const auto comma = rest.find(',');
      const auto fields = detail::split_tokens(rest.substr(0, comma), " \t");
      if (fields.size() != 1) {
        throw ParseError(lines.front().number, "expected one label between commas");
      }
      labels.push_back(parse_decimal(fields.front(), lines.front().number));
      if (comma == std::string_view::npos) {
        break;
      }
      rest.remove_prefix(comma + 1);
    }
  } else {
    labels.resize(lines.size());
    std::vector<bool> seen(lines.size(), false);
    for (const auto& line : lines) {
      const auto tokens = detail::split_tokens(line.text, " \t");
      if (tokens.size() != 2) {
        throw ParseError(line.number, "labelling line must be \"vertex label\"");
      }
      const auto v = detail::parse_index(tokens[0], line.number);
      if (v >= lines.size()) {
        throw ParseError(line.number, "vertex " + std::to_string(v) + " out of range for " +
                                          std::to_string(lines.size()) + " labels");
      }
      if (seen[v]) {
        throw ParseError(line.number, "vertex " + std::to_string(v) + " labelled twice");
      }
      seen[v] = true;
      labels[v] = parse_decimal(tokens[1], line.number);
    }
  }
  return Labelling(std::move(labels));
}

namespace {

std::string format_per_vertex(std::span<const BigInt> values) {
  std::ostringstream out;
  for (std::size_t v = 0; v < values.size(); ++v) {
    out << v << ' ' << values[v] << '\n';
  }
  return out.str();
}

} // namespace

std::string format_labelling(const Labelling& pi) { return format_per_vertex(pi.values()); }

std::string format_labelling_csv(const Labelling& pi) {
  std::ostringstream out;
  for (std::size_t v = 0; v < pi.size(); ++v) {
    out << (v ? "," : "") << pi[v];
  }
  out << '\n';
  return out.str();
}

std::string format_colouring(const Colouring& c) { return format_per_vertex(c.values()); }

} // namespace gaplab
