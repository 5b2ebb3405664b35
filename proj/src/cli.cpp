#include "gaplab/cli.hpp"

#include "gaplab/decider.hpp"
#include "gaplab/errors.hpp"
#include "gaplab/families.hpp"
#include "gaplab/gap_strength.hpp"
#include "gaplab/graph.hpp"
#include "gaplab/labelling.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace gaplab::cli {

namespace {

// Problems with the invocation itself, reported with the usage text.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
};

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), {}};
  }
  std::ifstream file(path);
  if (!file) {
    throw UnsupportedInput("cannot open '" + path + "'");
  }
  return {std::istreambuf_iterator<char>(file), {}};
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file || !(file << text)) {
    throw UnsupportedInput("cannot write '" + path + "'");
  }
}

std::optional<unsigned long long> search_budget() {
  const char* raw = std::getenv("GAPLAB_SEARCH_BUDGET");
  if (raw == nullptr || *raw == '\0') {
    return std::nullopt;
  }
  const std::string_view text(raw);
  unsigned long long value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw UsageError("GAPLAB_SEARCH_BUDGET must be a nonnegative integer, got '" +
                     std::string(text) + "'");
  }
  return value;
}

struct FamilyArgs {
  std::string family;
  std::size_t n = 0;
  std::optional<std::size_t> k;

  FamilySpec spec() const {
    FamilySpec s;
    try {
      s.family = parse_family(family);
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
    s.n = n;
    if (s.family != Family::complete) {
      if (!k) {
        throw UsageError("--k is required for " + family);
      }
      s.k = *k;
    }
    return s;
  }
};

void add_family_options(CLI::App* cmd, FamilyArgs& args, bool required) {
  auto* family = cmd->add_option("--family", args.family, "complete | path-power | cycle-power");
  auto* n = cmd->add_option("--n", args.n, "vertex count");
  cmd->add_option("--k", args.k, "power (path-power, cycle-power)");
  if (required) {
    family->required();
    n->required();
  }
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Io io{in, out};
  CLI::App app("Gap-vertex-labellings of graphs", "gaplab");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  FamilyArgs family;
  std::string output;
  std::string graph_path;
  std::string labels_path;
  std::size_t workers = 1;
  std::size_t k_max = 0;
  std::size_t n_max = 0;
  std::size_t n = 0;
  std::string format = "csv";

  auto* gen = app.add_subcommand("gen", "Write a family member as an edge list");
  add_family_options(gen, family, true);
  gen->add_option("-o", output, "output file (default stdout)");

  auto* label = app.add_subcommand("label", "Construct a gap-vertex-labelling");
  add_family_options(label, family, false);
  auto* label_graph = label->add_option("--graph", graph_path, "graph file; labelled via the decider");
  label_graph->excludes("--family");
  label->get_option("--family")->excludes(label_graph);
  label->add_option("-o", output, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check a labelling against a graph");
  verify->add_option("--graph", graph_path, "graph file or -")->required();
  verify->add_option("--labels", labels_path, "labelling file or -")->required();

  auto* decide_cmd = app.add_subcommand("decide", "Decide gap-vertex-labelability");
  decide_cmd->add_option("--graph", graph_path, "graph file or -")->required();
  decide_cmd->add_option("--workers", workers, "search fan-out")->check(CLI::PositiveNumber);

  auto* chi = app.add_subcommand("chi", "Vertex-gap number up to a bound");
  chi->add_option("--graph", graph_path, "graph file or -")->required();
  chi->add_option("--kmax", k_max, "largest label to try")->required()->check(CLI::PositiveNumber);

  auto* lb = app.add_subcommand("strength-lb", "Lower-bound tables for complete graphs");
  lb->add_option("--nmax", n_max, "largest order")->required();
  lb->add_option("--format", format, "table format")->check(CLI::IsMember({"csv"}));

  auto* ub = app.add_subcommand("strength-ub", "Upper-bound construction for K_n");
  ub->add_option("--n", n, "order")->required();
  ub->add_option("-o", output, "write PREFIX.removed, PREFIX.graph, PREFIX.labels");

  auto* exact = app.add_subcommand("strength-exact", "Exact gap-strength of K_n, n <= 6");
  exact->add_option("--n", n, "order")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return exit_usage;
  }

  try {
    if (gen->parsed()) {
      emit(output, serialize_graph(generate(family.spec())), io.out);
      return exit_ok;
    }
    if (label->parsed()) {
      if (graph_path.empty() && family.family.empty()) {
        throw UsageError("label needs --family or --graph");
      }
      if (!graph_path.empty()) {
        const auto g = parse_graph(slurp(graph_path, io.in));
        DecideOptions options;
        options.budget = search_budget();
        auto result = decide(g, options);
        if (!result.labelable) {
          throw DomainError("graph is not gap-vertex-labelable");
        }
        emit(output, format_labelling(*result.witness), io.out);
        return exit_ok;
      }
      if (!label->get_option("--n")->count()) {
        throw UsageError("--n is required with --family");
      }
      emit(output, format_labelling(construct_labelling(family.spec())), io.out);
      return exit_ok;
    }
    if (verify->parsed()) {
      if (graph_path == "-" && labels_path == "-") {
        throw UsageError("--graph and --labels cannot both read stdin");
      }
      const auto g = parse_graph(slurp(graph_path, io.in));
      const auto pi = parse_labelling(slurp(labels_path, io.in));
      const auto check = is_gap_labelling(g, pi);
      if (check.valid) {
        io.out << "VALID\n";
        return exit_ok;
      }
      io.out << "INVALID\n" << check.report.describe();
      return exit_failure;
    }
    if (decide_cmd->parsed()) {
      const auto g = parse_graph(slurp(graph_path, io.in));
      DecideOptions options;
      options.workers = workers;
      options.budget = search_budget();
      const auto result = decide(g, options);
      if (result.labelable) {
        io.out << "labelable\n" << format_labelling(*result.witness);
      } else {
        io.out << "not labelable\n";
      }
      return exit_ok;
    }
    if (chi->parsed()) {
      const auto g = parse_graph(slurp(graph_path, io.in));
      const auto value = vertex_gap_number(g, k_max, search_budget());
      if (value) {
        io.out << *value << "\n";
      } else {
        io.out << "none ≤ " << k_max << "\n";
      }
      return exit_ok;
    }
    if (lb->parsed()) {
      io.out << emit_tables(compute_tables(n_max), format);
      return exit_ok;
    }
    if (ub->parsed()) {
      const auto built = construct_upper(n);
      const auto f = built.removed.size();
      if (output.empty()) {
        io.out << serialize_removed(n, built.removed) << "# labelling\n"
               << format_labelling(built.labelling) << "# f'(" << n << ") = " << f << "\n";
      } else {
        emit(output + ".removed", serialize_removed(n, built.removed), io.out);
        emit(output + ".graph", serialize_graph(built.graph()), io.out);
        emit(output + ".labels", format_labelling(built.labelling), io.out);
        io.out << f << "\n";
      }
      return exit_ok;
    }
    if (exact->parsed()) {
      io.out << exact_strength(n).strength << "\n";
      return exit_ok;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return exit_usage;
  } catch (const SearchBudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return exit_budget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failure;
  }
  return exit_usage;
}

} // namespace gaplab::cli
