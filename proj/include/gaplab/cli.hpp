#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gaplab::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1; // domain error, invalid labelling
inline constexpr int exit_usage = 2;
inline constexpr int exit_budget = 3;

// Runs one subcommand. `args` excludes the program name. A FILE argument of
// "-" reads from `in`. The search budget comes from GAPLAB_SEARCH_BUDGET.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace gaplab::cli
