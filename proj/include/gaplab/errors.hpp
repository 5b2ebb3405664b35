#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gaplab {

// Argument outside the documented range of an operation.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Input the operation is not defined for (disconnected graph, isolated vertex,
// n outside a search's supported range).
class UnsupportedInput : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A labelling passed to a transform does not satisfy its precondition.
class PreconditionViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Family parameters on the wrong side of a labelability theorem.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class MissingEdge : public std::invalid_argument {
public:
  MissingEdge(std::size_t u, std::size_t v)
      : std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") is not present in the graph"),
        u_(u), v_(v) {}

  std::size_t u() const { return u_; }
  std::size_t v() const { return v_; }

private:
  std::size_t u_;
  std::size_t v_;
};

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

class SearchBudgetExceeded : public std::runtime_error {
public:
  explicit SearchBudgetExceeded(unsigned long long budget)
      : std::runtime_error("search budget of " + std::to_string(budget) +
                           " assignments exceeded"),
        budget_(budget) {}

  unsigned long long budget() const { return budget_; }

private:
  unsigned long long budget_;
};

} // namespace gaplab
