#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace xdescent {

/// Membership query with a == b; permutation entries are distinct, so a
/// diagonal query always indicates a malformed caller.
struct DiagonalQuery : std::invalid_argument {
  explicit DiagonalQuery(int a)
      : std::invalid_argument("diagonal membership query (" + std::to_string(a) + "," +
                              std::to_string(a) + ")") {}
};

struct RepeatedLabel : std::invalid_argument {
  explicit RepeatedLabel(int label)
      : std::invalid_argument("word has repeated label " + std::to_string(label)) {}
};

/// An input exceeds a hard per-algorithm size cap.
struct SizeLimit : std::runtime_error {
  SizeLimit(const std::string& what_op, long long requested, long long limit)
      : std::runtime_error(what_op + ": size " + std::to_string(requested) + " exceeds limit " +
                           std::to_string(limit)),
        requested(requested),
        limit(limit) {}
  long long requested;
  long long limit;
};

/// An enumeration would exceed the configured work budget.
struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(const std::string& what_op, unsigned long long estimated,
                 unsigned long long budget)
      : std::runtime_error(what_op + ": estimated work " + std::to_string(estimated) +
                           " exceeds budget " + std::to_string(budget)),
        estimated(estimated),
        budget(budget) {}
  unsigned long long estimated;
  unsigned long long budget;
};

/// A standardization-invariance gated operation was invoked without a
/// holding certificate or an explicit waiver.
struct NotCertified : std::logic_error {
  explicit NotCertified(const std::string& msg) : std::logic_error(msg) {}
};

/// The insertion recursion's uniformity hypothesis fails; carries the pair
/// whose membership violates it.
struct HypothesisFailed : std::runtime_error {
  HypothesisFailed(int a, int b, bool expected_in)
      : std::runtime_error(std::string("insertion hypothesis fails: (") + std::to_string(a) +
                           "," + std::to_string(b) + ") " +
                           (expected_in ? "not in X" : "in X")),
        pair(a, b),
        expected_in(expected_in) {}
  std::pair<int, int> pair;
  bool expected_in;
};

struct NotTournament : std::invalid_argument {
  NotTournament(int a, int b)
      : std::invalid_argument("digraph is not a tournament at pair (" + std::to_string(a) + "," +
                              std::to_string(b) + ")"),
        pair(a, b) {}
  std::pair<int, int> pair;
};

/// Descent-free counts vary over the verification window but were required
/// to be constant.
struct NotConstant : std::runtime_error {
  NotConstant(int n, const std::string& expected, const std::string& actual)
      : std::runtime_error("d(empty;" + std::to_string(n) + ") = " + actual + ", expected " +
                           expected),
        n(n) {}
  int n;
};

/// A counting method cannot be used on the given input; names the failed
/// precondition.
struct NotApplicable : std::runtime_error {
  explicit NotApplicable(const std::string& reason) : std::runtime_error(reason) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace xdescent
