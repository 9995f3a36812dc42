#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xdescent/count.hpp"
#include "xdescent/limits.hpp"
#include "xdescent/periodic.hpp"
#include "xdescent/relation.hpp"

namespace xdescent {

enum class Method { Auto, Oracle, Subset, Binomial, IE, Insertion, Hampath, Periodic, Succession };

std::string method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

struct CountResult {
  Count value;
  Method used;
};

/// Evaluates d_X(I;n) with the chosen method, or with the cheapest
/// applicable one under Auto. Throws NotApplicable / SizeLimit when the
/// choice cannot run on this input.
CountResult compute_count(const RelationSpec& spec, int n, const PositionSet& I, Method choice,
                          const Limits& limits = {});

/// One verification cell: every applicable method's value for a fixed (n, I).
struct VerificationCell {
  int n;
  PositionSet I;
  std::vector<std::pair<Method, Count>> results;
  bool agree = true;
};

struct Discrepancy {
  int n;
  PositionSet I;
  Method a;
  Count value_a;
  Method b;
  Count value_b;
};

struct VerificationReport {
  std::vector<VerificationCell> cells;
  std::vector<Method> active_methods;
  std::vector<std::pair<Method, std::string>> skipped_methods;  // method, reason
  bool agreement = true;
  std::optional<Discrepancy> first_discrepancy;
};

/// Runs every applicable method on every (n <= n_max, I) cell and compares
/// the results pairwise. Never throws on a mismatch; the report carries it.
VerificationReport run_verification(const RelationSpec& spec, int n_max, const Limits& limits = {});

/// One table row. Periodic descent-free tables carry the content vector and
/// the constrained word count next to the permutation count.
struct TableRow {
  int n;
  PositionSet I;
  std::optional<ContentVector> content;
  std::optional<Count> word_count;
  Count value;
  Method used;
};

/// empty_only: one row per n with I = {}. Otherwise one row per (n, I).
std::vector<TableRow> make_table(const RelationSpec& spec, int n_max, bool empty_only,
                                 const Limits& limits = {});

}  // namespace xdescent
