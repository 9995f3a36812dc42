#include "xdescent/methods.hpp"

#include <algorithm>

#include "xdescent/errors.hpp"
#include "xdescent/hampath.hpp"
#include "xdescent/oracle.hpp"
#include "xdescent/recursion.hpp"
#include "xdescent/successions.hpp"

namespace xdescent {

std::string method_name(Method m) {
  switch (m) {
    case Method::Auto:
      return "auto";
    case Method::Oracle:
      return "oracle";
    case Method::Subset:
      return "subset";
    case Method::Binomial:
      return "binomial";
    case Method::IE:
      return "ie";
    case Method::Insertion:
      return "insertion";
    case Method::Hampath:
      return "hampath";
    case Method::Periodic:
      return "periodic";
    case Method::Succession:
      return "succession";
  }
  return "?";
}

std::optional<Method> method_from_name(const std::string& name) {
  for (Method m : {Method::Auto, Method::Oracle, Method::Subset, Method::Binomial, Method::IE,
                   Method::Insertion, Method::Hampath, Method::Periodic, Method::Succession}) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

namespace {

StdInvariance certified_or_throw(const RelationSpec& spec, int n, const Limits& limits) {
  const int bound = std::clamp(n, 2, limits.certify_bound);
  const PropertyCertificate cert =
      certify_standardization_invariance(spec, bound, limits.work_limit);
  if (!cert.holds) {
    throw NotApplicable("standardization invariance refuted at S=" +
                        cert.witness_labels->to_string() + " I=" +
                        cert.witness_positions->to_string());
  }
  return StdInvariance::certified(cert);
}

Count run_method(const RelationSpec& spec, int n, const PositionSet& I, Method method,
                 const Limits& limits) {
  switch (method) {
    case Method::Oracle:
      return count_exact(spec, LabelSet::range(n), I, limits.oracle_max);
    case Method::Subset:
      return subset_sum_count(spec, LabelSet::range(n), I, limits.subset_max);
    case Method::Binomial: {
      const StdInvariance witness = certified_or_throw(spec, n, limits);
      return binomial_count(n, I, empty_count_table(spec, n, limits.dp_max), witness);
    }
    case Method::IE: {
      const StdInvariance witness = certified_or_throw(spec, n, limits);
      return ie_closed_form(n, I, empty_count_table(spec, n, limits.dp_max), witness);
    }
    case Method::Insertion:
      return insertion_count(spec, n, I);
    case Method::Hampath:
      if (!I.is_empty()) {
        throw NotApplicable("hampath computes descent-free counts only (I must be empty)");
      }
      return d_empty(spec, n, limits.dp_max);
    case Method::Periodic:
      return d_periodic(spec, n, I);
    case Method::Succession: {
      const auto family = succession_family(spec);
      if (!family) {
        throw NotApplicable("succession formula requires deltas {1} or {-1}");
      }
      if (!I.is_empty()) {
        throw NotApplicable("succession formula computes descent-free counts only");
      }
      return *family == SuccessionDirection::Forward ? succession_free_count(n)
                                                     : reverse_succession_free_count(n);
    }
    case Method::Auto:
      break;
  }
  throw std::logic_error("unreachable method dispatch");
}

}  // namespace

CountResult compute_count(const RelationSpec& spec, int n, const PositionSet& I, Method choice,
                          const Limits& limits) {
  if (I.ambient() != n) throw std::invalid_argument("compute_count: I.n must equal n");
  if (choice != Method::Auto) {
    return {run_method(spec, n, I, choice, limits), choice};
  }

  // Cheapest applicable first.
  if (I.is_empty()) {
    if (succession_family(spec)) {
      return {run_method(spec, n, I, Method::Succession, limits), Method::Succession};
    }
    if (spec.periodic_matrix()) {
      return {run_method(spec, n, I, Method::Periodic, limits), Method::Periodic};
    }
    return {run_method(spec, n, I, Method::Hampath, limits), Method::Hampath};
  }
  if (spec.periodic_matrix()) {
    return {run_method(spec, n, I, Method::Periodic, limits), Method::Periodic};
  }
  try {
    return {run_method(spec, n, I, Method::Binomial, limits), Method::Binomial};
  } catch (const NotApplicable&) {
    // fall through to the label-exact recursions
  }
  if (n <= limits.subset_max) {
    return {run_method(spec, n, I, Method::Subset, limits), Method::Subset};
  }
  return {run_method(spec, n, I, Method::Oracle, limits), Method::Oracle};
}

VerificationReport run_verification(const RelationSpec& spec, int n_max, const Limits& limits) {
  VerificationReport report;

  std::optional<StdInvariance> invariance;
  {
    const int bound = std::clamp(n_max, 2, limits.certify_bound);
    const PropertyCertificate cert =
        certify_standardization_invariance(spec, bound, limits.work_limit);
    if (cert.holds) {
      invariance = StdInvariance::certified(cert);
    } else {
      const std::string reason = "not standardization-invariant (S=" +
                                 cert.witness_labels->to_string() + ", I=" +
                                 cert.witness_positions->to_string() + ")";
      report.skipped_methods.push_back({Method::Binomial, reason});
      report.skipped_methods.push_back({Method::IE, reason});
    }
  }

  bool insertion_ok = true;
  try {
    insertion_count(spec, n_max, PositionSet::empty(n_max));
  } catch (const HypothesisFailed& e) {
    insertion_ok = false;
    report.skipped_methods.push_back({Method::Insertion, e.what()});
  }

  const bool periodic_ok = spec.periodic_matrix() != nullptr;
  if (!periodic_ok) {
    report.skipped_methods.push_back({Method::Periodic, "relation is not residue-periodic"});
  }
  const bool succession_ok = succession_family(spec).has_value();
  if (!succession_ok) {
    report.skipped_methods.push_back({Method::Succession, "relation is not a succession family"});
  }

  report.active_methods = {Method::Oracle, Method::Subset, Method::Hampath};
  if (invariance) {
    report.active_methods.push_back(Method::Binomial);
    report.active_methods.push_back(Method::IE);
  }
  if (insertion_ok) report.active_methods.push_back(Method::Insertion);
  if (periodic_ok) report.active_methods.push_back(Method::Periodic);
  if (succession_ok) report.active_methods.push_back(Method::Succession);

  const std::vector<Count> empty_counts = empty_count_table(spec, n_max, limits.dp_max);

  for (int n = 1; n <= n_max; ++n) {
    for (std::uint64_t imask = 0; imask < (std::uint64_t{1} << (n - 1)); ++imask) {
      VerificationCell cell{n, PositionSet(n, imask), {}, true};
      const PositionSet& I = cell.I;

      if (n <= limits.oracle_max) {
        cell.results.push_back({Method::Oracle, count_exact(spec, LabelSet::range(n), I)});
      }
      if (n <= limits.subset_max) {
        cell.results.push_back(
            {Method::Subset, subset_sum_count(spec, LabelSet::range(n), I, limits.subset_max)});
      }
      if (I.is_empty() && n <= limits.dp_max) {
        cell.results.push_back({Method::Hampath, d_empty(spec, n, limits.dp_max)});
      }
      if (invariance) {
        cell.results.push_back({Method::Binomial, binomial_count(n, I, empty_counts, *invariance)});
        cell.results.push_back({Method::IE, ie_closed_form(n, I, empty_counts, *invariance)});
      }
      if (insertion_ok) {
        cell.results.push_back({Method::Insertion, insertion_count(spec, n, I)});
      }
      if (periodic_ok) {
        cell.results.push_back({Method::Periodic, d_periodic(spec, n, I)});
      }
      if (succession_ok && I.is_empty()) {
        cell.results.push_back({Method::Succession, compute_count(spec, n, I, Method::Succession,
                                                                  limits)
                                                        .value});
      }

      for (std::size_t i = 1; i < cell.results.size(); ++i) {
        if (cell.results[i].second != cell.results[0].second) {
          cell.agree = false;
          if (!report.first_discrepancy) {
            report.first_discrepancy =
                Discrepancy{n,
                            I,
                            cell.results[0].first,
                            cell.results[0].second,
                            cell.results[i].first,
                            cell.results[i].second};
          }
        }
      }
      if (!cell.agree) report.agreement = false;
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

std::vector<TableRow> make_table(const RelationSpec& spec, int n_max, bool empty_only,
                                 const Limits& limits) {
  std::vector<TableRow> rows;
  const ResidueMatrix* f = spec.periodic_matrix();

  if (empty_only) {
    for (int n = 1; n <= n_max; ++n) {
      TableRow row{n, PositionSet::empty(n), std::nullopt, std::nullopt, Count(0), Method::Auto};
      if (f) {
        const ContentVector content = ContentVector::canonical(f->modulus(), n);
        const Count words = word_count_empty(ResidueDigraph::from_matrix(*f), content);
        Count value = words;
        for (int r = 0; r < f->modulus(); ++r) {
          value *= factorial(static_cast<unsigned long>(content.at(r)));
        }
        row.content = content;
        row.word_count = words;
        row.value = value;
        row.used = Method::Periodic;
      } else {
        const CountResult result =
            compute_count(spec, n, PositionSet::empty(n), Method::Auto, limits);
        row.value = result.value;
        row.used = result.used;
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

  std::uint64_t cell_count = 0;
  for (int n = 1; n <= n_max; ++n) cell_count += std::uint64_t{1} << (n - 1);
  if (cell_count > 1 << 16) throw SizeLimit("table", static_cast<long long>(cell_count), 1 << 16);

  for (int n = 1; n <= n_max; ++n) {
    for (std::uint64_t imask = 0; imask < (std::uint64_t{1} << (n - 1)); ++imask) {
      const PositionSet I(n, imask);
      const CountResult result = compute_count(spec, n, I, Method::Auto, limits);
      rows.push_back(TableRow{n, I, std::nullopt, std::nullopt, result.value, result.used});
    }
  }
  return rows;
}

}  // namespace xdescent
