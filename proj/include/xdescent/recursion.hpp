#pragma once

#include <vector>

#include "xdescent/count.hpp"
#include "xdescent/limits.hpp"
#include "xdescent/oracle.hpp"
#include "xdescent/relation.hpp"

namespace xdescent {

/// Witness that standardization invariance was certified (or knowingly
/// waived); the binomial-collapse operations require one.
class StdInvariance {
 public:
  /// From a holding certificate; throws NotCertified otherwise.
  static StdInvariance certified(const PropertyCertificate& cert);
  /// Explicit caller override.
  static StdInvariance waived();

  bool is_waiver() const { return waived_; }
  int bound() const { return bound_; }

 private:
  StdInvariance(bool waived, int bound) : waived_(waived), bound_(bound) {}
  bool waived_;
  int bound_;
};

/// General recursion, valid for every relation and label set:
///   d(I;S) = sum_{A subset S, |A| = max(I)} d(I^-;A) d(empty;S\A) - d(I^-;S),
/// memoized on (label mask, position mask). The I = empty base case counts
/// Hamiltonian paths on the digraph induced by S.
Count subset_sum_count(const RelationSpec& spec, const LabelSet& S, const PositionSet& I,
                       int size_limit = Limits{}.subset_max);

/// Binomial collapse under standardization invariance:
///   d(I;n) = C(n,m) d(I^-;m) d(empty;n-m) - d(I^-;n), m = max(I).
/// empty_counts[k] must hold d(empty;k) for 0 <= k <= n.
Count binomial_count(int n, const PositionSet& I, const std::vector<Count>& empty_counts,
                     const StdInvariance& witness);

/// Fully expanded inclusion-exclusion over which candidate descent positions
/// are selected; same inputs and result as binomial_count.
Count ie_closed_form(int n, const PositionSet& I, const std::vector<Count>& empty_counts,
                     const StdInvariance& witness);

/// Cancellation-free insertion recursion, available when every larger label
/// k satisfies (k,i) in X and (i,k) not in X for all i < k at every size on
/// the way up. Throws HypothesisFailed with the violating pair otherwise.
Count insertion_count(const RelationSpec& spec, int n, const PositionSet& I);

/// Polynomial in n with exact rational coefficients, constant term first.
/// Agreement with d(I;n) is guaranteed for n >= valid_from only.
class PolynomialInN {
 public:
  PolynomialInN(std::vector<Rational> coefficients, int valid_from);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  int valid_from() const { return valid_from_; }

  Rational evaluate_rational(long n) const;
  /// Exact integer value; throws std::domain_error if the value is not integral.
  Count evaluate(long n) const;

 private:
  std::vector<Rational> coeffs_;
  int valid_from_;
};

/// The degree-max(I) polynomial for n -> d(I;n), obtained by expanding the
/// inclusion-exclusion form symbolically when d(empty;n) is the constant c.
/// Verifies constancy over n = 1..verify_window and throws NotConstant on
/// the first mismatch.
PolynomialInN polynomial_profile(const RelationSpec& spec, const PositionSet& I, const Count& c,
                                 const StdInvariance& witness, int verify_window = 8);

}  // namespace xdescent
