#include "xdescent/recursion.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "xdescent/errors.hpp"
#include "xdescent/hampath.hpp"

namespace xdescent {

StdInvariance StdInvariance::certified(const PropertyCertificate& cert) {
  if (cert.property != Property::StandardizationInvariant) {
    throw NotCertified("witness requires a standardization-invariance certificate, got " +
                       property_name(cert.property));
  }
  if (!cert.holds) {
    throw NotCertified("standardization invariance refuted up to n = " +
                       std::to_string(cert.verified_up_to));
  }
  return StdInvariance(false, cert.verified_up_to);
}

StdInvariance StdInvariance::waived() { return StdInvariance(true, 0); }

// ---------------------------------------------------------------------------
// Subset-sum recursion

namespace {

class SubsetSumComputation {
 public:
  SubsetSumComputation(const RelationSpec& spec, std::vector<int> labels)
      : spec_(spec), labels_(std::move(labels)) {}

  Count run(std::uint64_t label_mask, std::uint64_t position_mask) {
    if (position_mask == 0) return descent_free(label_mask);

    const std::uint64_t key = (label_mask << 32) | position_mask;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int m = 64 - __builtin_clzll(position_mask);  // max position
    const std::uint64_t rest = position_mask & ~(std::uint64_t{1} << (m - 1));

    // Sum over size-m label subsets A of the current set.
    std::vector<int> bits;
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
      if ((label_mask >> i) & 1) bits.push_back(i);
    }
    const int k = static_cast<int>(bits.size());

    Count total = 0;
    std::vector<int> pick(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::uint64_t a_mask = 0;
      for (int i : pick) a_mask |= std::uint64_t{1} << bits[static_cast<std::size_t>(i)];
      total += run(a_mask, rest) * descent_free(label_mask & ~a_mask);

      int i = m - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == k - m + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < m; ++j) {
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
    total -= run(label_mask, rest);
    if (total < 0) throw std::logic_error("subset-sum recursion went negative");

    memo_.emplace(key, total);
    return total;
  }

 private:
  // d(empty; subset): Hamiltonian paths on the digraph induced by the subset.
  Count descent_free(std::uint64_t label_mask) {
    if (label_mask == 0) return 1;
    if (auto it = memo_.find(label_mask << 32); it != memo_.end()) return it->second;

    std::vector<int> chosen;
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
      if ((label_mask >> i) & 1) chosen.push_back(labels_[static_cast<std::size_t>(i)]);
    }
    const int k = static_cast<int>(chosen.size());
    Digraph d(k);
    for (int u = 0; u < k; ++u) {
      for (int v = 0; v < k; ++v) {
        if (u != v && !spec_.contains(chosen[static_cast<std::size_t>(u)],
                                      chosen[static_cast<std::size_t>(v)])) {
          d.add_edge(u + 1, v + 1);
        }
      }
    }
    Count result = count_paths(d);
    memo_.emplace(label_mask << 32, result);
    return result;
  }

  const RelationSpec& spec_;
  std::vector<int> labels_;
  std::unordered_map<std::uint64_t, Count> memo_;
};

}  // namespace

Count subset_sum_count(const RelationSpec& spec, const LabelSet& S, const PositionSet& I,
                       int size_limit) {
  const int n = S.size();
  if (I.ambient() != n) throw std::invalid_argument("subset-sum: I.n must equal |S|");
  // the memo packs (label mask, position mask) into 64 bits
  if (n > size_limit || n > 31) throw SizeLimit("subset-sum", n, std::min(size_limit, 31));
  if (n == 0) return I.is_empty() ? 1 : 0;

  SubsetSumComputation comp(spec, S.labels());
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  return comp.run(all, I.mask());
}

// ---------------------------------------------------------------------------
// Binomial collapse and its inclusion-exclusion expansion

namespace {

void check_empty_counts(int n, const std::vector<Count>& empty_counts) {
  if (static_cast<int>(empty_counts.size()) <= n) {
    throw std::invalid_argument("empty-count table must cover 0..n");
  }
}

using AmbientMaskMemo = std::map<std::pair<int, std::uint64_t>, Count>;

Count binomial_rec(int n, std::uint64_t imask, const std::vector<Count>& empty_counts,
                   AmbientMaskMemo& memo) {
  if (imask == 0) return empty_counts[static_cast<std::size_t>(n)];
  if (auto it = memo.find({n, imask}); it != memo.end()) return it->second;
  const int m = 64 - __builtin_clzll(imask);
  const std::uint64_t rest = imask & ~(std::uint64_t{1} << (m - 1));
  Count result = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(m)) *
                     binomial_rec(m, rest, empty_counts, memo) *
                     empty_counts[static_cast<std::size_t>(n - m)] -
                 binomial_rec(n, rest, empty_counts, memo);
  memo.emplace(std::pair{n, imask}, result);
  return result;
}

}  // namespace

Count binomial_count(int n, const PositionSet& I, const std::vector<Count>& empty_counts,
                     const StdInvariance&) {
  if (I.ambient() != n) throw std::invalid_argument("binomial recursion: I.n must equal n");
  check_empty_counts(n, empty_counts);
  AmbientMaskMemo memo;
  Count result = binomial_rec(n, I.mask(), empty_counts, memo);
  if (result < 0) throw std::logic_error("binomial recursion went negative");
  return result;
}

Count ie_closed_form(int n, const PositionSet& I, const std::vector<Count>& empty_counts,
                     const StdInvariance&) {
  if (I.ambient() != n) throw std::invalid_argument("inclusion-exclusion: I.n must equal n");
  check_empty_counts(n, empty_counts);

  const std::vector<int> elems = I.positions();
  const int k = static_cast<int>(elems.size());

  Count total = 0;
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << k); ++sub) {
    std::vector<int> selected;
    for (int j = 0; j < k; ++j) {
      if ((sub >> j) & 1) selected.push_back(elems[static_cast<std::size_t>(j)]);
    }
    const int r = static_cast<int>(selected.size());

    Count term = 1;
    int prev = 0;
    for (int t = 0; t < r; ++t) {
      const int gap = selected[static_cast<std::size_t>(t)] - prev;
      term *= empty_counts[static_cast<std::size_t>(gap)];
      if (t + 1 < r) {
        term *= binomial(static_cast<unsigned long>(selected[static_cast<std::size_t>(t + 1)]),
                         static_cast<unsigned long>(selected[static_cast<std::size_t>(t)]));
      }
      prev = selected[static_cast<std::size_t>(t)];
    }
    if (r > 0) {
      term *= binomial(static_cast<unsigned long>(n),
                       static_cast<unsigned long>(selected[static_cast<std::size_t>(r - 1)]));
    }
    term *= empty_counts[static_cast<std::size_t>(n - prev)];

    if ((k - r) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  if (total < 0) throw std::logic_error("inclusion-exclusion went negative");
  return total;
}

// ---------------------------------------------------------------------------
// Insertion recursion

namespace {

class InsertionComputation {
 public:
  explicit InsertionComputation(const RelationSpec& spec) : spec_(spec) {}

  Count run(int size, std::uint64_t imask) {
    if (size < 1) return imask == 0 ? 1 : 0;
    // Positions above size-1 cannot be realized.
    if ((imask >> (size - 1)) != 0) return 0;
    if (size <= 2) {
      return count_exact(spec_, LabelSet::range(size), PositionSet(size, imask));
    }
    const std::pair<int, std::uint64_t> key{size, imask};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    check_hypothesis(size);

    // Insert the largest label `size` into permutations of [size-1].
    const PositionSet I(size, imask);
    const std::vector<int> elems = I.positions();
    const int len = static_cast<int>(elems.size());

    Count total = run(size - 1, imask);
    for (int k = 0; k < len; ++k) {
      const int ik = elems[static_cast<std::size_t>(k)];
      if (I.contains(ik - 1)) continue;  // predecessor position present: not a block start

      // Positions after the insertion point shift down by one.
      std::uint64_t before = 0;
      for (int j = 0; j < k; ++j) {
        before |= std::uint64_t{1} << (elems[static_cast<std::size_t>(j)] - 1);
      }
      std::uint64_t after = 0;
      for (int j = k + 1; j < len; ++j) {
        const int shifted = elems[static_cast<std::size_t>(j)] - 1;
        if (shifted >= 1) after |= std::uint64_t{1} << (shifted - 1);
      }

      if (ik >= 2) {
        // The bridged pair keeps a descent at ik-1.
        std::uint64_t bridged = before | after;
        bridged |= std::uint64_t{1} << (ik - 2);
        total += run(size - 1, bridged);
      }
      total += run(size - 1, before | after);
    }

    memo_.emplace(key, total);
    return total;
  }

 private:
  void check_hypothesis(int size) {
    if (checked_.count(size)) return;
    for (int i = 1; i < size; ++i) {
      if (!spec_.contains(size, i)) throw HypothesisFailed(size, i, true);
      if (spec_.contains(i, size)) throw HypothesisFailed(i, size, false);
    }
    checked_.insert(size);
  }

  const RelationSpec& spec_;
  std::set<int> checked_;
  std::map<std::pair<int, std::uint64_t>, Count> memo_;
};

}  // namespace

Count insertion_count(const RelationSpec& spec, int n, const PositionSet& I) {
  if (I.ambient() != n) throw std::invalid_argument("insertion recursion: I.n must equal n");
  InsertionComputation comp(spec);
  return comp.run(n, I.mask());
}

// ---------------------------------------------------------------------------
// Polynomial profile

PolynomialInN::PolynomialInN(std::vector<Rational> coefficients, int valid_from)
    : coeffs_(std::move(coefficients)), valid_from_(valid_from) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(Rational(0));
}

Rational PolynomialInN::evaluate_rational(long n) const {
  Rational value = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    value = value * Rational(n) + *it;
  }
  return value;
}

Count PolynomialInN::evaluate(long n) const {
  Rational value = evaluate_rational(n);
  value.canonicalize();
  if (value.get_den() != 1) {
    throw std::domain_error("polynomial value is not an integer at n = " + std::to_string(n));
  }
  return value.get_num();
}

namespace {

// Falling-factorial expansion of C(n, k) as a polynomial in n.
std::vector<Rational> binomial_polynomial(int k) {
  std::vector<Rational> poly{Rational(1)};
  for (int j = 0; j < k; ++j) {
    // multiply by (n - j)
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * Rational(j);
    }
    poly = std::move(next);
  }
  const Rational inv_fact = Rational(Count(1), factorial(static_cast<unsigned long>(k)));
  for (auto& c : poly) c *= inv_fact;
  return poly;
}

}  // namespace

PolynomialInN polynomial_profile(const RelationSpec& spec, const PositionSet& I, const Count& c,
                                 const StdInvariance&, int verify_window) {
  const int m = I.max_position();
  const int window = std::max(verify_window, m + 1);
  for (int k = 1; k <= window; ++k) {
    const Count actual = d_empty(spec, k);
    if (actual != c) throw NotConstant(k, to_decimal(c), to_decimal(actual));
  }

  const std::vector<int> elems = I.positions();
  const int k = static_cast<int>(elems.size());

  std::vector<Rational> poly{Rational(0)};
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << k); ++sub) {
    std::vector<int> selected;
    for (int j = 0; j < k; ++j) {
      if ((sub >> j) & 1) selected.push_back(elems[static_cast<std::size_t>(j)]);
    }
    const int r = static_cast<int>(selected.size());

    // Constant part: chained binomials and one descent-free factor per gap.
    Count scalar = 1;
    for (int t = 0; t + 1 < r; ++t) {
      scalar *= binomial(static_cast<unsigned long>(selected[static_cast<std::size_t>(t + 1)]),
                         static_cast<unsigned long>(selected[static_cast<std::size_t>(t)]));
    }
    Count cpow = 1;
    for (int t = 0; t <= r; ++t) cpow *= c;
    scalar *= cpow;

    const bool negative = (k - r) % 2 != 0;
    std::vector<Rational> term =
        r == 0 ? std::vector<Rational>{Rational(1)}
               : binomial_polynomial(selected[static_cast<std::size_t>(r - 1)]);
    if (poly.size() < term.size()) poly.resize(term.size(), Rational(0));
    const Rational factor = negative ? Rational(-scalar) : Rational(scalar);
    for (std::size_t i = 0; i < term.size(); ++i) poly[i] += term[i] * factor;
  }

  return PolynomialInN(std::move(poly), m);
}

}  // namespace xdescent
