#include "xdescent/relation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "xdescent/count.hpp"
#include "xdescent/errors.hpp"
#include "xdescent/oracle.hpp"

namespace xdescent {

// ---------------------------------------------------------------------------
// ResidueMatrix

ResidueMatrix::ResidueMatrix(int m, const std::vector<std::vector<int>>& rows) : m_(m) {
  if (m < 1) throw std::invalid_argument("residue matrix: modulus must be positive");
  if (static_cast<int>(rows.size()) != m) {
    throw std::invalid_argument("residue matrix: expected " + std::to_string(m) + " rows");
  }
  cells_.resize(static_cast<std::size_t>(m) * m);
  for (int r = 0; r < m; ++r) {
    if (static_cast<int>(rows[r].size()) != m) {
      throw std::invalid_argument("residue matrix: row " + std::to_string(r) + " has wrong size");
    }
    for (int s = 0; s < m; ++s) {
      int v = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
      if (v != 0 && v != 1) throw std::invalid_argument("residue matrix: entries must be 0/1");
      cells_[static_cast<std::size_t>(r * m + s)] = static_cast<std::uint8_t>(v);
    }
  }
}

ResidueMatrix ResidueMatrix::zeros(int m) {
  return ResidueMatrix(m, std::vector<std::vector<int>>(static_cast<std::size_t>(m),
                                                        std::vector<int>(static_cast<std::size_t>(m), 0)));
}

ResidueMatrix& ResidueMatrix::set(int r, int s, bool value) {
  if (r < 0 || r >= m_ || s < 0 || s >= m_) throw std::out_of_range("residue matrix index");
  cells_[static_cast<std::size_t>(r * m_ + s)] = value ? 1 : 0;
  return *this;
}

// ---------------------------------------------------------------------------
// LabelSet

LabelSet::LabelSet(std::vector<int> labels) : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] < 1) throw std::invalid_argument("label set: labels must be positive");
    if (i > 0 && labels_[i] <= labels_[i - 1]) {
      throw std::invalid_argument("label set: labels must be strictly increasing");
    }
  }
}

LabelSet LabelSet::range(int n) {
  if (n < 0) throw std::invalid_argument("label range: n must be nonnegative");
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return LabelSet(std::move(v));
}

std::string LabelSet::to_string() const {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) out << ",";
    out << labels_[i];
  }
  out << "}";
  return out.str();
}

// ---------------------------------------------------------------------------
// PositionSet

PositionSet::PositionSet(int n, std::uint64_t mask) : n_(n), mask_(mask) {
  if (n < 0 || n > 63) throw std::invalid_argument("position set: ambient size out of range");
  const std::uint64_t legal = n <= 1 ? 0 : (std::uint64_t{1} << (n - 1)) - 1;
  if (mask & ~legal) {
    throw std::invalid_argument("position set: positions outside [n-1]");
  }
}

PositionSet PositionSet::full(int n) {
  const std::uint64_t legal = n <= 1 ? 0 : (std::uint64_t{1} << (n - 1)) - 1;
  return PositionSet(n, legal);
}

PositionSet PositionSet::of(int n, const std::vector<int>& positions) {
  std::uint64_t mask = 0;
  for (int p : positions) {
    if (p < 1 || p >= n) {
      throw std::invalid_argument("position " + std::to_string(p) + " outside [1," +
                                  std::to_string(n - 1) + "]");
    }
    mask |= std::uint64_t{1} << (p - 1);
  }
  return PositionSet(n, mask);
}

bool PositionSet::contains(int i) const {
  return i >= 1 && i < n_ && ((mask_ >> (i - 1)) & 1);
}

int PositionSet::size() const { return __builtin_popcountll(mask_); }

int PositionSet::max_position() const {
  if (mask_ == 0) return 0;
  return 64 - __builtin_clzll(mask_);
}

PositionSet PositionSet::without_max() const {
  if (mask_ == 0) return *this;
  return PositionSet(n_, mask_ & ~(std::uint64_t{1} << (max_position() - 1)));
}

PositionSet PositionSet::complement() const {
  const std::uint64_t legal = n_ <= 1 ? 0 : (std::uint64_t{1} << (n_ - 1)) - 1;
  return PositionSet(n_, legal & ~mask_);
}

std::vector<int> PositionSet::positions() const {
  std::vector<int> out;
  for (int i = 1; i < n_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string PositionSet::to_string() const {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int p : positions()) {
    if (!first) out << ",";
    out << p;
    first = false;
  }
  out << "}";
  return out.str();
}

// ---------------------------------------------------------------------------
// RelationSpec

RelationSpec RelationSpec::finite_pairs(std::set<std::pair<int, int>> pairs) {
  for (const auto& [a, b] : pairs) {
    if (a < 1 || b < 1) throw std::invalid_argument("finite pairs: entries must be positive");
    if (a == b) throw std::invalid_argument("finite pairs: diagonal pair not allowed");
  }
  return RelationSpec(FinitePairs{std::move(pairs)});
}

RelationSpec RelationSpec::greater() { return RelationSpec(Greater{}); }
RelationSpec RelationSpec::less() { return RelationSpec(Less{}); }

RelationSpec RelationSpec::difference_set(std::set<long long> deltas) {
  if (deltas.count(0)) throw std::invalid_argument("difference set: deltas must be nonzero");
  return RelationSpec(DifferenceSet{std::move(deltas)});
}

RelationSpec RelationSpec::periodic(ResidueMatrix f) { return RelationSpec(PeriodicMod{std::move(f)}); }

RelationSpec RelationSpec::union_of(std::vector<RelationSpec> parts) {
  return RelationSpec(Union{std::move(parts)});
}

RelationSpec RelationSpec::intersection_of(std::vector<RelationSpec> parts) {
  return RelationSpec(Intersection{std::move(parts)});
}

RelationSpec RelationSpec::complement_of(RelationSpec inner) {
  return RelationSpec(Complement{{std::move(inner)}});
}

namespace {

bool contains_impl(const RelationSpec::Node& node, int a, int b) {
  return std::visit(
      [&](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RelationSpec::FinitePairs>) {
          return v.pairs.count({a, b}) != 0;
        } else if constexpr (std::is_same_v<T, RelationSpec::Greater>) {
          return a > b;
        } else if constexpr (std::is_same_v<T, RelationSpec::Less>) {
          return a < b;
        } else if constexpr (std::is_same_v<T, RelationSpec::DifferenceSet>) {
          return v.deltas.count(static_cast<long long>(b) - a) != 0;
        } else if constexpr (std::is_same_v<T, RelationSpec::PeriodicMod>) {
          const int m = v.f.modulus();
          return v.f.at(a % m, b % m);
        } else if constexpr (std::is_same_v<T, RelationSpec::Union>) {
          for (const auto& part : v.parts) {
            if (contains_impl(part.node(), a, b)) return true;
          }
          return false;
        } else if constexpr (std::is_same_v<T, RelationSpec::Intersection>) {
          for (const auto& part : v.parts) {
            if (!contains_impl(part.node(), a, b)) return false;
          }
          return true;
        } else {
          static_assert(std::is_same_v<T, RelationSpec::Complement>);
          return !contains_impl(v.of.front().node(), a, b);
        }
      },
      node);
}

}  // namespace

bool RelationSpec::contains(int a, int b) const {
  if (a == b) throw DiagonalQuery(a);
  if (a < 1 || b < 1) throw std::invalid_argument("membership query with nonpositive label");
  return contains_impl(*node_, a, b);
}

const ResidueMatrix* RelationSpec::periodic_matrix() const {
  if (const auto* p = std::get_if<PeriodicMod>(node_.get())) return &p->f;
  return nullptr;
}

const std::set<long long>* RelationSpec::difference_deltas() const {
  if (const auto* p = std::get_if<DifferenceSet>(node_.get())) return &p->deltas;
  return nullptr;
}

std::string RelationSpec::describe() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RelationSpec::FinitePairs>) {
          return "pairs(" + std::to_string(v.pairs.size()) + ")";
        } else if constexpr (std::is_same_v<T, RelationSpec::Greater>) {
          return "greater";
        } else if constexpr (std::is_same_v<T, RelationSpec::Less>) {
          return "less";
        } else if constexpr (std::is_same_v<T, RelationSpec::DifferenceSet>) {
          std::ostringstream out;
          out << "diff{";
          bool first = true;
          for (long long d : v.deltas) {
            if (!first) out << ",";
            out << d;
            first = false;
          }
          out << "}";
          return out.str();
        } else if constexpr (std::is_same_v<T, RelationSpec::PeriodicMod>) {
          return "periodic(mod " + std::to_string(v.f.modulus()) + ")";
        } else if constexpr (std::is_same_v<T, RelationSpec::Union>) {
          return "union(" + std::to_string(v.parts.size()) + ")";
        } else if constexpr (std::is_same_v<T, RelationSpec::Intersection>) {
          return "intersection(" + std::to_string(v.parts.size()) + ")";
        } else {
          return "complement(" + v.of.front().describe() + ")";
        }
      },
      *node_);
}

std::string property_name(Property p) {
  switch (p) {
    case Property::StandardizationInvariant:
      return "standardization-invariance";
    case Property::Tournament:
      return "tournament";
    case Property::PeriodicConsistent:
      return "periodic-consistency";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Operations

PositionSet xdescent_set(const RelationSpec& spec, const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  std::set<int> seen;
  for (int x : word) {
    if (!seen.insert(x).second) throw RepeatedLabel(x);
  }
  std::uint64_t mask = 0;
  for (int i = 1; i < n; ++i) {
    if (spec.contains(word[static_cast<std::size_t>(i - 1)], word[static_cast<std::size_t>(i)])) {
      mask |= std::uint64_t{1} << (i - 1);
    }
  }
  return PositionSet(n, mask);
}

Digraph restriction_digraph(const RelationSpec& spec, int n) {
  if (n < 1) throw std::invalid_argument("restriction digraph: n must be positive");
  Digraph d(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j && !spec.contains(i, j)) d.add_edge(i, j);
    }
  }
  return d;
}

namespace {

// Enumeration work for one label set: k! permutations, each scanning k-1 pairs.
std::uint64_t profile_work(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f * static_cast<std::uint64_t>(std::max(1, k - 1));
}

}  // namespace

PropertyCertificate certify_standardization_invariance(const RelationSpec& spec, int n_max,
                                                       std::uint64_t work_limit) {
  if (n_max < 2) throw std::invalid_argument("standardization certificate needs n_max >= 2");

  std::uint64_t estimated = 0;
  for (int k = 2; k <= n_max; ++k) {
    Count subsets = binomial(static_cast<unsigned long>(n_max), static_cast<unsigned long>(k));
    Count work = subsets * Count(static_cast<unsigned long>(profile_work(k)));
    estimated += work.fits_ulong_p() ? work.get_ui() : ~std::uint64_t{0} / 2;
  }
  if (estimated > work_limit) {
    throw BudgetExceeded("standardization certificate", estimated, work_limit);
  }

  PropertyCertificate cert;
  cert.property = Property::StandardizationInvariant;
  cert.verified_up_to = n_max;
  cert.holds = true;

  // Baseline profiles on [k]; then every size-k subset of [n_max] must match.
  std::vector<DescentProfile> baseline(static_cast<std::size_t>(n_max) + 1);
  for (int k = 2; k <= n_max; ++k) {
    baseline[static_cast<std::size_t>(k)] = full_profile(spec, LabelSet::range(k), n_max);
  }

  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << n_max); ++subset) {
    const int k = __builtin_popcountll(subset);
    if (k < 2) continue;
    std::vector<int> labels;
    for (int i = 0; i < n_max; ++i) {
      if ((subset >> i) & 1) labels.push_back(i + 1);
    }
    const LabelSet S(labels);
    const DescentProfile profile = full_profile(spec, S, n_max);
    const DescentProfile& base = baseline[static_cast<std::size_t>(k)];
    for (std::uint64_t imask = 0; imask < (std::uint64_t{1} << (k - 1)); ++imask) {
      const PositionSet I(k, imask);
      if (profile.at(I) != base.at(I)) {
        cert.holds = false;
        cert.witness_labels = S;
        cert.witness_positions = I;
        return cert;
      }
    }
  }
  return cert;
}

PropertyCertificate certify_tournament(const RelationSpec& spec, int n_max) {
  PropertyCertificate cert;
  cert.property = Property::Tournament;
  cert.verified_up_to = n_max;
  cert.holds = true;
  // Restriction digraphs are nested, so all pairs appear in the largest one.
  for (int i = 1; i <= n_max; ++i) {
    for (int j = i + 1; j <= n_max; ++j) {
      const bool ij = spec.contains(i, j);
      const bool ji = spec.contains(j, i);
      if (ij == ji) {
        cert.holds = false;
        cert.witness_pair = {i, j};
        return cert;
      }
    }
  }
  return cert;
}

PropertyCertificate certify_periodic(const RelationSpec& spec, int m, int n_max) {
  if (m < 1) throw std::invalid_argument("periodicity certificate: modulus must be positive");
  PropertyCertificate cert;
  cert.property = Property::PeriodicConsistent;
  cert.verified_up_to = n_max;
  cert.holds = true;

  // Reference value per residue pair: smallest distinct representatives.
  auto reference = [&](int r, int s) {
    int a = r == 0 ? m : r;
    int b = s == 0 ? m : s;
    if (a == b) b += m;
    return spec.contains(a, b);
  };

  for (int a = 1; a <= n_max && cert.holds; ++a) {
    for (int b = 1; b <= n_max; ++b) {
      if (a == b) continue;
      if (spec.contains(a, b) != reference(a % m, b % m)) {
        cert.holds = false;
        cert.witness_pair = {a, b};
        break;
      }
    }
  }
  return cert;
}

std::optional<ResidueMatrix> residue_table(const RelationSpec& spec, int m, int n_max) {
  const PropertyCertificate cert = certify_periodic(spec, m, n_max);
  if (!cert.holds) return std::nullopt;
  ResidueMatrix f = ResidueMatrix::zeros(m);
  for (int r = 0; r < m; ++r) {
    for (int s = 0; s < m; ++s) {
      int a = r == 0 ? m : r;
      int b = s == 0 ? m : s;
      if (a == b) b += m;
      f.set(r, s, spec.contains(a, b));
    }
  }
  return f;
}

}  // namespace xdescent
