#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "xdescent/digraph.hpp"
#include "xdescent/limits.hpp"

namespace xdescent {

/// 0/1 table f over (Z/mZ)^2 for residue-periodic relations.
class ResidueMatrix {
 public:
  ResidueMatrix(int m, const std::vector<std::vector<int>>& rows);
  static ResidueMatrix zeros(int m);

  int modulus() const { return m_; }
  bool at(int r, int s) const { return cells_[static_cast<std::size_t>(r * m_ + s)] != 0; }
  ResidueMatrix& set(int r, int s, bool value);

  bool operator==(const ResidueMatrix&) const = default;

 private:
  int m_;
  std::vector<std::uint8_t> cells_;
};

/// Finite label set S, kept strictly increasing.
class LabelSet {
 public:
  LabelSet() = default;
  explicit LabelSet(std::vector<int> labels);

  /// {1, 2, ..., n}.
  static LabelSet range(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<int>& labels() const { return labels_; }
  std::string to_string() const;

  bool operator==(const LabelSet&) const = default;

 private:
  std::vector<int> labels_;
};

/// Descent-position subset I of [n-1], stored as an (n-1)-bit mask
/// (bit i-1 represents position i).
class PositionSet {
 public:
  PositionSet(int n, std::uint64_t mask);
  static PositionSet empty(int n) { return PositionSet(n, 0); }
  static PositionSet full(int n);
  static PositionSet of(int n, const std::vector<int>& positions);

  int ambient() const { return n_; }
  std::uint64_t mask() const { return mask_; }
  bool is_empty() const { return mask_ == 0; }
  bool contains(int i) const;
  int size() const;

  /// Largest position, 0 when empty.
  int max_position() const;
  /// I minus its largest element.
  PositionSet without_max() const;
  /// [n-1] \ I.
  PositionSet complement() const;
  std::vector<int> positions() const;

  /// "{}" or "{1,3}".
  std::string to_string() const;

  bool operator==(const PositionSet&) const = default;
  bool operator<(const PositionSet& o) const {
    return n_ != o.n_ ? n_ < o.n_ : mask_ < o.mask_;
  }

 private:
  int n_;
  std::uint64_t mask_;
};

/// Finite, evaluable description of a relation X on the positive integers.
/// Immutable; membership queries are pure and safe to share across threads.
class RelationSpec {
 public:
  struct FinitePairs {
    std::set<std::pair<int, int>> pairs;
  };
  struct Greater {};
  struct Less {};
  struct DifferenceSet {
    std::set<long long> deltas;  // (a,b) in X iff b - a is listed; deltas nonzero
  };
  struct PeriodicMod {
    ResidueMatrix f;  // (a,b) in X iff f(a mod m, b mod m) = 1
  };
  struct Union {
    std::vector<RelationSpec> parts;
  };
  struct Intersection {
    std::vector<RelationSpec> parts;
  };
  struct Complement {
    std::vector<RelationSpec> of;  // exactly one element; relative to {(a,b): a != b}
  };

  using Node =
      std::variant<FinitePairs, Greater, Less, DifferenceSet, PeriodicMod, Union, Intersection,
                   Complement>;

  static RelationSpec finite_pairs(std::set<std::pair<int, int>> pairs);
  static RelationSpec greater();
  static RelationSpec less();
  static RelationSpec difference_set(std::set<long long> deltas);
  static RelationSpec periodic(ResidueMatrix f);
  static RelationSpec union_of(std::vector<RelationSpec> parts);
  static RelationSpec intersection_of(std::vector<RelationSpec> parts);
  static RelationSpec complement_of(RelationSpec inner);

  /// Membership test for distinct positive a, b. Throws DiagonalQuery on a == b.
  bool contains(int a, int b) const;

  const Node& node() const { return *node_; }

  /// Non-null when the root is a PeriodicMod spec.
  const ResidueMatrix* periodic_matrix() const;
  /// Non-null when the root is a DifferenceSet spec.
  const std::set<long long>* difference_deltas() const;

  std::string describe() const;

 private:
  explicit RelationSpec(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}
  std::shared_ptr<const Node> node_;
};

enum class Property { StandardizationInvariant, Tournament, PeriodicConsistent };

std::string property_name(Property p);

/// Outcome of a bounded empirical check of a structural property. A failed
/// certificate carries a re-checkable counterexample.
struct PropertyCertificate {
  Property property;
  int verified_up_to = 0;
  bool holds = false;
  std::optional<LabelSet> witness_labels;        // standardization: the set S
  std::optional<PositionSet> witness_positions;  // standardization: the set I
  std::optional<std::pair<int, int>> witness_pair;  // tournament / periodicity
};

/// X-descent set of a word of distinct labels: position i is in the result
/// iff (word[i], word[i+1]) lies in the relation.
PositionSet xdescent_set(const RelationSpec& spec, const std::vector<int>& word);

/// The digraph on [n] whose edges are the ordered pairs outside X; its
/// Hamiltonian paths are the descent-free permutations.
Digraph restriction_digraph(const RelationSpec& spec, int n);

/// Checks d_X(I;S) = d_X(I;[|S|]) for every S subset of [n_max] and every I,
/// by brute force. Throws BudgetExceeded when the enumeration would exceed
/// work_limit elementary steps.
PropertyCertificate certify_standardization_invariance(const RelationSpec& spec, int n_max,
                                                       std::uint64_t work_limit = Limits{}.work_limit);

/// Checks that the restriction digraph has exactly one arc per vertex pair
/// for every n <= n_max.
PropertyCertificate certify_tournament(const RelationSpec& spec, int n_max);

/// Checks that membership on [n_max]^2 depends only on the residues mod m.
PropertyCertificate certify_periodic(const RelationSpec& spec, int m, int n_max);

/// Residue table extracted from a spec that certifies periodic mod m up to
/// n_max; nullopt when the certification fails.
std::optional<ResidueMatrix> residue_table(const RelationSpec& spec, int m, int n_max);

}  // namespace xdescent
