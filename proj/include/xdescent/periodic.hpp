#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "xdescent/count.hpp"
#include "xdescent/limits.hpp"
#include "xdescent/relation.hpp"

namespace xdescent {

/// Residue-class multiplicities (l_0, ..., l_{m-1}) of a word.
class ContentVector {
 public:
  explicit ContentVector(std::vector<int> counts);

  /// Multiplicities of the residues of 1..n mod m.
  static ContentVector canonical(int m, int n);

  int modulus() const { return static_cast<int>(counts_.size()); }
  int total() const;
  int at(int r) const { return counts_[static_cast<std::size_t>(r)]; }
  const std::vector<int>& counts() const { return counts_; }

  /// "(2,3,2)".
  std::string to_string() const;

  bool operator==(const ContentVector&) const = default;

 private:
  std::vector<int> counts_;
};

/// Digraph on residues with an edge r -> s exactly when f(r,s) = 0; loops
/// are legal (distinct labels may share a residue).
class ResidueDigraph {
 public:
  explicit ResidueDigraph(int m);
  static ResidueDigraph from_matrix(const ResidueMatrix& f);

  int modulus() const { return m_; }
  ResidueDigraph& add_edge(int r, int s);
  bool has_edge(int r, int s) const { return adj_[static_cast<std::size_t>(r * m_ + s)] != 0; }

 private:
  int m_;
  std::vector<std::uint8_t> adj_;
};

/// A_H(content): words of the given content whose every adjacent transition
/// is an edge of H. Empty content yields 0 by convention.
Count word_count_empty(const ResidueDigraph& H, const ContentVector& content);

/// Words of exact content whose step i uses an f=1 transition precisely when
/// i is in I.
Count word_count_with_I(const ResidueMatrix& f, int n, const PositionSet& I,
                        const ContentVector& content);

/// d_X(I;n) for a relation periodic mod m: the constrained word count on the
/// canonical content, times the product of the residue-class factorials.
Count d_periodic(const ResidueMatrix& f, int n, const PositionSet& I);

/// Same, for a RelationSpec whose root is PeriodicMod. Throws NotApplicable
/// otherwise.
Count d_periodic(const RelationSpec& spec, int n, const PositionSet& I);

/// Truncation of the transfer-matrix generating function: the coefficient of
/// x^n y^content is A_H(content) for every content of total n <= max_degree.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int max_degree) : max_degree_(max_degree) {}

  int max_degree() const { return max_degree_; }
  /// 0 when the term is absent.
  Count coefficient(int n, const ContentVector& content) const;

  using TermMap = std::map<std::pair<int, std::vector<int>>, Count>;
  const TermMap& terms() const { return terms_; }
  void add_term(int n, const std::vector<int>& content, const Count& value);

 private:
  int max_degree_;
  TermMap terms_;
};

/// Expands the Neumann series of x 1^T (I - x M(y))^{-1} 1 (with the leading
/// letter weight applied) truncated at x-degree max_degree.
TruncatedSeries transfer_series(const ResidueDigraph& H, int max_degree,
                                int degree_cap = Limits{}.series_degree_cap);

}  // namespace xdescent
