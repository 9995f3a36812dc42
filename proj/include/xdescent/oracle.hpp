#pragma once

#include <cstdint>
#include <map>

#include "xdescent/count.hpp"
#include "xdescent/limits.hpp"
#include "xdescent/relation.hpp"

namespace xdescent {

/// Counts of every X-descent set over the permutations of one label set.
/// Only nonzero entries are stored; the values sum to |S|!.
struct DescentProfile {
  int n = 0;  // |S|
  std::map<std::uint64_t, Count> by_set;

  const Count& at(const PositionSet& I) const;
  Count total() const;
};

/// Ground truth: d_X(I;S) by enumerating all |S|! permutations in
/// lexicographic order. Every other counting path is tested against this.
Count count_exact(const RelationSpec& spec, const LabelSet& S, const PositionSet& I,
                  int size_limit = Limits{}.oracle_max);

DescentProfile full_profile(const RelationSpec& spec, const LabelSet& S,
                            int size_limit = Limits{}.oracle_max);

}  // namespace xdescent
