#include "xdescent/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "xdescent/errors.hpp"

namespace xdescent {

namespace {

const Count kZero = 0;

std::uint64_t descent_mask(const RelationSpec& spec, const std::vector<int>& word) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (spec.contains(word[i], word[i + 1])) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

}  // namespace

const Count& DescentProfile::at(const PositionSet& I) const {
  if (I.ambient() != n) throw std::invalid_argument("descent profile: ambient size mismatch");
  auto it = by_set.find(I.mask());
  return it == by_set.end() ? kZero : it->second;
}

Count DescentProfile::total() const {
  Count sum = 0;
  for (const auto& [mask, count] : by_set) sum += count;
  return sum;
}

Count count_exact(const RelationSpec& spec, const LabelSet& S, const PositionSet& I,
                  int size_limit) {
  const int n = S.size();
  if (I.ambient() != n) throw std::invalid_argument("oracle: I.n must equal |S|");
  if (n > size_limit) throw SizeLimit("oracle", n, size_limit);

  std::vector<int> word = S.labels();  // sorted: lexicographically first
  Count total = 0;
  do {
    if (descent_mask(spec, word) == I.mask()) ++total;
  } while (std::next_permutation(word.begin(), word.end()));
  return total;
}

DescentProfile full_profile(const RelationSpec& spec, const LabelSet& S, int size_limit) {
  const int n = S.size();
  if (n > size_limit) throw SizeLimit("oracle", n, size_limit);

  DescentProfile profile;
  profile.n = n;
  if (n == 0) {
    profile.by_set[0] = 1;  // the empty permutation
    return profile;
  }
  std::vector<int> word = S.labels();
  do {
    profile.by_set[descent_mask(spec, word)] += 1;
  } while (std::next_permutation(word.begin(), word.end()));
  return profile;
}

}  // namespace xdescent
