#include "xdescent/successions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace xdescent {

RelationSpec SuccessionFamily::spec() const {
  return RelationSpec::difference_set({direction == SuccessionDirection::Forward ? 1LL : -1LL});
}

std::optional<SuccessionDirection> succession_family(const RelationSpec& spec) {
  const auto* deltas = spec.difference_deltas();
  if (deltas == nullptr || deltas->size() != 1) return std::nullopt;
  if (*deltas->begin() == 1) return SuccessionDirection::Forward;
  if (*deltas->begin() == -1) return SuccessionDirection::Reverse;
  return std::nullopt;
}

Count succession_free_count(int n) {
  if (n < 1) throw std::invalid_argument("succession count: n must be positive");
  Count total = 0;
  for (int k = 0; k < n; ++k) {
    Count term = binomial(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(k)) *
                 factorial(static_cast<unsigned long>(n - k));
    if (k % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

Count reverse_succession_free_count(int n) {
  // Complementation pi_i -> n+1-pi_i swaps the two succession kinds.
  return succession_free_count(n);
}

std::vector<int> complement_word(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  std::vector<int> out(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) out[i] = n + 1 - word[i];
  return out;
}

bool verify_succession_complement_bijection(int n) {
  const RelationSpec forward = RelationSpec::difference_set({1});
  const RelationSpec reverse = RelationSpec::difference_set({-1});

  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    const std::vector<int> flipped = complement_word(word);
    if (complement_word(flipped) != word) return false;
    if (xdescent_set(forward, word) != xdescent_set(reverse, flipped)) return false;
  } while (std::next_permutation(word.begin(), word.end()));
  return true;
}

}  // namespace xdescent
