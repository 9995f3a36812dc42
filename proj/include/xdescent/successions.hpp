#pragma once

#include <optional>
#include <vector>

#include "xdescent/count.hpp"
#include "xdescent/relation.hpp"

namespace xdescent {

/// The two difference-set relations with a closed form: adjacent steps of +1
/// (successions) or -1 (reverse successions).
enum class SuccessionDirection { Forward, Reverse };

struct SuccessionFamily {
  SuccessionDirection direction;
  RelationSpec spec() const;
};

/// Identifies DifferenceSet({1}) / DifferenceSet({-1}) specs.
std::optional<SuccessionDirection> succession_family(const RelationSpec& spec);

/// Permutations of [n] with no succession:
///   sum_{k=0}^{n-1} (-1)^k C(n-1,k) (n-k)!.
Count succession_free_count(int n);

/// Equal to succession_free_count via the complementation bijection
/// pi_i -> n+1-pi_i.
Count reverse_succession_free_count(int n);

/// The complement word (n+1-pi_1, ..., n+1-pi_n).
std::vector<int> complement_word(const std::vector<int>& word);

/// Checks on all of S_n that complementation is an involution and swaps the
/// succession and reverse-succession descent sets position-wise.
bool verify_succession_complement_bijection(int n);

}  // namespace xdescent
