#include <doctest.h>

// Differential sweep over randomly generated relation specs: the structured
// battery cannot reach every combinator shape, so this pits the label-exact
// recursions, the dispatcher and the JSON codec against the oracle on
// machine-generated inputs.

#include <vector>

#include "xdescent/hampath.hpp"
#include "xdescent/methods.hpp"
#include "xdescent/oracle.hpp"
#include "xdescent/randmodel.hpp"
#include "xdescent/recursion.hpp"
#include "xdescent/relation_json.hpp"

using namespace xdescent;

namespace {

RelationSpec random_leaf(SplitMix64& rng) {
  switch (rng.next() % 5) {
    case 0: {
      std::set<std::pair<int, int>> pairs;
      const int count = static_cast<int>(rng.next() % 9);
      for (int i = 0; i < count; ++i) {
        const int a = 1 + static_cast<int>(rng.next() % 6);
        const int b = 1 + static_cast<int>(rng.next() % 6);
        if (a != b) pairs.insert({a, b});
      }
      return RelationSpec::finite_pairs(std::move(pairs));
    }
    case 1:
      return RelationSpec::greater();
    case 2:
      return RelationSpec::less();
    case 3: {
      std::set<long long> deltas;
      do {
        const long long d = static_cast<long long>(rng.next() % 7) - 3;
        if (d != 0) deltas.insert(d);
      } while (rng.next() % 2 == 0);
      return RelationSpec::difference_set(std::move(deltas));
    }
    default: {
      const int m = 2 + static_cast<int>(rng.next() % 3);
      ResidueMatrix f = ResidueMatrix::zeros(m);
      for (int r = 0; r < m; ++r) {
        for (int s = 0; s < m; ++s) f.set(r, s, rng.next() & 1);
      }
      return RelationSpec::periodic(std::move(f));
    }
  }
}

RelationSpec random_spec(SplitMix64& rng, int depth) {
  if (depth == 0 || rng.next() % 2 == 0) return random_leaf(rng);
  switch (rng.next() % 3) {
    case 0:
      return RelationSpec::union_of({random_spec(rng, depth - 1), random_spec(rng, depth - 1)});
    case 1:
      return RelationSpec::intersection_of(
          {random_spec(rng, depth - 1), random_spec(rng, depth - 1)});
    default:
      return RelationSpec::complement_of(random_spec(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("random specs: subset-sum, dispatcher and path DP match the oracle") {
  SplitMix64 rng(0xF022);
  for (int round = 0; round < 40; ++round) {
    CAPTURE(round);
    const RelationSpec spec = random_spec(rng, 2);
    for (int n = 1; n <= 5; ++n) {
      const DescentProfile truth = full_profile(spec, LabelSet::range(n));
      CHECK(d_empty(spec, n) == truth.at(PositionSet::empty(n)));
      for (std::uint64_t imask = 0; imask < (std::uint64_t{1} << (n - 1)); ++imask) {
        const PositionSet I(n, imask);
        const Count expected = truth.at(I);
        CHECK(subset_sum_count(spec, LabelSet::range(n), I) == expected);
        CHECK(compute_count(spec, n, I, Method::Auto).value == expected);
      }
    }
  }
}

TEST_CASE("random specs: JSON round-trip preserves membership") {
  SplitMix64 rng(0xF055);
  for (int round = 0; round < 60; ++round) {
    CAPTURE(round);
    const RelationSpec spec = random_spec(rng, 3);
    const RelationSpec reparsed = relation_from_json(relation_to_json(spec));
    for (int a = 1; a <= 10; ++a) {
      for (int b = 1; b <= 10; ++b) {
        if (a != b) CHECK(reparsed.contains(a, b) == spec.contains(a, b));
      }
    }
  }
}

TEST_CASE("random specs: certificates re-check against the oracle") {
  SplitMix64 rng(0xF077);
  for (int round = 0; round < 25; ++round) {
    CAPTURE(round);
    const RelationSpec spec = random_spec(rng, 1);
    const PropertyCertificate cert = certify_standardization_invariance(spec, 4);
    if (cert.holds) {
      // spot-check: a random subset profile matches the baseline
      const LabelSet S({1, 3, 4});
      const DescentProfile a = full_profile(spec, S);
      const DescentProfile b = full_profile(spec, LabelSet::range(3));
      CHECK(a.by_set == b.by_set);
    } else {
      REQUIRE(cert.witness_labels.has_value());
      REQUIRE(cert.witness_positions.has_value());
      CHECK(count_exact(spec, *cert.witness_labels, *cert.witness_positions) !=
            count_exact(spec, LabelSet::range(cert.witness_labels->size()),
                        *cert.witness_positions));
    }
  }
}
