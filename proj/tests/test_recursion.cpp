#include <doctest.h>

#include "battery.hpp"
#include "xdescent/errors.hpp"
#include "xdescent/hampath.hpp"
#include "xdescent/oracle.hpp"
#include "xdescent/randmodel.hpp"
#include "xdescent/recursion.hpp"

using namespace xdescent;
using xdescent::testing::battery;

namespace {

StdInvariance certified_greater() {
  return StdInvariance::certified(
      certify_standardization_invariance(RelationSpec::greater(), 5));
}

}  // namespace

TEST_CASE("subset-sum recursion on hand-checked inputs") {
  // 3 * d(empty;1) d(empty;2) - d(empty;3) = 3 - 1
  CHECK(subset_sum_count(RelationSpec::greater(), LabelSet::range(3), PositionSet::of(3, {1})) ==
        2);
  // base case delegation
  for (const auto& [name, spec] : battery()) {
    CAPTURE(name);
    CHECK(subset_sum_count(spec, LabelSet::range(5), PositionSet::empty(5)) ==
          d_empty(spec, 5));
  }
  CHECK_THROWS_AS(subset_sum_count(RelationSpec::greater(), LabelSet::range(15),
                                   PositionSet::empty(15)),
                  SizeLimit);
}

TEST_CASE("subset-sum equals the oracle on the whole battery") {
  for (const auto& [name, spec] : battery()) {
    CAPTURE(name);
    for (int n = 1; n <= 6; ++n) {
      const DescentProfile truth = full_profile(spec, LabelSet::range(n));
      for (std::uint64_t imask = 0; imask < (std::uint64_t{1} << (n - 1)); ++imask) {
        const PositionSet I(n, imask);
        CHECK(subset_sum_count(spec, LabelSet::range(n), I) == truth.at(I));
      }
    }
  }
}

TEST_CASE("subset-sum handles arbitrary label sets") {
  const LabelSet labels({2, 3, 5, 8, 9});
  for (const auto& [name, spec] : battery()) {
    CAPTURE(name);
    const DescentProfile truth = full_profile(spec, labels);
    for (std::uint64_t imask = 0; imask < 16; ++imask) {
      const PositionSet I(5, imask);
      CHECK(subset_sum_count(spec, labels, I) == truth.at(I));
    }
  }
}

TEST_CASE("subset-sum at sizes 7 and 8") {
  // every I at size 8 for a spread of relation kinds
  const auto spread = {RelationSpec::greater(), RelationSpec::difference_set({1}),
                       testing::mod3_successor(), RelationSpec::finite_pairs({{1, 2}})};
  for (const auto& spec : spread) {
    const DescentProfile truth = full_profile(spec, LabelSet::range(8));
    for (std::uint64_t imask = 0; imask < 128; ++imask) {
      const PositionSet I(8, imask);
      CHECK(subset_sum_count(spec, LabelSet::range(8), I) == truth.at(I));
    }
  }
  // sampled I at size 8 across the whole battery
  SplitMix64 rng(17);
  for (const auto& [name, spec] : battery()) {
    CAPTURE(name);
    const DescentProfile truth = full_profile(spec, LabelSet::range(8));
    for (int round = 0; round < 8; ++round) {
      const PositionSet I(8, rng.next() % 128);
      CHECK(subset_sum_count(spec, LabelSet::range(8), I) == truth.at(I));
    }
  }
}

TEST_CASE("binomial recursion under a certificate") {
  const StdInvariance witness = certified_greater();
  const auto empty_counts = empty_count_table(RelationSpec::greater(), 8);

  CHECK(binomial_count(4, PositionSet::of(4, {1}), empty_counts, witness) == 3);
  CHECK(binomial_count(3, PositionSet::of(3, {1, 2}), empty_counts, witness) == 1);

  SUBCASE("d({1};n) = n c - c when the descent-free counts are the constant c") {
    // c = 1 is the only value consistent with d(empty;1) = 1; classical
    // descents realize it
    for (int n = 2; n <= 8; ++n) {
      CHECK(binomial_count(n, PositionSet::of(n, {1}), empty_counts, witness) == n - 1);
    }
    // the formula's shape for a general constant c, pinned from n = 3 where
    // every gap factor is c
    const Count c = 7;
    std::vector<Count> constant(9, c);
    constant[0] = 1;
    constant[1] = 1;
    for (int n = 3; n <= 8; ++n) {
      CHECK(binomial_count(n, PositionSet::of(n, {1}), constant, StdInvariance::waived()) ==
            Count(n) * c - c);
    }
  }
}

TEST_CASE("a refuted certificate cannot be turned into a witness") {
  const PropertyCertificate cert =
      certify_standardization_invariance(RelationSpec::finite_pairs({{1, 2}}), 3);
  REQUIRE_FALSE(cert.holds);
  CHECK_THROWS_AS(StdInvariance::certified(cert), NotCertified);

  const PropertyCertificate wrong_kind = certify_tournament(RelationSpec::greater(), 4);
  CHECK_THROWS_AS(StdInvariance::certified(wrong_kind), NotCertified);
}

TEST_CASE("inclusion-exclusion expansion") {
  const StdInvariance witness = certified_greater();
  const auto empty_counts = empty_count_table(RelationSpec::greater(), 8);

  // the four subsets of {1,2}: 1 - 3 - 3 + 6
  CHECK(ie_closed_form(3, PositionSet::of(3, {1, 2}), empty_counts, witness) == 1);
  for (int n = 1; n <= 8; ++n) {
    CHECK(ie_closed_form(n, PositionSet::empty(n), empty_counts, witness) ==
          empty_counts[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("binomial, IE and subset-sum agree wherever invariance holds") {
  const auto invariant_specs = {RelationSpec::greater(), RelationSpec::less(),
                                RelationSpec::complement_of(RelationSpec::greater()),
                                RelationSpec::finite_pairs({})};
  for (const auto& spec : invariant_specs) {
    const StdInvariance witness =
        StdInvariance::certified(certify_standardization_invariance(spec, 5));
    const auto empty_counts = empty_count_table(spec, 8);
    for (int n = 1; n <= 8; ++n) {
      const DescentProfile truth = full_profile(spec, LabelSet::range(n));
      for (std::uint64_t imask = 0; imask < (std::uint64_t{1} << (n - 1)); ++imask) {
        const PositionSet I(n, imask);
        const Count expected = truth.at(I);
        CHECK(binomial_count(n, I, empty_counts, witness) == expected);
        CHECK(ie_closed_form(n, I, empty_counts, witness) == expected);
      }
    }
  }
}

TEST_CASE("insertion recursion") {
  // d({1};4) = d({1};3) + d(empty;3) = 2 + 1
  CHECK(insertion_count(RelationSpec::greater(), 4, PositionSet::of(4, {1})) == 3);

  CHECK_THROWS_AS(insertion_count(RelationSpec::less(), 5, PositionSet::empty(5)),
                  HypothesisFailed);
  try {
    insertion_count(RelationSpec::less(), 5, PositionSet::empty(5));
  } catch (const HypothesisFailed& e) {
    // the violating pair is re-checkable
    const auto [a, b] = e.pair;
    CHECK(RelationSpec::less().contains(a, b) != e.expected_in);
  }

  SUBCASE("matches the oracle for classical descents on every I") {
    for (int n = 1; n <= 8; ++n) {
      const DescentProfile truth = full_profile(RelationSpec::greater(), LabelSet::range(n));
      for (std::uint64_t imask = 0; imask < (std::uint64_t{1} << (n - 1)); ++imask) {
        const PositionSet I(n, imask);
        CHECK(insertion_count(RelationSpec::greater(), n, I) == truth.at(I));
      }
    }
  }
}

TEST_CASE("polynomial profile for classical descents") {
  const StdInvariance witness = certified_greater();

  SUBCASE("I = {1} gives n - 1") {
    const PolynomialInN poly =
        polynomial_profile(RelationSpec::greater(), PositionSet::of(5, {1}), 1, witness);
    CHECK(poly.degree() == 1);
    CHECK(poly.valid_from() == 1);
    CHECK(poly.coefficients()[0] == Rational(-1));
    CHECK(poly.coefficients()[1] == Rational(1));
  }
  SUBCASE("I = {2} gives (n^2 - n - 2)/2") {
    const PolynomialInN poly =
        polynomial_profile(RelationSpec::greater(), PositionSet::of(5, {2}), 1, witness);
    CHECK(poly.degree() == 2);
    CHECK(poly.evaluate(3) == 2);
    CHECK(poly.evaluate(7) == 20);  // C(7,2) - 1
    for (int n = 3; n <= 7; ++n) {
      CHECK(poly.evaluate(n) ==
            count_exact(RelationSpec::greater(), LabelSet::range(n), PositionSet::of(n, {2})));
    }
  }
  SUBCASE("I = {1,2} matches the oracle from n = 3 on") {
    const PolynomialInN poly =
        polynomial_profile(RelationSpec::greater(), PositionSet::of(5, {1, 2}), 1, witness);
    CHECK(poly.degree() == 2);
    CHECK(poly.evaluate(2) == 0);  // position 2 is not realizable at n = 2
    for (int n = 3; n <= 8; ++n) {
      CHECK(poly.evaluate(n) ==
            count_exact(RelationSpec::greater(), LabelSet::range(n), PositionSet::of(n, {1, 2})));
    }
  }
  SUBCASE("leading coefficient is d(I^-;m) c / m!") {
    for (std::uint64_t imask : {0b1000ULL, 0b1010ULL, 0b1111ULL}) {
      const PositionSet I(6, imask);
      const int m = I.max_position();
      const PolynomialInN poly = polynomial_profile(RelationSpec::greater(), I, 1, witness);
      REQUIRE(poly.degree() == m);
      const Count top = count_exact(RelationSpec::greater(), LabelSet::range(m),
                                    PositionSet(m, I.without_max().mask()));
      CHECK(poly.coefficients().back() ==
            Rational(top, factorial(static_cast<unsigned long>(m))));
    }
  }
  SUBCASE("varying descent-free counts are rejected") {
    CHECK_THROWS_AS(polynomial_profile(RelationSpec::difference_set({1}),
                                       PositionSet::of(4, {1}), 1, StdInvariance::waived()),
                    NotConstant);
  }
}
