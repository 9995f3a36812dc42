#include <doctest.h>

#include <sstream>

#include "battery.hpp"
#include "xdescent/errors.hpp"
#include "xdescent/hampath.hpp"
#include "xdescent/oracle.hpp"
#include "xdescent/randmodel.hpp"

using namespace xdescent;
using xdescent::testing::battery;

namespace {

Digraph random_digraph(int n, SplitMix64& rng) {
  Digraph d(n);
  for (int u = 1; u <= n; ++u) {
    for (int v = 1; v <= n; ++v) {
      if (u != v && rng.next_unit() < 0.5) d.add_edge(u, v);
    }
  }
  return d;
}

Digraph random_tournament(int n, SplitMix64& rng) {
  Digraph d(n);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (rng.next() & 1) {
        d.add_edge(u, v);
      } else {
        d.add_edge(v, u);
      }
    }
  }
  return d;
}

Digraph transitive_tournament(int n) {
  Digraph d(n);
  for (int u = 1; u <= n; ++u) {
    for (int v = 1; v < u; ++v) d.add_edge(u, v);
  }
  return d;
}

Digraph three_cycle() {
  Digraph d(3);
  d.add_edge(1, 2);
  d.add_edge(2, 3);
  d.add_edge(3, 1);
  return d;
}

}  // namespace

TEST_CASE("count_paths on canonical digraphs") {
  CHECK(count_paths(Digraph::complete(3)) == 6);
  CHECK(count_paths(three_cycle()) == 3);
  for (int n = 1; n <= 9; ++n) {
    CHECK(count_paths(transitive_tournament(n)) == 1);
  }
  CHECK_THROWS_AS(count_paths(Digraph(25)), SizeLimit);
}

TEST_CASE("count_paths stays exact past the 64-bit boundary") {
  // n = 21 routes through the 128-bit counters; 21! exceeds 2^64
  CHECK(count_paths(Digraph::complete(21)) == factorial(21));
}

TEST_CASE("count_paths agrees with the oracle's descent-free column") {
  for (const auto& [name, spec] : battery()) {
    CAPTURE(name);
    for (int n = 1; n <= 8; ++n) {
      CHECK(d_empty(spec, n) ==
            count_exact(spec, LabelSet::range(n), PositionSet::empty(n)));
    }
  }
}

TEST_CASE("tournament formula") {
  CHECK(count_paths_tournament(transitive_tournament(4)) == 1);
  // 3-cycle: identity contributes 1, the admissible 3-cycle contributes 2
  CHECK(count_paths_tournament(three_cycle()) == 3);

  CHECK_THROWS_AS(count_paths_tournament(Digraph::complete(3)), NotTournament);
  CHECK_THROWS_AS(count_paths_tournament(transitive_tournament(11)), SizeLimit);

  SplitMix64 rng(7);
  for (int round = 0; round < 60; ++round) {
    const int n = 1 + static_cast<int>(rng.next() % 7);
    const Digraph t = random_tournament(n, rng);
    CHECK(count_paths_tournament(t) == count_paths(t));
  }
}

TEST_CASE("signed formula") {
  CHECK(count_paths_signed(Digraph::complete(3)) == 6);
  CHECK(count_paths_signed(transitive_tournament(3)) == 1);
  CHECK_THROWS_AS(count_paths_signed(Digraph(10)), SizeLimit);

  SplitMix64 rng(11);
  for (int round = 0; round < 60; ++round) {
    const int n = 1 + static_cast<int>(rng.next() % 7);
    const Digraph d = random_digraph(n, rng);
    CHECK(count_paths_signed(d) == count_paths(d));
  }
}

TEST_CASE("every tournament has an odd, positive path count") {
  SplitMix64 rng(13);
  for (int n = 2; n <= 8; ++n) {
    for (int round = 0; round < 200; ++round) {
      const Count paths = count_paths(random_tournament(n, rng));
      CHECK(paths >= 1);
      CHECK(paths % 2 == 1);
    }
  }
}

TEST_CASE("descent-free counts of named relations") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(d_empty(RelationSpec::less(), n) == 1);
  }
  CHECK(d_empty(RelationSpec::difference_set({1}), 4) == 11);
  CHECK(d_empty(testing::mod3_successor(), 7) == 456);
}

TEST_CASE("bounded tournament classification") {
  CHECK(classify_tournament_relation(RelationSpec::greater(), 8) == TournamentClass::AscentsLike);
  CHECK(classify_tournament_relation(RelationSpec::less(), 8) == TournamentClass::DescentsLike);
  CHECK(classify_tournament_relation(RelationSpec::difference_set({1}), 5) ==
        TournamentClass::NotTournament);

  // Cyclic total pair set on [3]: a tournament with a directed cycle.
  const RelationSpec cyclic = RelationSpec::finite_pairs({{1, 2}, {2, 3}, {3, 1}});
  CHECK(classify_tournament_relation(cyclic, 3) == TournamentClass::GenuineTournament);
}

TEST_CASE("empty-count tables start at the empty permutation") {
  const auto table = empty_count_table(RelationSpec::difference_set({1}), 5);
  REQUIRE(table.size() == 6);
  CHECK(table[0] == 1);
  CHECK(table[1] == 1);
  CHECK(table[4] == 11);
  CHECK(table[5] == 53);
}

TEST_CASE("digraph text fixtures round-trip") {
  const Digraph d = three_cycle();
  std::stringstream buffer;
  d.write(buffer);
  CHECK(Digraph::parse(buffer) == d);

  std::stringstream bad("3\n1 1\n");
  CHECK_THROWS_AS(Digraph::parse(bad), ParseError);
}
