#pragma once

#include <string>
#include <vector>

#include "xdescent/count.hpp"
#include "xdescent/digraph.hpp"
#include "xdescent/limits.hpp"
#include "xdescent/relation.hpp"

namespace xdescent {

/// Exact number of directed Hamiltonian paths, by subset DP over
/// (visited mask, last vertex), masks visited in popcount order.
Count count_paths(const Digraph& d, int dp_limit = Limits{}.dp_max);

/// Tournament path-count formula: sum of 2^(number of nontrivial cycles)
/// over odd-order permutations whose nontrivial cycles are all directed
/// cycles of the complement. Enumerates S_n; validation tool, not a fast path.
Count count_paths_tournament(const Digraph& d, int enum_limit = Limits{}.tournament_enum_max);

/// Signed path-count formula for arbitrary digraphs: sum of (-1)^phi(sigma)
/// over permutations whose nontrivial cycles each lie entirely in the graph
/// or entirely in its complement, phi adding |cycle|-1 per complement cycle.
Count count_paths_signed(const Digraph& d, int enum_limit = Limits{}.signed_enum_max);

/// d_X(empty; n): Hamiltonian paths of the restriction digraph.
Count d_empty(const RelationSpec& spec, int n, int dp_limit = Limits{}.dp_max);

/// Table {d_X(empty; k)} for k = 0..n_max, with the k = 0 entry fixed at 1.
std::vector<Count> empty_count_table(const RelationSpec& spec, int n_max,
                                     int dp_limit = Limits{}.dp_max);

enum class TournamentClass { DescentsLike, AscentsLike, GenuineTournament, NotTournament };

std::string tournament_class_name(TournamentClass c);

/// Bounded classification of the restriction digraphs for n <= n_max:
/// DescentsLike when every edge points from the larger label, AscentsLike
/// when from the smaller, GenuineTournament for any other tournament,
/// NotTournament otherwise.
TournamentClass classify_tournament_relation(const RelationSpec& spec, int n_max);

}  // namespace xdescent
