#include "xdescent/hampath.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

#include "xdescent/errors.hpp"

namespace xdescent {

namespace {

// Pascal table up to the DP cap; C(24,12) fits easily in 64 bits.
constexpr int kMaxN = 64;

const std::uint64_t* binom_row(int n) {
  static const auto table = [] {
    auto t = std::make_unique<std::array<std::array<std::uint64_t, 32>, kMaxN + 1>>();
    for (int i = 0; i <= kMaxN; ++i) {
      (*t)[i][0] = 1;
      for (int j = 1; j < 32; ++j) {
        (*t)[i][j] = j > i ? 0 : (i == 0 ? 0 : (*t)[i - 1][j - 1] + (*t)[i - 1][j]);
      }
    }
    return t;
  }();
  return (*table)[static_cast<std::size_t>(n)].data();
}

// Colex rank of a popcount-k mask among all popcount-k masks; Gosper's hack
// enumerates those masks in exactly this order.
std::uint64_t colex_rank(std::uint64_t mask) {
  std::uint64_t rank = 0;
  int idx = 1;
  while (mask) {
    const int bit = __builtin_ctzll(mask);
    rank += binom_row(bit)[idx];
    ++idx;
    mask &= mask - 1;
  }
  return rank;
}

std::uint64_t next_popcount_equal(std::uint64_t v) {
  const std::uint64_t c = v & -v;
  const std::uint64_t r = v + c;
  return r | (((v ^ r) >> 2) / c);
}

template <typename W>
Count count_paths_dp(const Digraph& d) {
  const int n = d.size();
  std::vector<std::uint64_t> in(static_cast<std::size_t>(n), 0);
  for (int u = 1; u <= n; ++u) {
    for (int v = 1; v <= n; ++v) {
      if (u != v && d.has_edge(u, v)) in[static_cast<std::size_t>(v - 1)] |= std::uint64_t{1}
                                                                             << (u - 1);
    }
  }

  // dp over one popcount layer at a time: dp[rank(mask) * n + last]. Cells of
  // the next layer are pulled from their predecessor mask, so the O(n) rank
  // computation happens once per (mask, last) rather than once per edge.
  std::vector<W> cur(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), W{0});
  for (int v = 0; v < n; ++v) {
    cur[static_cast<std::size_t>(v) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] =
        W{1};
  }

  for (int k = 1; k < n; ++k) {
    const std::uint64_t next_size = binom_row(n)[k + 1];
    std::vector<W> next(next_size * static_cast<std::size_t>(n), W{0});
    std::uint64_t mask = (std::uint64_t{1} << (k + 1)) - 1;
    for (std::uint64_t nrank = 0; nrank < next_size; ++nrank) {
      for (std::uint64_t lasts = mask; lasts;) {
        const int last = __builtin_ctzll(lasts);
        lasts &= lasts - 1;
        const std::uint64_t prev = mask & ~(std::uint64_t{1} << last);
        std::uint64_t preds = in[static_cast<std::size_t>(last)] & prev;
        if (preds == 0) continue;
        const std::size_t base =
            static_cast<std::size_t>(colex_rank(prev)) * static_cast<std::size_t>(n);
        W sum{0};
        while (preds) {
          sum += cur[base + static_cast<std::size_t>(__builtin_ctzll(preds))];
          preds &= preds - 1;
        }
        next[static_cast<std::size_t>(nrank) * static_cast<std::size_t>(n) +
             static_cast<std::size_t>(last)] = sum;
      }
      mask = next_popcount_equal(mask);
    }
    cur.swap(next);
  }

  W total{0};
  for (int v = 0; v < n; ++v) total += cur[static_cast<std::size_t>(v)];
  if constexpr (sizeof(W) == 8) {
    return Count(static_cast<unsigned long>(total));
  } else {
    return count_from_u128(total);
  }
}

struct CycleView {
  std::vector<std::vector<int>> cycles;  // nontrivial only, 1-based vertices
  bool all_lengths_odd = true;
};

CycleView cycles_of(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  CycleView view;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v = 0; v < n; ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    std::vector<int> cycle;
    int w = v;
    while (!seen[static_cast<std::size_t>(w)]) {
      seen[static_cast<std::size_t>(w)] = true;
      cycle.push_back(w + 1);
      w = perm[static_cast<std::size_t>(w)];
    }
    if (cycle.size() % 2 == 0) view.all_lengths_odd = false;
    if (cycle.size() >= 2) view.cycles.push_back(std::move(cycle));
  }
  return view;
}

bool is_cycle_of(const Digraph& d, const std::vector<int>& cycle) {
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!d.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

}  // namespace

Count count_paths(const Digraph& d, int dp_limit) {
  const int n = d.size();
  if (n > dp_limit) throw SizeLimit("path DP", n, dp_limit);
  if (n < 1) throw std::invalid_argument("path DP: empty digraph");
  if (n == 1) return 1;
  // Counts stay below n!, so 64 bits are exact through n = 20 and 128 bits
  // through the DP cap.
  if (n <= 20) return count_paths_dp<std::uint64_t>(d);
  return count_paths_dp<unsigned __int128>(d);
}

Count count_paths_tournament(const Digraph& d, int enum_limit) {
  const int n = d.size();
  if (n > enum_limit) throw SizeLimit("tournament formula", n, enum_limit);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (d.has_edge(u, v) == d.has_edge(v, u)) throw NotTournament(u, v);
    }
  }
  const Digraph comp = d.complement();

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Count total = 0;
  do {
    const CycleView view = cycles_of(perm);
    if (!view.all_lengths_odd) continue;
    bool admissible = true;
    for (const auto& cycle : view.cycles) {
      if (!is_cycle_of(comp, cycle)) {
        admissible = false;
        break;
      }
    }
    if (admissible) total += pow2(view.cycles.size());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Count count_paths_signed(const Digraph& d, int enum_limit) {
  const int n = d.size();
  if (n > enum_limit) throw SizeLimit("signed formula", n, enum_limit);
  const Digraph comp = d.complement();

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  long long total = 0;  // |partial sums| <= n! <= 9!
  do {
    const CycleView view = cycles_of(perm);
    int phi = 0;
    bool admissible = true;
    for (const auto& cycle : view.cycles) {
      if (is_cycle_of(d, cycle)) continue;
      if (is_cycle_of(comp, cycle)) {
        phi += static_cast<int>(cycle.size()) - 1;
        continue;
      }
      admissible = false;
      break;
    }
    if (admissible) total += (phi % 2 == 0) ? 1 : -1;
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (total < 0) throw std::logic_error("signed formula produced a negative count");
  return Count(static_cast<long>(total));
}

Count d_empty(const RelationSpec& spec, int n, int dp_limit) {
  return count_paths(restriction_digraph(spec, n), dp_limit);
}

std::vector<Count> empty_count_table(const RelationSpec& spec, int n_max, int dp_limit) {
  std::vector<Count> table(static_cast<std::size_t>(n_max) + 1);
  table[0] = 1;
  for (int k = 1; k <= n_max; ++k) {
    table[static_cast<std::size_t>(k)] = d_empty(spec, k, dp_limit);
  }
  return table;
}

std::string tournament_class_name(TournamentClass c) {
  switch (c) {
    case TournamentClass::DescentsLike:
      return "descents-like";
    case TournamentClass::AscentsLike:
      return "ascents-like";
    case TournamentClass::GenuineTournament:
      return "genuine-tournament";
    case TournamentClass::NotTournament:
      return "not-tournament";
  }
  return "?";
}

TournamentClass classify_tournament_relation(const RelationSpec& spec, int n_max) {
  const Digraph d = restriction_digraph(spec, n_max);
  if (!d.is_tournament()) return TournamentClass::NotTournament;

  bool descending = true;  // every edge u -> v has u > v
  bool ascending = true;
  for (int u = 1; u <= n_max; ++u) {
    for (int v = 1; v <= n_max; ++v) {
      if (u == v || !d.has_edge(u, v)) continue;
      if (u < v) descending = false;
      if (u > v) ascending = false;
    }
  }
  if (descending) return TournamentClass::DescentsLike;
  if (ascending) return TournamentClass::AscentsLike;
  return TournamentClass::GenuineTournament;
}

}  // namespace xdescent
