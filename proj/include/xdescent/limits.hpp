#pragma once

#include <cstdint>

namespace xdescent {

/// Hard caps and work budgets for the counting algorithms. Each limit bounds
/// one algorithm's state space; the work limit bounds open-ended
/// certification enumerations. XDESCENT_BUDGET overrides the work limit.
struct Limits {
  int oracle_max = 10;           // |S|! enumeration
  int subset_max = 14;           // subset-sum memo over 2^n label masks
  int dp_max = 24;               // Hamiltonian-path bitmask DP
  int tournament_enum_max = 10;  // S_n sweep in the tournament formula
  int signed_enum_max = 9;       // S_n sweep in the signed formula
  int series_degree_cap = 12;    // truncated transfer series
  int certify_bound = 7;         // default n_max for standardization certificates
  std::uint64_t work_limit = 50'000'000;

  static Limits from_env();
};

}  // namespace xdescent
