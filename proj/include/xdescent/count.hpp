#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace xdescent {

/// Exact arbitrary-precision integer. Counting results are nonnegative;
/// signed values appear only inside inclusion-exclusion accumulators.
using Count = mpz_class;

/// Exact rational, used for polynomial coefficients.
using Rational = mpq_class;

inline Count factorial(unsigned long n) {
  Count r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Count binomial(unsigned long n, unsigned long k) {
  Count r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Count pow2(unsigned long k) { return Count(1) << k; }

inline Count count_from_u128(unsigned __int128 v) {
  Count hi(static_cast<unsigned long>(v >> 64));
  Count lo(static_cast<unsigned long>(v & ~0ULL));
  return (hi << 64) + lo;
}

inline std::string to_decimal(const Count& c) { return c.get_str(); }

}  // namespace xdescent
