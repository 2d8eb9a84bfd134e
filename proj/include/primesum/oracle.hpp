#pragma once

#include <cstdint>

#include "primesum/functions.hpp"

namespace primesum {

// A brute-force partial sum over the primes up to limit, plus a one-sided
// tail bound: for nonnegative-term series the true value lies in
// [partial, partial + tail_bound], and within +-tail_bound otherwise.
struct OracleResult {
  double partial = 0.0;
  double tail_bound = 0.0;
  std::uint64_t limit = 0;
};

// sum_{p <= limit} f(p^{-s}) by direct evaluation, streamed from a segmented
// sieve with compensated accumulation. The tail bound uses the Chebyshev
// estimate pi(t) <= 2t/log t:
//   env * 2 * limit^{1-s} / ((s-1) log limit),
// env = |c_1| + 2 * coeff_bound * limit^{-s}. Requires s > 1, limit >= 2.
OracleResult direct_prime_sum(const AnalyticFunction& f, double s,
                              std::uint64_t limit);

// sum_{p <= limit} f'(p^{-s}) p^{-s} log p, same mechanics. The decay
// exponent is s' = k0 s with k0 the first nonzero coefficient index, so
// s >= 1 is admissible whenever k0 >= 2; the tail bound is
//   4 * max(1, k0 |c_{k0}|) * limit^{1-s'} / (s'-1).
OracleResult direct_logweight_sum(const AnalyticFunction& f, double s,
                                  std::uint64_t limit);

}  // namespace primesum
