#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace primesum {

class AnalyticFunction;

// Primes and multiplicative-function tables up to a fixed limit, produced in
// one pass by a linear smallest-prime-factor sieve. Immutable after
// construction and safe to share across threads.
class PrimeSieve {
 public:
  static constexpr std::uint64_t kMaxLimit = 100'000'000;

  // limit must lie in [2, kMaxLimit]; throws std::invalid_argument otherwise.
  explicit PrimeSieve(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  std::span<const std::uint32_t> primes() const { return primes_; }

  // mu(n): 1 at n = 1, (-1)^r for squarefree n with r prime factors, else 0.
  // Throws std::out_of_range unless 1 <= n <= limit.
  int mobius(std::uint64_t n) const;

  // Euler's totient phi(n). Same domain as mobius.
  std::uint64_t totient(std::uint64_t n) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> primes_;
  std::vector<std::int8_t> mu_;
  std::vector<std::uint32_t> phi_;
};

// All positive divisors of n in ascending order. Trial division up to
// sqrt(n), so n is not tied to any sieve limit. Throws on n = 0.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Streams the primes <= limit in ascending order. Segmented, so memory stays
// bounded regardless of limit (up to PrimeSieve::kMaxLimit).
void for_each_prime(std::uint64_t limit,
                    const std::function<void(std::uint64_t)>& fn);

// Divisor-convolved Taylor weights b_n = sum_{d|n} d*c_d*mu(n/d) with
// c_d the Taylor coefficients of the source function. b_1 = c_1, and a
// Moebius-inversion round trip gives sum_{d|n} b_d = n*c_n. For f(x) = x the
// table is exactly mu(n).
struct DivisorWeights {
  std::string source;     // id of the function that supplied c_d
  std::vector<double> b;  // b[n] for n = 1..m_max; b[0] unused

  double operator[](std::size_t n) const { return b[n]; }
  int max_index() const { return static_cast<int>(b.size()) - 1; }
};

// Requires 1 <= m_max <= sieve.limit().
DivisorWeights divisor_weights(const AnalyticFunction& f, int m_max,
                               const PrimeSieve& sieve);

}  // namespace primesum
