#include "primesum/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "primesum/functions.hpp"

namespace primesum {

PrimeSieve::PrimeSieve(std::uint64_t limit) : limit_(limit) {
  if (limit < 2 || limit > kMaxLimit) {
    throw std::invalid_argument(
        "PrimeSieve: limit must be in [2, " + std::to_string(kMaxLimit) +
        "], got " + std::to_string(limit));
  }

  const std::size_t n = static_cast<std::size_t>(limit);
  mu_.assign(n + 1, 0);
  phi_.assign(n + 1, 0);
  std::vector<bool> composite(n + 1, false);
  mu_[1] = 1;
  phi_[1] = 1;

  // Linear sieve: every composite is crossed off exactly once, by its
  // smallest prime factor, which yields mu and phi in the same pass.
  for (std::size_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes_.push_back(static_cast<std::uint32_t>(i));
      mu_[i] = -1;
      phi_[i] = static_cast<std::uint32_t>(i - 1);
    }
    for (std::uint32_t p : primes_) {
      const std::uint64_t ip = static_cast<std::uint64_t>(i) * p;
      if (ip > n) break;
      composite[ip] = true;
      if (i % p == 0) {
        mu_[ip] = 0;
        phi_[ip] = phi_[i] * p;
        break;
      }
      mu_[ip] = static_cast<std::int8_t>(-mu_[i]);
      phi_[ip] = phi_[i] * (p - 1);
    }
  }
}

int PrimeSieve::mobius(std::uint64_t n) const {
  if (n < 1 || n > limit_) {
    throw std::out_of_range("mobius: n = " + std::to_string(n) +
                            " outside [1, " + std::to_string(limit_) + "]");
  }
  return mu_[n];
}

std::uint64_t PrimeSieve::totient(std::uint64_t n) const {
  if (n < 1 || n > limit_) {
    throw std::out_of_range("totient: n = " + std::to_string(n) +
                            " outside [1, " + std::to_string(limit_) + "]");
  }
  return phi_[n];
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

void for_each_prime(std::uint64_t limit,
                    const std::function<void(std::uint64_t)>& fn) {
  if (limit < 2) return;

  // Base primes up to sqrt(limit).
  const std::uint64_t root =
      static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  std::vector<bool> base_composite(root + 1, false);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (base_composite[i]) continue;
    base.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) base_composite[j] = true;
  }

  constexpr std::uint64_t kSegment = 1u << 20;
  std::vector<bool> seg;
  for (std::uint64_t low = 2; low <= limit; low += kSegment) {
    const std::uint64_t high = std::min(low + kSegment - 1, limit);
    seg.assign(static_cast<std::size_t>(high - low + 1), true);
    for (std::uint64_t p : base) {
      if (p * p > high) break;
      std::uint64_t start = std::max(p * p, (low + p - 1) / p * p);
      for (std::uint64_t j = start; j <= high; j += p) seg[j - low] = false;
    }
    for (std::uint64_t v = low; v <= high; ++v) {
      if (seg[v - low]) fn(v);
    }
  }
}

DivisorWeights divisor_weights(const AnalyticFunction& f, int m_max,
                               const PrimeSieve& sieve) {
  if (m_max < 1) throw std::invalid_argument("divisor_weights: m_max < 1");
  if (static_cast<std::uint64_t>(m_max) > sieve.limit()) {
    throw std::invalid_argument("divisor_weights: m_max exceeds sieve limit");
  }
  DivisorWeights w;
  w.source = f.id();
  w.b.assign(static_cast<std::size_t>(m_max) + 1, 0.0);
  for (int n = 1; n <= m_max; ++n) {
    double acc = 0.0;
    for (std::uint64_t d : divisors(static_cast<std::uint64_t>(n))) {
      const int mu = sieve.mobius(static_cast<std::uint64_t>(n) / d);
      if (mu == 0) continue;
      acc += static_cast<double>(d) * f.coeff(static_cast<int>(d)) * mu;
    }
    w.b[static_cast<std::size_t>(n)] = acc;
  }
  return w;
}

}  // namespace primesum
