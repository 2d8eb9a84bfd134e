#include "primesum/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "primesum/sieve.hpp"

namespace primesum {
namespace {

struct Kahan {
  double sum = 0.0;
  double c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

void check_args(double s, std::uint64_t limit) {
  if (!(s > 1.0)) {
    throw std::domain_error("oracle: requires s > 1 (the prime tail diverges)");
  }
  if (limit < 2 || limit > PrimeSieve::kMaxLimit) {
    throw std::invalid_argument("oracle: limit must be in [2, 1e8]");
  }
}

// Index of the first nonzero Taylor coefficient, probing up to k = 64;
// 0 when none is found (the zero function for our purposes).
int first_nonzero_coeff(const AnalyticFunction& f) {
  for (int k = 1; k <= 64; ++k) {
    if (f.coeff(k) != 0.0) return k;
  }
  return 0;
}

}  // namespace

OracleResult direct_prime_sum(const AnalyticFunction& f, double s,
                              std::uint64_t limit) {
  check_args(s, limit);

  Kahan acc;
  for_each_prime(limit, [&](std::uint64_t p) {
    acc.add(f.eval(std::pow(static_cast<double>(p), -s)));
  });

  const double lim = static_cast<double>(limit);
  const double env =
      std::fabs(f.coeff(1)) + 2.0 * f.coeff_bound() * std::pow(lim, -s);
  OracleResult r;
  r.partial = acc.sum;
  r.tail_bound = env * 2.0 * std::pow(lim, 1.0 - s) / ((s - 1.0) * std::log(lim));
  r.limit = limit;
  return r;
}

OracleResult direct_logweight_sum(const AnalyticFunction& f, double s,
                                  std::uint64_t limit) {
  if (limit < 2 || limit > PrimeSieve::kMaxLimit) {
    throw std::invalid_argument("oracle: limit must be in [2, 1e8]");
  }
  const int k0 = first_nonzero_coeff(f);
  if (k0 == 0) return {0.0, 0.0, limit};  // identically zero

  if (!(s >= 1.0)) {
    throw std::domain_error("direct_logweight_sum: requires s >= 1");
  }
  const double s_eff = k0 * s;
  if (!(s_eff > 1.0)) {
    throw std::domain_error(
        "direct_logweight_sum: s = 1 diverges unless the first coefficient vanishes");
  }

  Kahan acc;
  for_each_prime(limit, [&](std::uint64_t p) {
    const double x = std::pow(static_cast<double>(p), -s);
    acc.add(f.deriv(x) * x * std::log(static_cast<double>(p)));
  });

  const double lim = static_cast<double>(limit);
  const double scale = std::max(1.0, std::fabs(k0 * f.coeff(k0)));
  OracleResult r;
  r.partial = acc.sum;
  r.tail_bound = 4.0 * scale * std::pow(lim, 1.0 - s_eff) / (s_eff - 1.0);
  r.limit = limit;
  return r;
}

}  // namespace primesum
