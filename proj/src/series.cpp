#include "primesum/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "primesum/zeta.hpp"

namespace primesum {
namespace {

PrimeSieve weight_sieve(int m) {
  return PrimeSieve(std::max<std::uint64_t>(2, static_cast<std::uint64_t>(m)));
}

// Prime-density completion of sum_{p > L} t(p) for t(p) ~ c1 p^{-a}:
// integral_L^inf t^{-a}/log(t) dt = E1((a-1) log L).
double prime_tail_integral(double a, double log_limit) {
  const double x = (a - 1.0) * log_limit;
  return -std::expint(-x);
}

}  // namespace

std::pair<double, double> finite_identity(std::span<const double> a,
                                          const AnalyticFunction& f,
                                          int n_max) {
  if (n_max < 1) throw std::invalid_argument("finite_identity: n_max >= 1");
  for (double ak : a) {
    if (!(std::fabs(ak) < 1.0)) {
      throw std::domain_error("finite_identity: requires |a_k| < 1");
    }
  }

  double lhs = 0.0;
  for (double ak : a) lhs += f.eval(ak);

  const PrimeSieve sieve = weight_sieve(n_max);
  const DivisorWeights w = divisor_weights(f, n_max, sieve);

  std::vector<double> powers(a.begin(), a.end());  // a_k^n for the current n
  double acc = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    if (w[static_cast<std::size_t>(n)] != 0.0) {
      double log_prod = 0.0;
      for (double p : powers) log_prod += std::log1p(-p);
      acc += w[static_cast<std::size_t>(n)] / n * log_prod;
    }
    for (std::size_t k = 0; k < powers.size(); ++k) powers[k] *= a[k];
  }
  return {lhs, -acc};
}

SeriesResult prime_sum(const AnalyticFunction& f, double s, int M) {
  if (!(s > 1.0)) {
    throw std::domain_error("prime_sum: requires s > 1 (zeta pole at n = 1)");
  }
  if (M < 1) throw std::invalid_argument("prime_sum: M >= 1");

  const PrimeSieve sieve = weight_sieve(M);
  const DivisorWeights w = divisor_weights(f, M, sieve);

  SeriesResult r;
  r.truncation = M;
  r.s = s;
  r.function_id = f.id();
  r.terms.reserve(static_cast<std::size_t>(M));
  double acc = 0.0;
  for (int n = 1; n <= M; ++n) {
    const double b = w[static_cast<std::size_t>(n)];
    const double term = b == 0.0 ? 0.0 : b / n * log_zeta(n * s);
    r.terms.push_back({n, term});
    acc += term;
  }
  r.value = acc;
  try {
    r.budget = series_tail_bound(f, M, s, f.boundary_radius());
  } catch (const std::exception&) {
    // no boundary integral available; the result stands without a budget
  }
  return r;
}

SeriesResult prime_sum_logweight(const AnalyticFunction& f, double s, int M) {
  if (M < 2) throw std::invalid_argument("prime_sum_logweight: M >= 2");
  if (!(s >= 1.0)) {
    throw std::domain_error("prime_sum_logweight: requires s >= 1");
  }

  const PrimeSieve sieve = weight_sieve(M);
  const DivisorWeights w = divisor_weights(f, M, sieve);
  if (s == 1.0 && w[1] != 0.0) {
    throw std::domain_error(
        "prime_sum_logweight: s = 1 needs b_1 = 0, but b_1 = c_1 != 0 here");
  }

  SeriesResult r;
  r.truncation = M;
  r.s = s;
  r.function_id = f.id();
  r.terms.reserve(static_cast<std::size_t>(M));
  double acc = 0.0;
  const int n0 = w[1] != 0.0 ? 1 : 2;
  for (int n = 1; n <= M; ++n) {
    double term = 0.0;
    const double b = w[static_cast<std::size_t>(n)];
    if (n >= n0 && b != 0.0) {
      const double ns = n * s;
      term = -zeta_deriv(ns, 1) / zeta(ns) * b;
    }
    r.terms.push_back({n, term});
    acc += term;
  }
  r.value = acc;
  if (f.id() == "f1" && s == 1.0) {
    r.budget = logweight_tail_bound(M);
  } else {
    r.budget = logweight_proxy_bound(f, M, s);
  }
  return r;
}

SeriesResult finite_scheme(const AnalyticFunction& g, double s, int M,
                           const PrimeSieve& sieve, int l_max) {
  if (!(s > 1.0)) throw std::domain_error("finite_scheme: requires s > 1");
  if (M < 1) throw std::invalid_argument("finite_scheme: M >= 1");
  if (l_max < 1) throw std::invalid_argument("finite_scheme: l_max >= 1");
  if (!std::isfinite(g.coeff_bound())) {
    throw std::invalid_argument("finite_scheme: coefficient bound must be finite");
  }

  const auto primes = sieve.primes();
  const double limit = static_cast<double>(sieve.limit());
  const double log_limit = std::log(limit);
  const double c1 = g.coeff(1);
  // |g(x)|/x envelope near 0, for the l-loop cutoff.
  const double env = std::fabs(c1) + 2.0 * g.coeff_bound() * std::exp2(-s);

  SeriesResult r;
  r.truncation = M;
  r.s = s;
  r.function_id = g.id();
  r.terms.reserve(static_cast<std::size_t>(M));

  const PrimeSieve mu_sieve = weight_sieve(M);
  double acc = 0.0;
  for (int n = 1; n <= M; ++n) {
    double term = 0.0;
    const int mu = mu_sieve.mobius(static_cast<std::uint64_t>(n));
    if (mu != 0) {
      double inner = 0.0;
      for (int l = 1; l <= l_max; ++l) {
        const double a = s * n * l;  // decay exponent of this layer
        double layer = 0.0;
        for (std::uint32_t p : primes) {
          const double x = std::pow(static_cast<double>(p), -a);
          if (x == 0.0 || env * x < 1e-25) break;
          layer += g.eval(x);
        }
        // completion beyond the sieve, to first order in the coefficients
        if (c1 != 0.0) layer += c1 * prime_tail_integral(a, log_limit);
        inner += layer / l;
        if (env * std::exp2(-a) / l < 1e-19) break;  // geometric l-tail spent
      }
      term = mu / static_cast<double>(n) * inner;
    }
    r.terms.push_back({n, term});
    acc += term;
  }
  r.value = acc;

  // Agreement bound with the zeta-series value: 4 M |g(2^{-s(M+1)})|.
  ErrorBudget budget;
  budget.truncation = M;
  budget.s = s;
  budget.bound = 4.0 * M * std::fabs(g.eval(std::exp2(-s * (M + 1))));
  budget.kind = BoundKind::kGeometricProxy;
  r.budget = budget;
  return r;
}

}  // namespace primesum
