#include "primesum/constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "primesum/bounds.hpp"
#include "primesum/series.hpp"
#include "primesum/sieve.hpp"
#include "primesum/zeta.hpp"

namespace primesum {
namespace {

constexpr double kEulerGamma = 0.577215664901533;

double landau_a_value() {
  const double pi = std::numbers::pi;
  return 315.0 * zeta(3.0) / (2.0 * pi * pi * pi * pi);
}

}  // namespace

const char* constant_method_name(ConstantMethod m) {
  switch (m) {
    case ConstantMethod::kClosedForm: return "closed-form";
    case ConstantMethod::kZetaAccelerated: return "zeta-accelerated";
    default: return "oracle";
  }
}

NamedConstant landau_a() {
  return {"A", landau_a_value(), ConstantMethod::kClosedForm, std::nullopt};
}

NamedConstant landau_prime_series() {
  const AnalyticFunction f1 = AnalyticFunction::f1();
  ErrorBudget budget;
  const int m = choose_truncation(f1, 1.0, 1e-12, &budget);
  const SeriesResult r = prime_sum_logweight(f1, 1.0, m);
  return {"S", r.value, ConstantMethod::kZetaAccelerated, budget.bound};
}

NamedConstant landau_b() {
  const AnalyticFunction f1 = AnalyticFunction::f1();
  const double a = landau_a_value();

  // Route one: A (gamma - S) with S from the series module.
  const NamedConstant s_const = landau_prime_series();
  const double via_s = a * (kEulerGamma - s_const.value);

  // Route two: the same series folded into the zeta form,
  // A (gamma + sum_{n>=2} zeta'(n)/zeta(n) b_n).
  ErrorBudget budget;
  const int m = choose_truncation(f1, 1.0, 1e-12, &budget);
  const PrimeSieve sieve(static_cast<std::uint64_t>(m));
  const DivisorWeights w = divisor_weights(f1, m, sieve);
  double series = 0.0;
  for (int n = 2; n <= m; ++n) {
    const double b = w[static_cast<std::size_t>(n)];
    if (b != 0.0) series += zeta_deriv(n, 1) / zeta(n) * b;
  }
  const double via_zeta = a * (kEulerGamma + series);

  if (std::fabs(via_s - via_zeta) > 1e-10) {
    throw std::logic_error("landau_b: internal routes disagree beyond 1e-10");
  }
  return {"B", via_zeta, ConstantMethod::kZetaAccelerated,
          std::fabs(a) * budget.bound};
}

NamedConstant euler_gamma() {
  return {"gamma", kEulerGamma, ConstantMethod::kClosedForm, std::nullopt};
}

NamedConstant regularized_product(const std::string& id) {
  const double pi = std::numbers::pi;
  if (id == "primes") {
    return {"primes", 4.0 * pi * pi, ConstantMethod::kClosedForm, std::nullopt};
  }
  if (id == "primes_logp") {
    const double log_two_pi = std::log(2.0 * pi);
    const double exponent =
        2.0 * zeta_deriv(0.0, 2) + 12.0 * log_two_pi * log_two_pi;
    return {"primes_logp", std::exp(exponent), ConstantMethod::kClosedForm,
            std::nullopt};
  }
  throw std::invalid_argument(
      "regularized_product: unknown id '" + id +
      "' (expected primes or primes_logp)");
}

}  // namespace primesum
