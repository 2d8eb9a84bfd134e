#pragma once

#include <optional>
#include <string>

namespace primesum {

enum class ConstantMethod { kClosedForm, kZetaAccelerated, kOracle };

const char* constant_method_name(ConstantMethod m);

// A named constant with the route that produced it. Closed-form values are
// bit-identical across runs.
struct NamedConstant {
  std::string id;
  double value = 0.0;
  ConstantMethod method = ConstantMethod::kClosedForm;
  std::optional<double> error_bound;
};

// A = sum_k mu(k)^2/(k phi(k)) = zeta(2)zeta(3)/zeta(6) = 315 zeta(3)/(2 pi^4),
// the log coefficient of sum_{n<=N} 1/phi(n). Evaluated in the closed form.
NamedConstant landau_a();

// B, the constant term of the same asymptotic: A (gamma - S) with
// S = sum_p log p/(p^2-p+1). Both the gamma - S route and the equivalent
// zeta'/zeta series are computed and cross-checked to 1e-10; the zeta-series
// route is returned.
NamedConstant landau_b();

// S itself, by the accelerated series with an automatically chosen
// truncation; error_bound carries the a-priori tail bound.
NamedConstant landau_prime_series();

// gamma as a stored 15-digit literal.
NamedConstant euler_gamma();

// Closed forms of the zeta-regularized prime products:
//   "primes"      -> 4 pi^2
//   "primes_logp" -> exp(2 zeta''(0) + 12 (log 2pi)^2)
// No divergent product is ever summed; only the stated closed forms are
// evaluated. Unknown ids throw std::invalid_argument.
NamedConstant regularized_product(const std::string& id);

}  // namespace primesum
