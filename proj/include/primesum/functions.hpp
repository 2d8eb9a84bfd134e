#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace primesum {

// An analytic function f with f(0) = 0 on a domain containing (-1, 1],
// described by exact Taylor-coefficient rules (never numerical
// differentiation) together with closed-form evaluation. Instances are
// immutable values; copying shares the underlying description.
class AnalyticFunction {
 public:
  const std::string& id() const { return impl_->id; }

  // c_k = f^(k)(0)/k! for k >= 1.
  double coeff(int k) const { return impl_->coeff(k); }

  // f(x) for x in (-1, 1] (not range checked).
  double eval(double x) const { return impl_->eval(x); }

  // f'(x) on the same domain.
  double deriv(double x) const { return impl_->deriv(x); }

  // A finite C with |c_k| <= C for all k.
  double coeff_bound() const { return impl_->coeff_bound; }

  // Radius used by default for the circle integral: 1 when f is entire on
  // the closed unit disk, 0.99 for functions singular on the unit circle.
  double boundary_radius() const { return impl_->radius; }

  // Highest index with c_k != 0, when the coefficient support is finite
  // (0 for the zero function); empty for genuinely infinite series.
  std::optional<int> degree() const { return impl_->degree; }

  static AnalyticFunction identity();   // f(x) = x
  static AnalyticFunction f1();         // arctan/log primitive of x/(x^2-x+1)
  static AnalyticFunction neg_log1m();  // f(x) = -log(1-x)
  static AnalyticFunction polynomial(std::vector<double> coeffs);  // coeffs[i] = c_{i+1}

 private:
  struct Impl {
    std::string id;
    std::function<double(int)> coeff;
    std::function<double(double)> eval;
    std::function<double(double)> deriv;
    double coeff_bound = 0.0;
    double radius = 1.0;
    std::optional<int> degree;
  };
  explicit AnalyticFunction(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Named lookup: "identity", "f1", "neg_log1m", or "polynomial:c1,c2,...".
// Throws std::invalid_argument for anything else.
AnalyticFunction builtin(const std::string& id);

// Loads a user function from a coefficient file:
//   # coeff_bound=<real>
//   k,c_k          (k ascending from 1; missing k means c_k = 0)
// Malformed input throws std::invalid_argument.
AnalyticFunction load_coefficient_file(const std::string& path);

// Trapezoidal approximation of integral_0^{2pi} |f(radius e^{it})| dt,
// with f evaluated on the circle through its Taylor series (truncation
// adapted to the radius). Requires 0 < radius <= 1 and nodes >= 64. On the
// unit circle only finitely supported coefficient sequences are summable;
// otherwise a std::domain_error advises a smaller radius. Results are
// memoized per (function, radius, nodes).
double boundary_integral(const AnalyticFunction& f, double radius, int nodes);

}  // namespace primesum
