#include "primesum/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "primesum/zeta.hpp"

namespace primesum {

const char* bound_kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::kBoundaryIntegral: return "boundary-integral";
    case BoundKind::kLogWeight: return "logweight-zeta";
    default: return "geometric-proxy";
  }
}

ErrorBudget series_tail_bound(const AnalyticFunction& f, int M, double s,
                              double radius, int nodes) {
  if (!(s > 1.0)) {
    throw std::domain_error("series_tail_bound: requires s > 1");
  }
  if (M < 1) throw std::invalid_argument("series_tail_bound: M >= 1");

  const double cf = boundary_integral(f, radius, nodes);
  const double p2s = std::pow(2.0, s);
  const double prefactor = 2.0 * p2s * (p2s + 1.0) * (s + 1.0) /
                           (std::numbers::pi * std::pow(p2s - 1.0, 3));
  const double m = static_cast<double>(M);
  const double tail = m * m / ((s * m + s - 1.0) * std::exp2(s * m));

  ErrorBudget budget;
  budget.truncation = M;
  budget.s = s;
  budget.bound = prefactor * cf * tail;
  budget.kind = BoundKind::kBoundaryIntegral;
  budget.boundary_integral = cf;
  budget.radius = radius;
  budget.heuristic = radius < 1.0;
  return budget;
}

ErrorBudget logweight_tail_bound(int M) {
  if (M < 2) throw std::invalid_argument("logweight_tail_bound: M >= 2");
  ErrorBudget budget;
  budget.truncation = M;
  budget.s = 1.0;
  // zeta' < 0 on (1, inf); the bound is the positive magnitude.
  budget.bound = (2.0 * M + 4.0) * std::fabs(zeta_deriv(M + 1.0, 1));
  budget.kind = BoundKind::kLogWeight;
  return budget;
}

ErrorBudget logweight_proxy_bound(const AnalyticFunction& f, int M, double s) {
  if (!(s >= 1.0)) {
    throw std::domain_error("logweight_proxy_bound: requires s >= 1");
  }
  if (M < 1) throw std::invalid_argument("logweight_proxy_bound: M >= 1");

  double sup = 0.0;
  for (int k = 1; k <= 4 * M; ++k) {
    sup = std::max(sup, std::fabs(k * f.coeff(k)));
  }
  double tail = 0.0;
  for (int n = M + 1; n <= 200000; ++n) {
    const double t = n * std::exp2(-n * s) * (1.0 + 2.0 / (n * s - 1.0));
    tail += t;
    if (t < 1e-30 * tail || t == 0.0) break;
  }
  ErrorBudget budget;
  budget.truncation = M;
  budget.s = s;
  budget.bound = 4.0 * sup * tail;
  budget.kind = BoundKind::kGeometricProxy;
  return budget;
}

namespace {

constexpr int kTruncationCap = 120;

template <typename BoundFn>
int scan_truncation(int m_start, double tol, ErrorBudget* budget,
                    BoundFn&& bound_at) {
  ErrorBudget last;
  for (int m = m_start; m <= kTruncationCap; ++m) {
    last = bound_at(m);
    if (last.bound <= tol) {
      if (budget) *budget = last;
      return m;
    }
  }
  last.capped = true;
  if (budget) *budget = last;
  return kTruncationCap;
}

}  // namespace

int choose_truncation(const AnalyticFunction& f, double s, double tol,
                      ErrorBudget* budget) {
  if (!(tol > 0.0)) throw std::invalid_argument("choose_truncation: tol > 0");
  if (f.id() == "f1" && s == 1.0) {
    return scan_truncation(2, tol, budget,
                           [](int m) { return logweight_tail_bound(m); });
  }
  return scan_truncation(1, tol, budget, [&](int m) {
    return series_tail_bound(f, m, s, f.boundary_radius());
  });
}

int choose_truncation_logweight(const AnalyticFunction& f, double s,
                                double tol, ErrorBudget* budget) {
  if (!(tol > 0.0)) throw std::invalid_argument("choose_truncation: tol > 0");
  if (f.id() == "f1" && s == 1.0) {
    return scan_truncation(2, tol, budget,
                           [](int m) { return logweight_tail_bound(m); });
  }
  return scan_truncation(2, tol, budget, [&](int m) {
    return logweight_proxy_bound(f, m, s);
  });
}

}  // namespace primesum
