#pragma once

#include <string>

#include "primesum/functions.hpp"

namespace primesum {

enum class BoundKind {
  kBoundaryIntegral,  // circle-integral bound for the plain zeta series
  kLogWeight,         // (2M+4)|zeta'(M+1)| bound for the f1 log-weighted series
  kGeometricProxy,    // coefficient-envelope bound, general log-weighted series
};

const char* bound_kind_name(BoundKind kind);

// An a-priori truncation budget for a series cut at index M.
struct ErrorBudget {
  int truncation = 0;  // M
  double s = 0.0;
  double bound = 0.0;  // >= 0, non-increasing in M for fixed s
  BoundKind kind = BoundKind::kBoundaryIntegral;
  double boundary_integral = 0.0;  // C_f used, when kind is kBoundaryIntegral
  double radius = 0.0;             // quadrature radius used, when applicable
  bool heuristic = false;  // radius < 1 stood in for the unit circle
  bool capped = false;     // set by choose_truncation when tol was unreachable
};

// Tail of the zeta-series evaluation of sum_p f(1/p^s) past index M:
//   [2^{s+1}(2^s+1)(s+1) / (pi (2^s-1)^3)] * C_f * M^2 / ((sM+s-1) 2^{sM})
// with C_f the circle integral of |f| at the given radius. Requires s > 1,
// M >= 1. For radius < 1 the budget is flagged heuristic.
ErrorBudget series_tail_bound(const AnalyticFunction& f, int M, double s,
                              double radius, int nodes = 4096);

// Tail of the log-weighted series for f1 at s = 1 past index M:
//   (2M+4) |zeta'(M+1)|, M >= 2.
ErrorBudget logweight_tail_bound(int M);

// Coefficient-envelope tail for the log-weighted series of a general f:
//   4 * sup_{k<=4M} |k c_k| * sum_{n>M} n 2^{-ns} (1 + 2/(ns-1)).
ErrorBudget logweight_proxy_bound(const AnalyticFunction& f, int M, double s);

// Smallest M <= 120 whose a-priori bound meets tol; the f1/s = 1 pair uses
// logweight_tail_bound, everything else series_tail_bound at the function's
// default radius. Returns 120 with budget->capped set when tol is
// unreachable. budget may be null.
int choose_truncation(const AnalyticFunction& f, double s, double tol,
                      ErrorBudget* budget = nullptr);

// Same scan against logweight_proxy_bound, for log-weighted evaluations of
// functions other than f1.
int choose_truncation_logweight(const AnalyticFunction& f, double s,
                                double tol, ErrorBudget* budget = nullptr);

}  // namespace primesum
