#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "primesum/bounds.hpp"
#include "primesum/functions.hpp"
#include "primesum/sieve.hpp"

namespace primesum {

// One evaluated series, with a per-term ledger: value is exactly the
// ascending-n sum of the recorded terms, so a run can be replayed and
// audited.
struct SeriesResult {
  double value = 0.0;
  int truncation = 0;                 // outer index M
  std::optional<ErrorBudget> budget;  // a-priori bound for the same (f, M, s)
  struct Term {
    int n;
    double value;
  };
  std::vector<Term> terms;
  double s = 0.0;
  std::string function_id;
};

// Both sides of the finite transform identity
//   sum_k f(a_k) = -sum_{n>=1} (b_n/n) log(prod_k (1 - a_k^n)),
// with the outer sum cut at n_max. Returns {lhs, rhs}. Requires |a_k| < 1.
std::pair<double, double> finite_identity(std::span<const double> a,
                                          const AnalyticFunction& f,
                                          int n_max);

// sum_p f(1/p^s) as the zeta series sum_{n=1}^{M} (b_n/n) log(zeta(ns)).
// Requires s > 1, M >= 1. The attached budget is the boundary-integral tail
// bound at the function's default radius.
SeriesResult prime_sum(const AnalyticFunction& f, double s, int M);

// sum_p f'(1/p^s) log(p)/p^s as -sum_{n} b_n zeta'(ns)/zeta(ns), the
// s-derivative of the series above. Requires M >= 2 and s > 1, except that
// s = 1 is admissible when b_1 = 0 (the n = 1 factor is then never touched).
SeriesResult prime_sum_logweight(const AnalyticFunction& f, double s, int M);

// The finite scheme
//   sum_{n<=M} (mu(n)/n) sum_k sum_{l<=l_max} (1/l) g(p_k^{-snl}),
// with the prime sum truncated at the sieve and completed by a
// prime-density tail estimate. Requires s > 1, M >= 1, l_max >= 1.
SeriesResult finite_scheme(const AnalyticFunction& g, double s, int M,
                           const PrimeSieve& sieve, int l_max = 64);

}  // namespace primesum
