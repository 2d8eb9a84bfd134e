#include "primesum/zeta.hpp"

#include <bit>
#include <cfloat>
#include <cmath>
#include <stdexcept>
#include <string>

namespace primesum {
namespace {

// B_{2j}/(2j)! for j = 1..11. The j = 11 entry only feeds the truncation
// error estimate.
constexpr double kBernoulliOverFact[] = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0,
    854513.0 / 155112100433309859840000.0,
};
constexpr int kCorrectionTerms = 10;

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

void check_domain(double s, int order) {
  if (order < 0 || order > 2) {
    throw std::invalid_argument("zeta: derivative order must be 0, 1 or 2");
  }
  if (!(s > -1.0) || s == 1.0) {
    throw std::domain_error("zeta: s must lie in (-1, inf) and avoid the pole at 1, got s = " +
                            std::to_string(s));
  }
}

}  // namespace

namespace detail {

ZetaValue euler_maclaurin_zeta(double s, int order, int nodes) {
  const int N = nodes;
  const double L = std::log(static_cast<double>(N));

  Kahan acc;
  double abs_sum = 0.0;
  auto add = [&](double t) {
    acc.add(t);
    abs_sum += std::fabs(t);
  };

  for (int n = 1; n < N; ++n) {
    const double p = std::pow(static_cast<double>(n), -s);
    const double ln = std::log(static_cast<double>(n));
    switch (order) {
      case 0: add(p); break;
      case 1: add(-ln * p); break;
      default: add(ln * ln * p); break;
    }
  }

  const double n_pow = std::pow(static_cast<double>(N), -s);  // N^{-s}
  const double sm1 = s - 1.0;

  // Integral term N^{1-s}/(s-1) and its s-derivatives.
  const double integral = n_pow * N / sm1;
  switch (order) {
    case 0: add(integral); break;
    case 1: add(-integral * (L + 1.0 / sm1)); break;
    default:
      add(integral * (L * L + 2.0 * L / sm1 + 2.0 / (sm1 * sm1)));
      break;
  }

  // Midpoint term N^{-s}/2.
  const double half = 0.5 * n_pow;
  switch (order) {
    case 0: add(half); break;
    case 1: add(-L * half); break;
    default: add(L * L * half); break;
  }

  // Bernoulli corrections. The j-th term is
  //   B_{2j}/(2j)! * prod_{i=0}^{2j-2}(s+i) * N^{-s-2j+1};
  // the rising-factorial product and its first two s-derivatives are kept
  // exactly by a polynomial recurrence, so s = 0 and other roots of the
  // product are handled without special cases.
  double em_tail = 0.0;
  double prod = 1.0, prod_d1 = 0.0, prod_d2 = 0.0;
  int next_factor = 0;
  double scale = n_pow / N;  // N^{-s-2j+1} at j = 1
  for (int j = 1; j <= kCorrectionTerms + 1; ++j) {
    while (next_factor <= 2 * j - 2) {
      const double u = s + next_factor;
      prod_d2 = prod_d2 * u + 2.0 * prod_d1;
      prod_d1 = prod_d1 * u + prod;
      prod = prod * u;
      ++next_factor;
    }
    double combo;
    switch (order) {
      case 0: combo = prod; break;
      case 1: combo = prod_d1 - L * prod; break;
      default: combo = prod_d2 - 2.0 * L * prod_d1 + L * L * prod; break;
    }
    const double term = kBernoulliOverFact[j - 1] * scale * combo;
    if (j <= kCorrectionTerms) {
      add(term);
    } else {
      em_tail = 2.0 * std::fabs(term);  // first omitted term, with headroom
    }
    scale /= static_cast<double>(N) * N;
  }

  const double value = acc.sum;
  const double eps = DBL_EPSILON;
  const double envelope = (0.5 + 0.5 * order) * eps * abs_sum;
  return {value, em_tail + envelope + 4.0 * eps * std::fabs(value)};
}

double zeta_minus_one(double s, int nodes) {
  const int N = nodes;
  Kahan acc;
  for (int n = 2; n < N; ++n) acc.add(std::pow(static_cast<double>(n), -s));

  const double n_pow = std::pow(static_cast<double>(N), -s);
  acc.add(n_pow * N / (s - 1.0));
  acc.add(0.5 * n_pow);

  double prod = 1.0;
  int next_factor = 0;
  double scale = n_pow / N;
  for (int j = 1; j <= kCorrectionTerms; ++j) {
    while (next_factor <= 2 * j - 2) {
      prod *= s + next_factor;
      ++next_factor;
    }
    acc.add(kBernoulliOverFact[j - 1] * scale * prod);
    scale /= static_cast<double>(N) * N;
  }
  return acc.sum;
}

}  // namespace detail

ZetaValue ZetaTable::value(double s, int order) {
  check_domain(s, order);
  const Key key{std::bit_cast<std::uint64_t>(s), order};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  const ZetaValue v =
      detail::euler_maclaurin_zeta(s, order, detail::kDefaultNodes);
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(key, v).first->second;
}

double ZetaTable::log_value(double s) {
  if (!(s > 1.0)) {
    throw std::domain_error("log_zeta: requires s > 1, got s = " +
                            std::to_string(s));
  }
  const Key key{std::bit_cast<std::uint64_t>(s), 3};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second.value;
  }
  const double zm1 = detail::zeta_minus_one(s, detail::kDefaultNodes);
  const double v = std::log1p(zm1);
  const ZetaValue zv{v, 2.0 * DBL_EPSILON * std::max(1.0, std::fabs(v))};
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(key, zv).first->second.value;
}

std::vector<ZetaTable::Entry> ZetaTable::snapshot() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<Entry> out;
  out.reserve(cache_.size());
  for (const auto& [k, v] : cache_) {
    out.push_back({std::bit_cast<double>(k.bits), k.order, v});
  }
  return out;
}

std::size_t ZetaTable::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.size();
}

ZetaTable& ZetaTable::global() {
  static ZetaTable table;
  return table;
}

double zeta(double s) { return ZetaTable::global().value(s, 0).value; }

double zeta_deriv(double s, int order) {
  if (order != 1 && order != 2) {
    throw std::invalid_argument("zeta_deriv: order must be 1 or 2");
  }
  return ZetaTable::global().value(s, order).value;
}

double log_zeta(double s) { return ZetaTable::global().log_value(s); }

ZetaValue zeta_checked(double s, int order) {
  return ZetaTable::global().value(s, order);
}

}  // namespace primesum
