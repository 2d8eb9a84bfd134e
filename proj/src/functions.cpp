#include "primesum/functions.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace primesum {
namespace {

// k * c_k for the f1 series, period 6: 0, 1, 1, 0, -1, -1. Equivalently
// (2/sqrt(3)) sin((k-1) pi/3), but the integer table is exact.
int f1_weight(int k) {
  switch (k % 6) {
    case 1: return 0;
    case 2: return 1;
    case 3: return 1;
    case 4: return 0;
    case 5: return -1;
    default: return -1;  // k = 0 mod 6
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

AnalyticFunction AnalyticFunction::identity() {
  auto impl = std::make_shared<Impl>();
  impl->id = "identity";
  impl->coeff = [](int k) { return k == 1 ? 1.0 : 0.0; };
  impl->eval = [](double x) { return x; };
  impl->deriv = [](double) { return 1.0; };
  impl->coeff_bound = 1.0;
  impl->radius = 1.0;
  impl->degree = 1;
  return AnalyticFunction(std::move(impl));
}

AnalyticFunction AnalyticFunction::f1() {
  // f1(x) = arctan((2x-1)/sqrt(3))/sqrt(3) + log(1-x+x^2)/2 + pi/(6 sqrt(3)).
  // The additive constant pins f1(0) = 0; it does not touch the series.
  // f1'(x) = x/(x^2-x+1), so f1'(1/p)/p = 1/(p^2-p+1).
  static const double kInvSqrt3 = 1.0 / std::sqrt(3.0);
  static const double kShift = std::numbers::pi / (6.0 * std::sqrt(3.0));
  auto impl = std::make_shared<Impl>();
  impl->id = "f1";
  impl->coeff = [](int k) {
    const int w = f1_weight(k);
    return w == 0 ? 0.0 : static_cast<double>(w) / k;
  };
  impl->eval = [](double x) {
    return kInvSqrt3 * std::atan((2.0 * x - 1.0) * kInvSqrt3) +
           0.5 * std::log1p(x * x - x) + kShift;
  };
  impl->deriv = [](double x) { return x / (x * x - x + 1.0); };
  impl->coeff_bound = 0.5;  // |c_k| <= 1/2, attained at k = 2
  impl->radius = 0.99;      // log singularities at the primitive 6th roots of unity
  return AnalyticFunction(std::move(impl));
}

AnalyticFunction AnalyticFunction::neg_log1m() {
  auto impl = std::make_shared<Impl>();
  impl->id = "neg_log1m";
  impl->coeff = [](int k) { return 1.0 / k; };
  impl->eval = [](double x) { return -std::log1p(-x); };
  impl->deriv = [](double x) { return 1.0 / (1.0 - x); };
  impl->coeff_bound = 1.0;
  impl->radius = 0.99;  // singular at x = 1
  return AnalyticFunction(std::move(impl));
}

AnalyticFunction AnalyticFunction::polynomial(std::vector<double> coeffs) {
  int degree = 0;
  for (int k = static_cast<int>(coeffs.size()); k >= 1; --k) {
    if (coeffs[static_cast<std::size_t>(k) - 1] != 0.0) {
      degree = k;
      break;
    }
  }
  coeffs.resize(static_cast<std::size_t>(degree));

  std::string id = "polynomial:";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) id += ',';
    id += format_double(coeffs[i]);
  }

  double bound = 0.0;
  for (double c : coeffs) bound = std::max(bound, std::fabs(c));

  auto impl = std::make_shared<Impl>();
  impl->id = std::move(id);
  auto c = std::make_shared<const std::vector<double>>(std::move(coeffs));
  impl->coeff = [c](int k) {
    return (k >= 1 && k <= static_cast<int>(c->size()))
               ? (*c)[static_cast<std::size_t>(k) - 1]
               : 0.0;
  };
  impl->eval = [c](double x) {
    double acc = 0.0;
    for (std::size_t i = c->size(); i-- > 0;) acc = acc * x + (*c)[i];
    return acc * x;
  };
  impl->deriv = [c](double x) {
    double acc = 0.0;
    for (std::size_t i = c->size(); i-- > 0;) {
      acc = acc * x + static_cast<double>(i + 1) * (*c)[i];
    }
    return acc;
  };
  impl->coeff_bound = bound;
  impl->radius = 1.0;
  impl->degree = degree;
  return AnalyticFunction(std::move(impl));
}

AnalyticFunction builtin(const std::string& id) {
  if (id == "identity") return AnalyticFunction::identity();
  if (id == "f1") return AnalyticFunction::f1();
  if (id == "neg_log1m") return AnalyticFunction::neg_log1m();
  if (id.starts_with("polynomial:")) {
    std::vector<double> coeffs;
    std::stringstream ss(id.substr(11));
    std::string field;
    while (std::getline(ss, field, ',')) {
      char* end = nullptr;
      const double v = std::strtod(field.c_str(), &end);
      if (end == field.c_str() || *end != '\0') {
        throw std::invalid_argument("builtin: bad polynomial coefficient '" +
                                    field + "'");
      }
      coeffs.push_back(v);
    }
    return AnalyticFunction::polynomial(std::move(coeffs));
  }
  throw std::invalid_argument(
      "builtin: unknown function '" + id +
      "' (expected identity, f1, neg_log1m, or polynomial:c1,c2,...)");
}

AnalyticFunction load_coefficient_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("coefficient file: cannot open '" + path + "'");
  }

  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("coefficient file: empty file '" + path + "'");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::string header = "# coeff_bound=";
  if (!line.starts_with(header)) {
    throw std::invalid_argument(
        "coefficient file: first line must be '# coeff_bound=<real>'");
  }
  char* end = nullptr;
  const double declared_bound = std::strtod(line.c_str() + header.size(), &end);
  if (end == line.c_str() + header.size() || *end != '\0' ||
      !(declared_bound >= 0.0) || !std::isfinite(declared_bound)) {
    throw std::invalid_argument("coefficient file: bad coeff_bound value");
  }

  constexpr int kMaxIndex = 100000;
  std::vector<double> coeffs;
  int last_k = 0;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto where = "coefficient file line " + std::to_string(line_no);
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument(where + ": expected 'k,c_k'");
    }
    const std::string k_str = line.substr(0, comma);
    const std::string c_str = line.substr(comma + 1);
    char* kend = nullptr;
    const long k = std::strtol(k_str.c_str(), &kend, 10);
    if (kend == k_str.c_str() || *kend != '\0' || k < 1 || k > kMaxIndex) {
      throw std::invalid_argument(where + ": bad index '" + k_str + "'");
    }
    if (k <= last_k) {
      throw std::invalid_argument(where + ": indices must ascend from 1");
    }
    char* cend = nullptr;
    const double c = std::strtod(c_str.c_str(), &cend);
    if (cend == c_str.c_str() || *cend != '\0' || !std::isfinite(c)) {
      throw std::invalid_argument(where + ": bad coefficient '" + c_str + "'");
    }
    if (std::fabs(c) > declared_bound) {
      throw std::invalid_argument(where + ": |c_k| exceeds declared coeff_bound");
    }
    coeffs.resize(static_cast<std::size_t>(k), 0.0);
    coeffs[static_cast<std::size_t>(k) - 1] = c;
    last_k = static_cast<int>(k);
  }
  return AnalyticFunction::polynomial(std::move(coeffs));
}

double boundary_integral(const AnalyticFunction& f, double radius, int nodes) {
  if (!(radius > 0.0) || radius > 1.0) {
    throw std::invalid_argument("boundary_integral: radius must be in (0, 1]");
  }
  if (nodes < 64) {
    throw std::invalid_argument("boundary_integral: nodes must be >= 64");
  }

  static std::mutex memo_mu;
  static std::map<std::tuple<std::string, double, int>, double> memo;
  const auto key = std::make_tuple(f.id(), radius, nodes);
  {
    std::lock_guard<std::mutex> lock(memo_mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  // Truncation K: either the full finite support, or enough terms that the
  // series tail coeff_bound * r^{K+1}/(1-r) drops below 1e-18.
  int K;
  if (f.degree()) {
    K = *f.degree();
  } else if (radius < 1.0) {
    const double bound = std::max(f.coeff_bound(), 1e-30);
    K = static_cast<int>(std::ceil(std::log(1e-18 * (1.0 - radius) / bound) /
                                   std::log(radius))) +
        1;
    K = std::clamp(K, 8, 2000000);
  } else {
    throw std::domain_error(
        "boundary_integral: the series for '" + f.id() +
        "' is not summable on the unit circle; use a smaller radius");
  }

  std::vector<double> coeffs(static_cast<std::size_t>(K) + 1, 0.0);
  for (int k = 1; k <= K; ++k) coeffs[static_cast<std::size_t>(k)] = f.coeff(k);

  const double two_pi = 2.0 * std::numbers::pi;
  double acc = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double t = two_pi * j / nodes;
    const std::complex<double> z = std::polar(radius, t);
    std::complex<double> w = 0.0;
    std::complex<double> zk = 1.0;
    for (int k = 1; k <= K; ++k) {
      zk *= z;
      const double c = coeffs[static_cast<std::size_t>(k)];
      if (c != 0.0) w += c * zk;
    }
    acc += std::abs(w);
  }
  const double result = acc * two_pi / nodes;

  std::lock_guard<std::mutex> lock(memo_mu);
  memo.emplace(key, result);
  return result;
}

}  // namespace primesum
