#pragma once

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace primesum {

struct ZetaValue {
  double value;
  double abs_error;  // a-priori estimate: truncation tail plus rounding envelope
};

// Memoized real-axis zeta values, keyed by the exact bit pattern of s so
// repeated evaluations at the same argument hit the cache. Thread safe; the
// kernel is pure, so results do not depend on call interleaving.
class ZetaTable {
 public:
  // order 0, 1, 2 -> zeta, zeta', zeta''. Domain s in (-1, inf), s != 1.
  ZetaValue value(double s, int order = 0);

  // log(zeta(s)) for s > 1, formed as log1p(zeta(s) - 1) with zeta(s) - 1
  // accumulated directly from n >= 2, so the result keeps full significance
  // (and stays positive) out to very large s.
  double log_value(double s);

  struct Entry {
    double s;
    int order;  // 0, 1, 2, or 3 for the log path
    ZetaValue v;
  };
  std::vector<Entry> snapshot() const;
  std::size_t size() const;

  static ZetaTable& global();

 private:
  struct Key {
    std::uint64_t bits;
    int order;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<std::uint64_t>()(k.bits * 1000003u ^
                                        static_cast<std::uint64_t>(k.order));
    }
  };

  mutable std::mutex mu_;
  std::unordered_map<Key, ZetaValue, KeyHash> cache_;
};

// Convenience wrappers over ZetaTable::global().
double zeta(double s);
double zeta_deriv(double s, int order);  // order 1 or 2
double log_zeta(double s);
ZetaValue zeta_checked(double s, int order = 0);

namespace detail {

// Euler-Maclaurin evaluation: truncated sum to nodes-1, integral and
// midpoint terms, Bernoulli corrections through B20, differentiated
// analytically for order 1 and 2. Valid on (-1, inf) \ {1}. The same formula
// is the analytic continuation below s = 1.
ZetaValue euler_maclaurin_zeta(double s, int order, int nodes);

// zeta(s) - 1 for s > 1: the n = 1 term never enters, so no cancellation.
double zeta_minus_one(double s, int nodes);

inline constexpr int kDefaultNodes = 8;

}  // namespace detail

}  // namespace primesum
