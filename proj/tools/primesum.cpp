// Command-line front end: named constants, accelerated and brute-force prime
// series, a-priori truncation bounds, and cross-method comparison. One
// machine-readable JSON record per invocation on stdout (floats rendered
// with 17 significant digits, so identical inputs give byte-identical
// output); a human summary goes to stderr.
//
// Exit codes: 0 success (and compare passed), 2 usage, 3 domain error,
// 4 comparison failure.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "primesum/bounds.hpp"
#include "primesum/constants.hpp"
#include "primesum/functions.hpp"
#include "primesum/oracle.hpp"
#include "primesum/series.hpp"
#include "primesum/sieve.hpp"
#include "primesum/zeta.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitCompareFail = 4;

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c; break;
    }
  }
  out += '"';
  return out;
}

struct CompareDetail {
  double oracle_partial;
  double oracle_tail;
  double difference;
  double combined_bound;
  bool pass;
};

struct BudgetDetail {
  std::string kind;
  double boundary_integral;
  double radius;
  bool heuristic;
};

// The stdout record. Keys are emitted in a fixed order and floats with
// %.17g, so serialization is deterministic byte for byte.
struct Record {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // values pre-rendered
  double value = 0.0;
  std::optional<double> error_bound;
  std::optional<int> truncation;
  std::string method;
  std::optional<std::vector<primesum::SeriesResult::Term>> terms;
  std::optional<CompareDetail> compare;
  std::optional<BudgetDetail> budget;
};

void add_input(Record& r, const std::string& key, const std::string& str_value) {
  r.inputs.emplace_back(key, json_string(str_value));
}
void add_input(Record& r, const std::string& key, double v) {
  r.inputs.emplace_back(key, fmt_double(v));
}
void add_input(Record& r, const std::string& key, long long v) {
  r.inputs.emplace_back(key, std::to_string(v));
}
void add_input(Record& r, const std::string& key, bool v) {
  r.inputs.emplace_back(key, v ? "true" : "false");
}

void emit(const Record& r) {
  std::string out = "{\"schema_version\":1,\"command\":" + json_string(r.command);
  out += ",\"inputs\":{";
  for (std::size_t i = 0; i < r.inputs.size(); ++i) {
    if (i) out += ',';
    out += json_string(r.inputs[i].first) + ':' + r.inputs[i].second;
  }
  out += "},\"value\":" + fmt_double(r.value);
  out += ",\"error_bound\":";
  out += r.error_bound ? fmt_double(*r.error_bound) : "null";
  out += ",\"M\":";
  out += r.truncation ? std::to_string(*r.truncation) : "null";
  out += ",\"method\":" + json_string(r.method);
  if (r.budget) {
    out += ",\"budget\":{\"kind\":" + json_string(r.budget->kind);
    out += ",\"boundary_integral\":" + fmt_double(r.budget->boundary_integral);
    out += ",\"radius\":" + fmt_double(r.budget->radius);
    out += ",\"heuristic\":";
    out += r.budget->heuristic ? "true" : "false";
    out += '}';
  }
  if (r.compare) {
    out += ",\"compare\":{\"oracle_partial\":" + fmt_double(r.compare->oracle_partial);
    out += ",\"oracle_tail\":" + fmt_double(r.compare->oracle_tail);
    out += ",\"difference\":" + fmt_double(r.compare->difference);
    out += ",\"combined_bound\":" + fmt_double(r.compare->combined_bound);
    out += ",\"pass\":";
    out += r.compare->pass ? "true" : "false";
    out += '}';
  }
  if (r.terms) {
    out += ",\"terms\":[";
    for (std::size_t i = 0; i < r.terms->size(); ++i) {
      if (i) out += ',';
      out += "{\"n\":" + std::to_string((*r.terms)[i].n) +
             ",\"term\":" + fmt_double((*r.terms)[i].value) + '}';
    }
    out += ']';
  }
  out += "}\n";
  std::fputs(out.c_str(), stdout);
}

primesum::AnalyticFunction resolve_function(const std::string& spec) {
  if (spec.find('/') != std::string::npos ||
      std::filesystem::exists(spec)) {
    return primesum::load_coefficient_file(spec);
  }
  return primesum::builtin(spec);
}

std::uint64_t default_sieve_limit() {
  if (const char* env = std::getenv("PRIMESUM_SIEVE_LIMIT")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v >= 2) return v;
    std::cerr << "warning: ignoring malformed PRIMESUM_SIEVE_LIMIT\n";
  }
  return 1'000'000;
}

struct EvalOptions {
  std::string function;
  double s = 0.0;
  int truncation = 0;
  double tol = 0.0;
  bool logweight = false;
  std::string scheme = "zeta";
  bool terms = false;
  std::uint64_t sieve_limit = 0;
  int l_max = 64;
  bool has_m = false;
  bool has_tol = false;
};

int run_eval(const EvalOptions& opt) {
  if (opt.has_m == opt.has_tol) {
    std::cerr << "eval: exactly one of --M and --tol must be given\n";
    return kExitUsage;
  }
  if (opt.scheme == "finite" && opt.logweight) {
    std::cerr << "eval: --scheme finite does not support --logweight\n";
    return kExitUsage;
  }
  const primesum::AnalyticFunction f = resolve_function(opt.function);

  int m = opt.truncation;
  if (opt.has_tol) {
    m = opt.logweight
            ? primesum::choose_truncation_logweight(f, opt.s, opt.tol)
            : primesum::choose_truncation(f, opt.s, opt.tol);
  }

  primesum::SeriesResult result;
  std::string method;
  if (opt.scheme == "finite") {
    const primesum::PrimeSieve sieve(opt.sieve_limit);
    result = primesum::finite_scheme(f, opt.s, m, sieve, opt.l_max);
    method = "finite_scheme";
  } else if (opt.logweight) {
    result = primesum::prime_sum_logweight(f, opt.s, m);
    method = "prime_sum_logweight";
  } else {
    result = primesum::prime_sum(f, opt.s, m);
    method = "prime_sum";
  }

  Record rec;
  rec.command = "eval";
  add_input(rec, "function", opt.function);
  add_input(rec, "s", opt.s);
  if (opt.has_m) add_input(rec, "M", static_cast<long long>(opt.truncation));
  if (opt.has_tol) add_input(rec, "tol", opt.tol);
  add_input(rec, "logweight", opt.logweight);
  add_input(rec, "scheme", opt.scheme);
  if (opt.scheme == "finite") {
    add_input(rec, "sieve_limit", static_cast<long long>(opt.sieve_limit));
    add_input(rec, "l_max", static_cast<long long>(opt.l_max));
  }
  rec.value = result.value;
  rec.truncation = m;
  rec.method = method;
  if (result.budget) {
    rec.error_bound = result.budget->bound;
    rec.budget = BudgetDetail{primesum::bound_kind_name(result.budget->kind),
                              result.budget->boundary_integral,
                              result.budget->radius, result.budget->heuristic};
  }
  if (opt.terms) rec.terms = result.terms;
  emit(rec);

  std::cerr << method << "(" << f.id() << ", s=" << opt.s << ", M=" << m
            << ") = " << fmt_double(result.value);
  if (rec.error_bound) std::cerr << "  [tail bound " << fmt_double(*rec.error_bound) << "]";
  std::cerr << "\n";
  return 0;
}

int run_compare(const std::string& function, double s, int m,
                std::uint64_t limit, bool logweight) {
  const primesum::AnalyticFunction f = resolve_function(function);

  primesum::SeriesResult accel;
  primesum::OracleResult oracle;
  if (logweight) {
    accel = primesum::prime_sum_logweight(f, s, m);
    oracle = primesum::direct_logweight_sum(f, s, limit);
  } else {
    accel = primesum::prime_sum(f, s, m);
    oracle = primesum::direct_prime_sum(f, s, limit);
  }

  const double accel_bound = accel.budget ? accel.budget->bound : 0.0;
  const double combined = accel_bound + oracle.tail_bound;
  const double difference = accel.value - oracle.partial;
  const bool pass = std::fabs(difference) <= combined;

  Record rec;
  rec.command = "compare";
  add_input(rec, "function", function);
  add_input(rec, "s", s);
  add_input(rec, "M", static_cast<long long>(m));
  add_input(rec, "prime_limit", static_cast<long long>(limit));
  add_input(rec, "logweight", logweight);
  rec.value = accel.value;
  rec.error_bound = accel.budget ? std::optional<double>(accel_bound) : std::nullopt;
  rec.truncation = m;
  rec.method = "compare";
  rec.compare = CompareDetail{oracle.partial, oracle.tail_bound, difference,
                              combined, pass};
  emit(rec);

  std::cerr << "accelerated = " << fmt_double(accel.value)
            << "  oracle = " << fmt_double(oracle.partial) << " (+"
            << fmt_double(oracle.tail_bound) << " tail)"
            << "  difference = " << fmt_double(difference) << "  "
            << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : kExitCompareFail;
}

int run_bound(int prop, int m, double s, const std::string& function) {
  const primesum::AnalyticFunction f = resolve_function(function);
  primesum::ErrorBudget budget;
  if (prop == 1) {
    budget = primesum::series_tail_bound(f, m, s, f.boundary_radius());
  } else {
    budget = primesum::logweight_tail_bound(m);
  }

  Record rec;
  rec.command = "bound";
  add_input(rec, "prop", static_cast<long long>(prop));
  add_input(rec, "M", static_cast<long long>(m));
  add_input(rec, "s", s);
  add_input(rec, "function", function);
  rec.value = budget.bound;
  rec.truncation = m;
  rec.method = primesum::bound_kind_name(budget.kind);
  rec.budget = BudgetDetail{primesum::bound_kind_name(budget.kind),
                            budget.boundary_integral, budget.radius,
                            budget.heuristic};
  emit(rec);

  std::cerr << rec.method << " bound at M=" << m << ": "
            << fmt_double(budget.bound) << "\n";
  return 0;
}

int run_constant(const std::string& name) {
  primesum::NamedConstant c;
  if (name == "A") c = primesum::landau_a();
  else if (name == "B") c = primesum::landau_b();
  else if (name == "gamma") c = primesum::euler_gamma();
  else if (name == "S") c = primesum::landau_prime_series();
  else if (name == "prod_primes") c = primesum::regularized_product("primes");
  else if (name == "prod_primes_logp") c = primesum::regularized_product("primes_logp");
  else {
    std::cerr << "constant: unknown name '" << name
              << "'; valid names: A, B, gamma, S, prod_primes, prod_primes_logp\n";
    return kExitUsage;
  }

  Record rec;
  rec.command = "constant";
  add_input(rec, "name", name);
  rec.value = c.value;
  rec.error_bound = c.error_bound;
  rec.method = primesum::constant_method_name(c.method);
  emit(rec);

  std::cerr << name << " = " << fmt_double(c.value) << " (" << rec.method << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prime series via rapidly converging zeta expansions"};
  app.require_subcommand(1);

  // constant
  auto* constant_cmd = app.add_subcommand("constant", "evaluate a named constant");
  std::string constant_name;
  constant_cmd->add_option("name", constant_name,
                           "A, B, gamma, S, prod_primes, prod_primes_logp")
      ->required();

  // eval
  EvalOptions eval_opt;
  eval_opt.sieve_limit = default_sieve_limit();
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a prime series");
  eval_cmd->add_option("--function", eval_opt.function,
                       "builtin id or coefficient-file path")->required();
  eval_cmd->add_option("--s", eval_opt.s, "exponent s")->required();
  auto* m_opt = eval_cmd->add_option("--M", eval_opt.truncation, "series truncation index");
  auto* tol_opt = eval_cmd->add_option("--tol", eval_opt.tol,
                                       "choose M from this error tolerance");
  m_opt->excludes(tol_opt);
  eval_cmd->add_flag("--logweight", eval_opt.logweight,
                     "evaluate the log-weighted series sum_p f'(1/p^s) log(p)/p^s");
  eval_cmd->add_option("--scheme", eval_opt.scheme, "zeta (default) or finite")
      ->check(CLI::IsMember({"zeta", "finite"}));
  eval_cmd->add_flag("--terms", eval_opt.terms, "include the per-term ledger");
  auto* limit_opt = eval_cmd->add_option("--sieve-limit", eval_opt.sieve_limit,
                                         "prime range for the finite scheme");
  eval_cmd->add_option("--l-max", eval_opt.l_max, "inner logarithm depth (finite scheme)");

  // compare
  std::string cmp_function;
  double cmp_s = 0.0;
  int cmp_m = 0;
  bool cmp_logweight = false;
  std::uint64_t cmp_limit = default_sieve_limit();
  auto* compare_cmd = app.add_subcommand(
      "compare", "accelerated series against the sieve oracle");
  compare_cmd->add_option("--function", cmp_function)->required();
  compare_cmd->add_option("--s", cmp_s)->required();
  compare_cmd->add_option("--M", cmp_m)->required();
  auto* cmp_limit_opt = compare_cmd->add_option("--sieve-limit", cmp_limit,
                                                "oracle prime limit");
  compare_cmd->add_flag("--logweight", cmp_logweight);

  // bound
  int bound_prop = 0, bound_m = 0;
  double bound_s = 2.0;
  std::string bound_function = "identity";
  auto* bound_cmd = app.add_subcommand("bound", "a-priori truncation bound");
  bound_cmd->add_option("--prop", bound_prop, "1: boundary-integral, 2: log-weighted")
      ->required()->check(CLI::IsMember({1, 2}));
  bound_cmd->add_option("--M", bound_m)->required();
  bound_cmd->add_option("--s", bound_s)->required();
  bound_cmd->add_option("--function", bound_function);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  // Environment override applies only when the flag is absent; the flag has
  // already consumed the env default above, so nothing more to do.
  (void)limit_opt;
  (void)cmp_limit_opt;

  try {
    if (constant_cmd->parsed()) return run_constant(constant_name);
    if (eval_cmd->parsed()) {
      eval_opt.has_m = m_opt->count() > 0;
      eval_opt.has_tol = tol_opt->count() > 0;
      return run_eval(eval_opt);
    }
    if (compare_cmd->parsed()) {
      return run_compare(cmp_function, cmp_s, cmp_m, cmp_limit, cmp_logweight);
    }
    if (bound_cmd->parsed()) {
      return run_bound(bound_prop, bound_m, bound_s, bound_function);
    }
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
