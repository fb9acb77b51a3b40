// Command-line surface for the twisted-commutation counting library.
//
// Subcommands:
//   count   exact counts by closed form, series evaluation, or enumeration
//   poly    the count as a canonical polynomial in q
//   series  coefficients of the class generating series
//   verify  the cross-validation suite
//
// Output is line-delimited JSON by default (--format csv for CSV).  Exit
// codes: 0 success, 1 verification/consistency failure, 2 usage error,
// 3 enumeration budget refusal.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcommute/counting.hpp"
#include "qcommute/errors.hpp"
#include "qcommute/field.hpp"
#include "qcommute/oracle.hpp"
#include "qcommute/series.hpp"
#include "qcommute/verify.hpp"

using json = nlohmann::ordered_json;
using namespace qcommute;

namespace {

constexpr unsigned kMaxSeriesOrder = 40;

struct OutputSink {
  bool csv = false;
  bool timings = false;
  bool wrote_header = false;

  static std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"') out += '"';
      out += ch;
    }
    out += '"';
    return out;
  }

  void emit(const json& record) {
    if (!csv) {
      std::cout << record.dump() << "\n";
      return;
    }
    if (!wrote_header) {
      bool first = true;
      for (auto it = record.begin(); it != record.end(); ++it) {
        if (!first) std::cout << ',';
        std::cout << csv_escape(it.key());
        first = false;
      }
      std::cout << "\n";
      wrote_header = true;
    }
    bool first = true;
    for (auto it = record.begin(); it != record.end(); ++it) {
      if (!first) std::cout << ',';
      const json& v = it.value();
      if (v.is_string())
        std::cout << csv_escape(v.get<std::string>());
      else if (v.is_boolean())
        std::cout << (v.get<bool>() ? "true" : "false");
      else if (v.is_null())
        std::cout << "";
      else
        std::cout << v.dump();
      first = false;
    }
    std::cout << "\n";
  }
};

// Factors q into p^k; returns false unless q is a prime power.
bool factor_prime_power(std::uint64_t q, std::uint64_t& p, unsigned& k) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      k = 0;
      while (q > 1) {
        if (q % d != 0) return false;
        q /= d;
        ++k;
      }
      return true;
    }
  }
  p = q;
  k = 1;
  return true;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("QCOMMUTE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw std::invalid_argument("QCOMMUTE_BUDGET must be a positive integer");
  }
  return kDefaultOracleBudget;
}

struct FieldArgs {
  std::uint64_t q = 0;  // prime power shorthand
  std::uint64_t p = 0;
  unsigned k = 1;

  bool given() const { return q != 0 || p != 0; }

  FieldPtr make() const {
    if (q != 0 && p != 0)
      throw std::invalid_argument("give either --q or --p/--k, not both");
    if (q != 0) {
      std::uint64_t pp;
      unsigned kk;
      if (!factor_prime_power(q, pp, kk))
        throw std::invalid_argument("--q must be a prime power");
      return Field::make(pp, kk);
    }
    return Field::make(p, k);
  }
};

struct CountArgs {
  std::string set_token;
  unsigned n = 0;
  unsigned m = 0;  // 0 = not given
  std::string zeta_text;
  FieldArgs field;
  std::string method = "closed";
  unsigned workers = 1;
  std::uint64_t budget = 0;  // 0 = default/env
};

struct PolyArgs {
  std::string set_token;
  unsigned n = 0;
  unsigned m = 1;
};

struct SeriesArgs {
  std::string set_token;
  unsigned m = 1;
  unsigned max_n = 12;
  std::uint64_t eval_q = 0;  // 0 = symbolic
};

struct VerifyArgs {
  std::string level = "fast";
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::uint64_t budget = 0;
};

std::string big_to_string(const BigInt& v) { return v.str(); }

CountSet require_count_set(const std::string& token) {
  auto set = parse_count_set(token);
  if (!set) throw std::invalid_argument("--set must be one of K, U, N, S");
  return *set;
}

// One computed count as an output record.
json count_record(const std::string& set, unsigned n, std::uint64_t q, unsigned m,
                  const std::string& zeta, const char* method, const BigInt& value,
                  std::optional<double> wall_ms) {
  json rec;
  rec["command"] = "count";
  rec["set"] = set;
  rec["n"] = n;
  rec["q"] = q;
  rec["m"] = m;
  if (!zeta.empty()) rec["zeta"] = zeta;
  rec["method"] = method;
  rec["value"] = big_to_string(value);
  if (wall_ms) rec["wall_ms"] = *wall_ms;
  return rec;
}

int run_count(const CountArgs& args, OutputSink& sink) {
  CountSet set = require_count_set(args.set_token);
  if (!args.field.given())
    throw std::invalid_argument("count requires a field (--q or --p/--k)");
  FieldPtr field = args.field.make();
  const std::uint64_t q = field->size();

  // Resolve the scaling: either an explicit element or an order.
  unsigned m = args.m;
  std::optional<FieldElement> zeta;
  if (!args.zeta_text.empty()) {
    if (m != 0)
      throw std::invalid_argument("give either --m or --zeta, not both");
    zeta = parse_element(field, args.zeta_text);
    if (zeta->is_zero()) throw std::invalid_argument("zeta must be nonzero");
    m = multiplicative_order(*zeta);
  } else {
    if (m == 0) m = 1;
    if ((q - 1) % m != 0)
      throw std::invalid_argument("no element of order " + std::to_string(m) +
                                  " exists in a field with " + std::to_string(q) +
                                  " elements (m must divide q-1)");
  }

  const bool want_all = args.method == "all";
  std::vector<std::string> methods;
  if (want_all) {
    methods = set == CountSet::classes ? std::vector<std::string>{"closed", "oracle"}
                                       : std::vector<std::string>{"closed", "series", "oracle"};
  } else {
    methods = {args.method};
  }

  const std::uint64_t budget = args.budget ? args.budget : default_budget();
  std::vector<BigInt> values;
  for (const std::string& method : methods) {
    auto t0 = std::chrono::steady_clock::now();
    BigInt value;
    std::string zeta_text;
    if (method == "closed") {
      value = set == CountSet::classes ? count_classes(args.n, m, BigInt(q))
                                       : count_closed_form(set, args.n, m, BigInt(q));
    } else if (method == "series") {
      if (set == CountSet::classes)
        throw std::invalid_argument(
            "similarity classes have no generating series; use closed or oracle");
      if (args.n > kMaxSeriesOrder)
        throw std::invalid_argument("series method supports n up to " +
                                    std::to_string(kMaxSeriesOrder));
      value = count_value_by_series(set, m, args.n, BigInt(q));
    } else if (method == "oracle") {
      if (set == CountSet::classes) {
        // Enumeration route: count twist-stable invariant factor chains.
        value = count_classes_by_enumeration(field, args.n, m);
      } else {
        FieldElement z = zeta ? *zeta : [&] {
          auto found = element_of_order(field, m);
          if (!found)
            throw std::invalid_argument("no element of order " + std::to_string(m) +
                                        " in this field");
          return *found;
        }();
        zeta_text = to_string(z);
        OracleJob job{field, args.n, z, set, args.workers, budget};
        value = oracle_count(job);
      }
    } else {
      throw std::invalid_argument("unknown method: " + method);
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    if (zeta_text.empty() && zeta) zeta_text = to_string(*zeta);
    sink.emit(count_record(args.set_token, args.n, q, m, zeta_text, method.c_str(),
                           value,
                           sink.timings ? std::optional<double>(ms) : std::nullopt));
    values.push_back(value);
  }

  if (want_all) {
    bool consistent = true;
    for (const BigInt& v : values) consistent = consistent && v == values.front();
    json rec;
    rec["command"] = "count";
    rec["set"] = args.set_token;
    rec["n"] = args.n;
    rec["q"] = q;
    rec["m"] = m;
    rec["method"] = "all";
    rec["value"] = big_to_string(values.front());
    rec["verdict"] = consistent ? "consistent" : "inconsistent";
    sink.emit(rec);
    if (!consistent) return 1;
  }
  return 0;
}

int run_poly(const PolyArgs& args, OutputSink& sink) {
  CountSet set = require_count_set(args.set_token);
  if (set == CountSet::classes)
    throw std::invalid_argument("similarity classes have no generating series; "
                                "use `count --set S --method closed`");
  if (args.m == 0) throw std::invalid_argument("--m must be positive");
  if (args.n > kMaxSeriesOrder)
    throw std::invalid_argument("poly supports n up to " + std::to_string(kMaxSeriesOrder));
  QPoly p = count_polynomial(set, args.m, args.n);
  json rec;
  rec["command"] = "poly";
  rec["set"] = args.set_token;
  rec["n"] = args.n;
  rec["m"] = args.m;
  rec["poly"] = p.to_string();
  rec["note"] = "requires m | q-1";
  sink.emit(rec);
  return 0;
}

int run_series(const SeriesArgs& args, OutputSink& sink) {
  CountSet set = require_count_set(args.set_token);
  if (set == CountSet::classes)
    throw std::invalid_argument("similarity classes have no generating series");
  if (args.m == 0) throw std::invalid_argument("--m must be positive");
  if (args.max_n > kMaxSeriesOrder)
    throw std::invalid_argument("--max-n is capped at " + std::to_string(kMaxSeriesOrder));
  XSeries series = class_generating_series(set, args.m, args.max_n);
  for (unsigned d = 0; d <= args.max_n; ++d) {
    QRat coeff = series.coeff(d);
    json rec;
    rec["command"] = "series";
    rec["set"] = args.set_token;
    rec["m"] = args.m;
    rec["degree"] = d;
    rec["coeff"] = coeff.to_string();
    if (args.eval_q != 0) {
      BigRat value = coeff.eval(BigRat(args.eval_q));
      rec["value"] = value.str();
    }
    sink.emit(rec);
  }
  return 0;
}

int run_verify(const VerifyArgs& args, OutputSink& sink) {
  VerifyOptions options;
  if (args.level == "fast") {
    options.level = VerifyLevel::fast;
  } else if (args.level == "full") {
    options.level = VerifyLevel::full;
  } else {
    throw std::invalid_argument("--level must be fast or full");
  }
  options.threads = args.threads == 0 ? 1 : args.threads;
  options.seed = args.seed;
  options.oracle_budget = args.budget ? args.budget : default_budget();

  VerifySummary summary = run_verification(options);
  for (const CheckResult& ch : summary.checks) {
    json rec;
    rec["command"] = "verify";
    rec["check"] = ch.name;
    rec["passed"] = ch.passed;
    rec["cases"] = ch.cases_checked;
    if (!ch.passed) rec["detail"] = ch.detail;
    if (sink.timings) rec["wall_ms"] = ch.seconds * 1000.0;
    sink.emit(rec);
  }
  json rec;
  rec["command"] = "verify";
  rec["level"] = args.level;
  rec["checks"] = summary.checks.size();
  rec["cases"] = summary.total_cases();
  rec["passed"] = summary.all_passed();
  sink.emit(rec);
  return summary.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counts of matrix pairs A*B = zeta*B*A over finite fields"};
  app.require_subcommand(1);
  // Let global flags (--format, --timings) appear after the subcommand too.
  app.fallthrough(true);

  OutputSink sink;
  std::string format = "jsonl";
  app.add_option("--format", format, "output format: jsonl (default) or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  app.add_flag("--timings", sink.timings, "include wall-clock timings in records");

  CountArgs count_args;
  CLI::App* count = app.add_subcommand(
      "count", "count pairs (K), nonsingular pairs (U), nilpotent pairs (N), or "
               "stable similarity classes (S)");
  count->add_option("--set", count_args.set_token, "K, U, N, or S")->required();
  count->add_option("--n", count_args.n, "matrix size")->required();
  count->add_option("--m", count_args.m, "multiplicative order of the scaling");
  count->add_option("--zeta", count_args.zeta_text,
                    "scaling as a field element literal, e.g. \"2\" or \"1+t\"");
  count->add_option("--q", count_args.field.q, "field size (prime power)");
  count->add_option("--p", count_args.field.p, "field characteristic");
  count->add_option("--k", count_args.field.k, "extension degree (with --p)");
  count->add_option("--method", count_args.method, "closed, series, oracle, or all")
      ->check(CLI::IsMember({"closed", "series", "oracle", "all"}));
  count->add_option("--workers", count_args.workers, "enumeration worker threads");
  count->add_option("--budget", count_args.budget,
                    "enumeration step budget (default 2^34, or QCOMMUTE_BUDGET)");

  PolyArgs poly_args;
  CLI::App* poly = app.add_subcommand("poly", "closed-form count as a polynomial in q");
  poly->add_option("--set", poly_args.set_token, "K, U, or N")->required();
  poly->add_option("--n", poly_args.n, "matrix size")->required();
  poly->add_option("--m", poly_args.m, "multiplicative order of the scaling");

  SeriesArgs series_args;
  CLI::App* series = app.add_subcommand(
      "series", "coefficients of the class generating series in x");
  series->add_option("--set", series_args.set_token, "K, U, or N")->required();
  series->add_option("--m", series_args.m, "multiplicative order of the scaling");
  series->add_option("--max-n", series_args.max_n, "truncation order (<= 40)");
  series->add_option("--eval-q", series_args.eval_q, "also evaluate exactly at this q");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run the cross-validation suite");
  verify->add_option("--level", verify_args.level, "fast or full")
      ->check(CLI::IsMember({"fast", "full"}));
  verify->add_option("--seed", verify_args.seed, "seed for sampled checks");
  verify->add_option("--threads", verify_args.threads, "worker threads");
  verify->add_option("--budget", verify_args.budget,
                     "enumeration step budget (default 2^34, or QCOMMUTE_BUDGET)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  sink.csv = format == "csv";
  try {
    if (count->parsed()) return run_count(count_args, sink);
    if (poly->parsed()) return run_poly(poly_args, sink);
    if (series->parsed()) return run_series(series_args, sink);
    if (verify->parsed()) return run_verify(verify_args, sink);
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
