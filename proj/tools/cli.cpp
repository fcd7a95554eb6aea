#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "pendlab/eta.hpp"
#include "pendlab/families.hpp"
#include "pendlab/newman.hpp"
#include "pendlab/number_theory.hpp"
#include "pendlab/partitions.hpp"
#include "pendlab/report.hpp"
#include "pendlab/table_cache.hpp"
#include "pendlab/theta.hpp"

namespace pendlab::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { json, csv, text };

struct Options {
  std::string range;
  std::string quotient;
  std::uint64_t expand_order = 0;
  std::string target;

  std::uint64_t N = 0;
  std::uint64_t mod = 0;
  std::uint64_t k = 0;
  std::uint64_t n_max = 0;
  std::vector<std::uint64_t> primes;
  std::string backend;
  std::string format;
  std::string cache_dir;
  std::string output;
  bool oracle = false;

  bool has_N = false;
  bool has_mod = false;
  bool has_k = false;
  bool has_n_max = false;
};

const CLI::Validator kDecimal(
    [](std::string& value) -> std::string {
      if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        return "expected a decimal integer, got '" + value + "'";
      }
      return {};
    },
    "DECIMAL");

Format parse_format(const std::string& name, Format fallback) {
  if (name.empty()) return fallback;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw UsageError("unknown format: " + name);
}

// Backend in which coefficients are computed, and the modulus (if any) applied
// when printing.
struct ValueMode {
  Backend backend;
  std::optional<std::uint64_t> display_mod;
};

ValueMode resolve_backend(const Options& opt) {
  const std::string& b = opt.backend;
  if (opt.has_mod && opt.mod < 2) throw UsageError("--mod must be at least 2");
  if (b.empty()) {
    if (!opt.has_mod) return {Backend::exact(), std::nullopt};
    return {opt.mod == 2 ? Backend::parity() : Backend::residue(opt.mod), std::nullopt};
  }
  if (b == "exact") {
    return {Backend::exact(), opt.has_mod ? std::optional(opt.mod) : std::nullopt};
  }
  if (b == "parity") {
    if (opt.has_mod && opt.mod != 2) throw UsageError("--backend parity implies --mod 2");
    return {Backend::parity(), std::nullopt};
  }
  if (b == "residue") {
    if (!opt.has_mod) throw UsageError("--backend residue needs --mod");
    if (opt.mod > Backend::kMaxModulus) throw UsageError("--mod exceeds 2^62");
    return {Backend::residue(opt.mod), std::nullopt};
  }
  throw UsageError("unknown backend: " + b);
}

std::optional<TableCache> open_cache(const Options& opt) {
  std::string dir = opt.cache_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("PENDLAB_CACHE")) dir = env;
  }
  if (dir.empty()) return std::nullopt;
  return TableCache(dir);
}

Series table(TableKind kind, std::size_t order, Backend backend, const std::optional<TableCache>& cache) {
  if (cache) return cache->get(kind, order, backend).values;
  return make_table(kind, order, backend).values;
}

std::string value_string(const Series& s, std::size_t n, const std::optional<std::uint64_t>& display_mod) {
  if (!s.backend().is_exact()) return std::to_string(s.residue(n));
  BigInt v = s.coefficient(n);
  if (display_mod) {
    const BigInt m(static_cast<unsigned long>(*display_mod));
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  }
  return v.get_str();
}

void print_values(std::ostream& out, const Series& s, std::size_t first, std::size_t last,
                  const std::optional<std::uint64_t>& display_mod, Format format) {
  switch (format) {
    case Format::text:
      for (std::size_t n = first; n <= last; ++n) out << (n == first ? "" : ",") << value_string(s, n, display_mod);
      out << '\n';
      break;
    case Format::csv:
      out << "n,value\n";
      for (std::size_t n = first; n <= last; ++n) out << n << ',' << value_string(s, n, display_mod) << '\n';
      break;
    case Format::json:
      // Hand-rolled so exact values of any size stay JSON numbers.
      out << '[';
      for (std::size_t n = first; n <= last; ++n) out << (n == first ? "" : ",") << value_string(s, n, display_mod);
      out << "]\n";
      break;
  }
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  auto number = [&](std::string_view part) {
    std::string s(part);
    if (!kDecimal(s).empty()) throw UsageError("bad index in range '" + text + "'");
    try {
      return std::stoull(s);
    } catch (const std::out_of_range&) {
      throw UsageError("index out of range in '" + text + "'");
    }
  };
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    const std::uint64_t n = number(text);
    return {n, n};
  }
  const std::uint64_t a = number(std::string_view(text).substr(0, dots));
  const std::uint64_t b = number(std::string_view(text).substr(dots + 2));
  if (b < a) throw UsageError("empty range '" + text + "'");
  return {a, b};
}

int cmd_pend(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto [first, last] = parse_range(opt.range);
  const ValueMode mode = resolve_backend(opt);
  const Format format = parse_format(opt.format, Format::text);
  const Series values = table(TableKind::pend, last + 1, mode.backend, open_cache(opt));

  if (opt.oracle) {
    for (std::uint64_t n = first; n <= std::min<std::uint64_t>(last, 60); ++n) {
      const BigInt expected(static_cast<unsigned long>(pend_bruteforce(static_cast<unsigned>(n))));
      bool agrees = false;
      if (mode.backend.is_exact()) {
        agrees = values.coefficient(n) == expected;
      } else {
        agrees = values.residue(n) == mpz_fdiv_ui(expected.get_mpz_t(), mode.backend.modulus());
      }
      if (!agrees) {
        err << "oracle mismatch at n=" << n << ": series " << values.coefficient(n).get_str() << ", brute force "
            << expected.get_str() << '\n';
        return kExitRefuted;
      }
    }
  }
  print_values(out, values, first, last, mode.display_mod, format);
  return kExitVerified;
}

int cmd_expand(const Options& opt, std::ostream& out) {
  const EtaQuotient quotient = EtaQuotient::parse(opt.quotient);
  if (opt.expand_order == 0) throw UsageError("truncation N must be at least 1");
  const ValueMode mode = resolve_backend(opt);
  const Format format = parse_format(opt.format, Format::text);
  const Series s = expand_quotient(quotient, opt.expand_order, mode.backend);
  print_values(out, s, 0, s.order() - 1, mode.display_mod, format);
  return kExitVerified;
}

enum class Outcome { verified, insufficient, refuted };

Outcome combine(Outcome a, Outcome b) { return std::max(a, b); }

Outcome outcome_of(FamilyStatus s) {
  switch (s) {
    case FamilyStatus::verified:
      return Outcome::verified;
    case FamilyStatus::insufficient_range:
      return Outcome::insufficient;
    case FamilyStatus::refuted:
      return Outcome::refuted;
  }
  return Outcome::refuted;
}

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::verified:
      return "verified";
    case Outcome::insufficient:
      return "insufficient-range";
    case Outcome::refuted:
      return "refuted";
  }
  return "refuted";
}

int exit_code(Outcome o) {
  switch (o) {
    case Outcome::verified:
      return kExitVerified;
    case Outcome::insufficient:
      return kExitInsufficientRange;
    case Outcome::refuted:
      return kExitRefuted;
  }
  return kExitRefuted;
}

// A rendered report: the JSON body plus flat rows for csv/text.
struct Report {
  Json body;
  std::string csv;
  std::string text;
  Outcome outcome = Outcome::verified;
};

std::string families_text(const std::vector<FamilyReport>& reports) {
  std::ostringstream s;
  for (const FamilyReport& r : reports) {
    s << to_string(r.status) << " A=" << r.family.modulus << " B=" << r.family.residue << " mod "
      << r.family.check_modulus << " expected " << r.family.expected << " n_checked=" << r.n_checked
      << " counterexamples=" << r.counterexamples.size() << " [" << r.family.provenance << "]\n";
  }
  return s.str();
}

std::vector<std::uint64_t> primes_or(const Options& opt, std::vector<std::uint64_t> fallback) {
  std::vector<std::uint64_t> primes = opt.primes.empty() ? std::move(fallback) : opt.primes;
  for (std::uint64_t p : primes) {
    if (p < 5 || !is_prime(p)) throw UsageError("--p values must be primes >= 5, got " + std::to_string(p));
  }
  return primes;
}

Report verify_identity(const Options& opt, const std::optional<TableCache>& cache) {
  const std::size_t N = opt.has_N ? opt.N : 1'000'000;
  const Series pend = table(TableKind::pend, N, Backend::parity(), cache);
  const Series a = table(TableKind::a, N, Backend::parity(), cache);
  std::uint64_t mismatches = 0;
  std::optional<std::uint64_t> first;
  const auto pw = pend.bits().words();
  const auto aw = a.bits().words();
  for (std::size_t w = 0; w < pw.size(); ++w) {
    const std::uint64_t diff = pw[w] ^ aw[w];
    if (diff == 0) continue;
    mismatches += static_cast<std::uint64_t>(__builtin_popcountll(diff));
    if (!first) first = 64 * w + static_cast<std::uint64_t>(__builtin_ctzll(diff));
  }
  Report r;
  r.outcome = mismatches == 0 ? Outcome::verified : Outcome::refuted;
  r.body["target"] = "identity";
  r.body["N"] = N;
  r.body["relation"] = "pend(n) == a(n) mod 2";
  r.body["mismatches"] = mismatches;
  r.body["first_mismatch"] = first ? Json(*first) : Json(nullptr);
  r.body["status"] = outcome_name(r.outcome);
  r.csv = "check,N,mismatches,status\nparity-bridge," + std::to_string(N) + ',' + std::to_string(mismatches) + ',' +
          outcome_name(r.outcome) + '\n';
  r.text = outcome_name(r.outcome) + ": pend(n) == a(n) mod 2 for n < " + std::to_string(N) + " (" +
           std::to_string(mismatches) + " mismatches)\n";
  return r;
}

Report verify_theta(const Options& opt) {
  const std::size_t N = opt.has_N ? opt.N : 2000;
  struct Check {
    std::string name;
    bool holds;
    std::optional<std::size_t> first_mismatch;
  };
  std::vector<Check> checks;
  auto compare = [&](const std::string& name, const Series& lhs, const Series& rhs) {
    std::optional<std::size_t> first;
    for (std::size_t i = 0; i < N && !first; ++i) {
      if (lhs.coefficient(i) != rhs.coefficient(i)) first = i;
    }
    checks.push_back({name, !first, first});
  };
  compare("phi=f2^5/(f1^2 f4^2)", phi(N), expand_quotient(EtaQuotient{{2, 5}, {1, -2}, {4, -2}}, N));
  compare("psi=f2^2/f1", psi(N), expand_quotient(EtaQuotient{{2, 2}, {1, -1}}, N));
  compare("f(-q,-q^2)=f1", theta_sum(kEulerSpecialization, N), expand_quotient(EtaQuotient{{1, 1}}, N));
  const std::pair<const char*, ThetaSpecialization> jtp[] = {
      {"jtp f(q,q)", kPhiSpecialization}, {"jtp f(q,q^3)", kPsiSpecialization}, {"jtp f(-q,-q^2)", kEulerSpecialization}};
  for (const auto& [name, spec] : jtp) {
    const JtpResult res = jtp_check(spec, N);
    checks.push_back({name, res.holds, res.first_mismatch});
  }

  Report r;
  Json list = Json::array();
  r.csv = "check,N,status,first_mismatch\n";
  for (const Check& c : checks) {
    const Outcome o = c.holds ? Outcome::verified : Outcome::refuted;
    r.outcome = combine(r.outcome, o);
    list.push_back(Json{{"check", c.name},
                        {"status", outcome_name(o)},
                        {"first_mismatch", c.first_mismatch ? Json(*c.first_mismatch) : Json(nullptr)}});
    r.csv += '"' + c.name + "\"," + std::to_string(N) + ',' + outcome_name(o) + ',' +
             (c.first_mismatch ? std::to_string(*c.first_mismatch) : std::string()) + '\n';
    r.text += outcome_name(o) + ": " + c.name + " to order " + std::to_string(N) + '\n';
  }
  r.body["target"] = "theta";
  r.body["N"] = N;
  r.body["checks"] = std::move(list);
  r.body["status"] = outcome_name(r.outcome);
  return r;
}

Report verify_newman(const Options& opt, const std::optional<TableCache>& cache) {
  const std::vector<std::uint64_t> primes = primes_or(opt, {5, 7, 11, 13});
  const std::map<std::uint64_t, std::uint64_t> default_n = {{5, 200}, {7, 100}, {11, 30}, {13, 30}};
  const std::map<std::uint64_t, std::uint64_t> default_step3 = {{5, 30}, {7, 10}, {11, 2}, {13, 1}};
  const ValueMode mode = resolve_backend(opt);
  if (mode.backend.kind() == BackendKind::parity || mode.display_mod) {
    throw UsageError("verify newman runs over the exact backend or --backend residue --mod M");
  }

  Report r;
  Json results = Json::array();
  r.csv = "p,relation,n_max,checked,nonzero,status\n";
  for (std::uint64_t p : primes) {
    const std::uint64_t n_max = opt.has_n_max ? opt.n_max : (default_n.count(p) ? default_n.at(p) : 10);
    const std::uint64_t n_max3 = opt.has_n_max ? opt.n_max / p : (default_step3.count(p) ? default_step3.at(p) : 0);
    const std::size_t order = std::max(newman_required_order(p, n_max), step3_required_order(p, n_max3));

    const NewmanParams params = NewmanParams::pend_instance(p);
    const AlphaFit fit = fit_alpha(p, table(TableKind::a, params.delta() + 1, Backend::exact(), cache));
    const Series a = table(TableKind::a, order, mode.backend, cache);
    const ResidualScan three = scan_residuals(Relation::three_term, p, n_max, a, fit.alpha);
    const ResidualScan step3 = scan_residuals(Relation::step3, p, n_max3, a, fit.alpha);

    Json entry;
    entry["p"] = p;
    entry["delta"] = params.delta();
    entry["backend"] = mode.backend.name();
    entry["alpha"] = fit.alpha.get_str();
    entry["fitted_alpha"] = fit.fitted_alpha.get_str();
    entry["omega_parity"] = fit.omega_parity;
    entry["three_term"] = to_json(three);
    entry["step3"] = to_json(step3);
    results.push_back(std::move(entry));

    for (const auto& [name, scan] : {std::pair<const char*, const ResidualScan*>{"three-term", &three}, {"step3", &step3}}) {
      const Outcome o = scan->vanishes() ? Outcome::verified : Outcome::refuted;
      r.outcome = combine(r.outcome, o);
      r.csv += std::to_string(p) + ',' + name + ',' + std::to_string(scan->n_max) + ',' + std::to_string(scan->checked) +
               ',' + std::to_string(scan->nonzero.size()) + ',' + outcome_name(o) + '\n';
      r.text += outcome_name(o) + ": p=" + std::to_string(p) + ' ' + name + " relation, n=0.." +
                std::to_string(scan->n_max) + ", " + std::to_string(scan->nonzero.size()) + " nonzero residuals (alpha=" +
                fit.alpha.get_str() + ")\n";
    }
  }
  r.body["target"] = "newman";
  r.body["results"] = std::move(results);
  r.body["status"] = outcome_name(r.outcome);
  return r;
}

Report verify_theorem(const Options& opt, const std::optional<TableCache>& cache) {
  const std::size_t N = opt.has_N ? opt.N : 1'000'000;
  const std::vector<std::uint64_t> primes = primes_or(opt, {5});
  const unsigned k_max = static_cast<unsigned>(opt.has_k ? opt.k : 0);
  const Series pend = table(TableKind::pend, N, Backend::parity(), cache);

  Report r;
  Json list = Json::array();
  r.csv = "p,case," + family_csv_header() + '\n';
  for (std::uint64_t p : primes) {
    const PrimeCase prime_case = classify(p, pend);
    std::vector<ProgressionFamily> families;
    for (unsigned k = 0; k <= k_max; ++k) {
      for (ProgressionFamily& f : theorem_families(prime_case, k)) {
        const bool duplicate = std::any_of(families.begin(), families.end(), [&](const ProgressionFamily& g) {
          return g.point && f.point && g.residue == f.residue;
        });
        if (!duplicate) families.push_back(std::move(f));
      }
    }
    const std::vector<FamilyReport> reports = verify_families(families, pend);
    Json entry = to_json(prime_case);
    Json family_list = Json::array();
    for (const FamilyReport& fr : reports) {
      r.outcome = combine(r.outcome, outcome_of(fr.status));
      family_list.push_back(to_json(fr));
      r.csv += std::to_string(p) + ',' + std::string(to_string(prime_case.label)) + ',' + to_csv_row(fr) + '\n';
    }
    entry["families"] = std::move(family_list);
    list.push_back(std::move(entry));
    r.text += "p=" + std::to_string(p) + " delta=" + std::to_string(prime_case.delta) + " pend(delta) mod 2 = " +
              std::to_string(prime_case.pend_delta_parity) + " -> " + std::string(to_string(prime_case.label)) + '\n' +
              families_text(reports);
  }
  r.body["target"] = "theorem";
  r.body["N"] = N;
  r.body["k"] = k_max;
  r.body["primes"] = std::move(list);
  r.body["status"] = outcome_name(r.outcome);
  return r;
}

Report verify_sellers(const Options& opt, const std::optional<TableCache>& cache) {
  const std::size_t N = opt.has_N ? opt.N : 100'000;
  const unsigned alpha_max = static_cast<unsigned>(opt.has_k ? opt.k : 3);
  const Series pend = table(TableKind::pend, N, Backend::residue(3), cache);
  const std::vector<FamilyReport> reports = verify_families(sellers_families(alpha_max), pend);

  Report r;
  Json list = Json::array();
  r.csv = family_csv_header() + '\n';
  for (const FamilyReport& fr : reports) {
    r.outcome = combine(r.outcome, outcome_of(fr.status));
    list.push_back(to_json(fr));
    r.csv += to_csv_row(fr) + '\n';
  }
  r.text = families_text(reports);
  r.body["target"] = "sellers";
  r.body["N"] = N;
  r.body["alpha_max"] = alpha_max;
  r.body["families"] = std::move(list);
  r.body["status"] = outcome_name(r.outcome);
  return r;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const Format format = parse_format(opt.format, Format::json);
  if (opt.has_N && opt.N == 0) throw UsageError("--N must be at least 1");
  const std::optional<TableCache> cache = open_cache(opt);
  Report report;
  if (opt.target == "identity") {
    report = verify_identity(opt, cache);
  } else if (opt.target == "theta") {
    report = verify_theta(opt);
  } else if (opt.target == "newman") {
    report = verify_newman(opt, cache);
  } else if (opt.target == "theorem") {
    report = verify_theorem(opt, cache);
  } else if (opt.target == "sellers") {
    report = verify_sellers(opt, cache);
  } else {
    throw UsageError("unknown verify target: " + opt.target);
  }

  std::string rendered;
  switch (format) {
    case Format::json:
      rendered = report.body.dump(2) + '\n';
      break;
    case Format::csv:
      rendered = report.csv;
      break;
    case Format::text:
      rendered = report.text + "status: " + outcome_name(report.outcome) + '\n';
      break;
  }
  if (opt.output.empty()) {
    out << rendered;
  } else {
    std::ofstream file(opt.output, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write " + opt.output);
    file << rendered;
  }
  return exit_code(report.outcome);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"pendlab: PEND partition coefficients, eta-quotient expansion and congruence verification"};
  app.require_subcommand(1);
  Options opt;

  auto add_value_flags = [&](CLI::App* cmd) {
    cmd->add_option("--mod", opt.mod, "Print or compute values modulo M")->check(kDecimal);
    cmd->add_option("--backend", opt.backend, "Coefficient backend")->check(CLI::IsMember({"exact", "parity", "residue"}));
    cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  };

  CLI::App* pend = app.add_subcommand("pend", "Print pend(n) for one index or a range a..b");
  pend->add_option("range", opt.range, "Index n or range a..b")->required();
  add_value_flags(pend);
  pend->add_flag("--oracle", opt.oracle, "Cross-check n <= 60 against brute-force enumeration");
  pend->add_option("--cache-dir", opt.cache_dir, "Coefficient table cache directory");

  CLI::App* expand = app.add_subcommand("expand", "Expand an eta quotient such as \"2:1,12:1,1:-1,4:-1,6:-1\"");
  expand->add_option("quotient", opt.quotient, "Comma-separated k:e pairs")->required();
  expand->add_option("N", opt.expand_order, "Truncation order")->required()->check(kDecimal);
  add_value_flags(expand);

  CLI::App* verify = app.add_subcommand("verify", "Run a verification campaign");
  verify->add_option("target", opt.target, "identity | theta | newman | theorem | sellers")
      ->required()
      ->check(CLI::IsMember({"identity", "theta", "newman", "theorem", "sellers"}));
  verify->add_option("--N", opt.N, "Table order")->check(kDecimal);
  verify->add_option("--p", opt.primes, "Primes (repeat or comma-separate)")->delimiter(',')->check(kDecimal);
  verify->add_option("--k", opt.k, "Highest level k (theorem) or alpha (sellers)")->check(kDecimal);
  verify->add_option("--n-max", opt.n_max, "Largest n for recurrence checks")->check(kDecimal);
  add_value_flags(verify);
  verify->add_option("--cache-dir", opt.cache_dir, "Coefficient table cache directory");
  verify->add_option("--output", opt.output, "Write the report to a file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitVerified;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  auto seen = [](CLI::App* cmd, const char* name) {
    CLI::Option* o = cmd->get_option_no_throw(name);
    return o != nullptr && o->count() > 0;
  };
  CLI::App* active = app.get_subcommands().front();
  opt.has_mod = seen(active, "--mod");
  if (active == verify) {
    opt.has_N = seen(verify, "--N");
    opt.has_k = seen(verify, "--k");
    opt.has_n_max = seen(verify, "--n-max");
  }

  try {
    if (active == pend) return cmd_pend(opt, out, err);
    if (active == expand) return cmd_expand(opt, out);
    return cmd_verify(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace pendlab::cli
