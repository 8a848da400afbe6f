#ifndef CHEBCERT_CLI_HPP
#define CHEBCERT_CLI_HPP

// Command-line front end. Exit codes: 0 all checks pass, 1 a check failed
// (falsification), 2 usage error.

#include <chebcert/certifier.hpp>
#include <chebcert/chebsearch.hpp>
#include <chebcert/powersum.hpp>
#include <chebcert/report.hpp>
#include <chebcert/repulsion.hpp>
#include <chebcert/weights.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace chebcert::cli {

inline constexpr std::uint64_t kDefaultSeed = 20150801;

namespace detail {

using report::json;
using report::num;

struct Outcome {
  report::Report report;
  std::ostringstream text;
  std::vector<Check> failed;
  std::optional<std::vector<chebsearch::SearchRecord>> records;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void add_checks(Outcome& o, const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    o.report.results.push_back(report::to_json(c));
    if (!c.pass) o.failed.push_back(c);
  }
  report::write_checks(o.text, checks);
}

inline bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

inline repulsion::Variant variant_or_throw(const std::string& s) {
  auto v = repulsion::parse_variant(s);
  if (!v) throw UsageError("unknown variant '" + s + "'");
  return *v;
}

inline void dh_table(Outcome& o, const std::string& variant_name) {
  const auto v = variant_or_throw(variant_name);
  o.report.params["variant"] = std::string(repulsion::to_string(v));
  const auto rows = repulsion::verify_dh_table(v);
  bool ok = !rows.empty();
  o.text << "variant " << repulsion::to_string(v) << "\n";
  o.text << "  T            alpha        24K          C       margin       \n";
  for (const auto& r : rows) {
    o.report.results.push_back(report::to_json(r));
    char line[160];
    std::snprintf(line, sizeof line, "  %-12.6g %-12.6g %-12.8g %-7.4g %-12.6g %s%s\n", r.T, r.alpha, 24.0 * r.K, r.C,
                  r.margin, r.pass ? "PASS" : "FAIL!", r.optimized_alpha ? " (alpha optimized)" : "");
    o.text << line;
    if (!r.pass) {
      o.failed.push_back(check_less("24 K < C at T = " + report::text_num(r.T), 24.0 * r.K, r.C));
      ok = false;
    }
  }
  o.report.overall_pass = ok;
}

inline void optimize(Outcome& o, double T, const std::string& variant_name, double grid) {
  const auto v = variant_or_throw(variant_name);
  repulsion::SearchOptions opts;
  opts.grid_step = grid;
  o.report.params["T"] = num(T);
  o.report.params["variant"] = std::string(repulsion::to_string(v));
  o.report.params["grid"] = num(grid);
  const auto b = repulsion::optimize_alpha(T, v, opts);
  o.report.results.push_back(report::to_json(b));
  o.text << "T = " << report::text_num(T) << "  alpha* = " << report::text_num(b.alpha)
         << "  K = " << report::text_num(b.K) << "  24K = " << report::text_num(24.0 * b.K)
         << "  C = " << report::text_num(b.C) << "\n";
  const Check c = check_less("24 K < C", 24.0 * b.K, b.C);
  if (!c.pass) o.failed.push_back(c);
  o.report.overall_pass = c.pass;
}

inline void bound(Outcome& o, double lambda, double A, int ell, double eta) {
  o.report.params["lambda"] = num(lambda);
  o.report.params["A"] = num(A);
  o.report.params["ell"] = ell;
  o.report.params["eta"] = num(eta);
  const double b = repulsion::low_lying_bound(lambda, A, ell, eta);
  const double certified = repulsion::round_up(b, 4);
  o.report.results.push_back(json{{"bound", num(b)}, {"certified_4dp", num(certified)}});
  o.text << "low-lying zero bound = " << report::text_num(b) << "  (rounded up: " << report::text_num(certified)
         << ")\n";
  o.report.overall_pass = std::isfinite(b);
}

inline void weights_cmd(Outcome& o, int ell, double A, double B, bool check, std::uint64_t seed, int samples) {
  const weights::WeightSpec spec(ell, A, B);
  o.report.params["ell"] = ell;
  o.report.params["A"] = num(A);
  o.report.params["B"] = num(B);
  o.report.params["check"] = check;
  o.report.params["seed"] = seed;
  o.report.params["samples"] = samples;
  o.text << "support [" << report::text_num(spec.support_start()) << ", " << report::text_num(B) << "]\n";
  std::vector<Check> checks;
  if (check) {
    checks = weights::check_properties(spec, seed, samples);
  } else {
    checks.push_back(check_close("F(0) = 1", weights::laplace_f(spec, {0.0, 0.0}).real(), 1.0, 1e-15));
  }
  add_checks(o, checks);
  o.report.overall_pass = all_pass(checks);
}

inline void powersum_cmd(Outcome& o, std::int64_t trials, std::uint64_t seed, double epsilon, int max_n) {
  o.report.params["trials"] = trials;
  o.report.params["seed"] = seed;
  o.report.params["epsilon"] = num(epsilon);
  o.report.params["max_n"] = max_n;
  const auto suite = powersum::run_suite(trials, seed, epsilon, max_n);
  const auto kernel = powersum::sweep_kernel(trials, seed ^ 0x9e3779b97f4a7c15ULL);
  json summary{{"trials", suite.trials},
               {"max_m0", suite.max_m0},
               {"max_m0_fraction", num(suite.max_m0_fraction)},
               {"min_normalized_margin", num(suite.min_normalized_margin)}};
  if (suite.violations) summary["first_violation"] = suite.first_violation;
  o.report.results.push_back(summary);
  o.text << "largest witness exponent " << suite.max_m0 << " (fraction of admissible range "
         << report::text_num(suite.max_m0_fraction) << ")\n";
  if (suite.violations) o.text << "  " << suite.first_violation << "\n";
  const std::vector<Check> checks = {
      check_less_equal("THEOREM-VIOLATION count = 0", static_cast<double>(suite.violations), 0.0),
      check_greater_equal("min P(r, theta) >= -1/2", kernel.min_value, -0.5),
      check_less_equal("max |P(r, theta)| - 1.5 r over r <= 1/3", kernel.worst_small_r, 0.0),
      check_less_equal("max |P(1, 0) - J/2|", kernel.worst_peak, 1e-9),
  };
  add_checks(o, checks);
  o.report.overall_pass = all_pass(checks);
}

inline void certify(Outcome& o, const std::string& which, std::optional<double> eta) {
  using namespace certifier;
  o.report.params["case"] = which;
  std::vector<CaseCertificate> certs;
  auto small = [&] {
    const double e = eta ? *eta : select_eta();
    o.report.params["eta"] = num(e);
    return certify_small_lambda(e);
  };
  if (which == "nonexceptional") certs.push_back(certify_nonexceptional());
  else if (which == "small") certs.push_back(small());
  else if (which == "very-small") certs.push_back(certify_very_small_lambda());
  else if (which == "extremely-small") certs.push_back(certify_extremely_small_lambda());
  else if (which == "tower") certs.push_back(certify_tower());
  else if (which == "small-degree") certs.push_back(certify_small_degree());
  else if (which == "non-siegel") certs.push_back(certify_non_siegel());
  else if (which == "all") {
    if (eta) {
      certs.push_back(certify_nonexceptional());
      certs.push_back(small());
      certs.push_back(certify_very_small_lambda());
      auto rest = certify_all();
      certs.insert(certs.end(), rest.begin() + 3, rest.end());
    } else {
      certs = certify_all();
    }
  } else {
    throw UsageError("unknown case '" + which + "'");
  }
  bool ok = true;
  for (const auto& c : certs) {
    o.report.results.push_back(report::to_json(c));
    o.text << c.case_name << ": " << (c.overall() ? "PASS" : "FAIL!") << "\n";
    report::write_checks(o.text, c.checks, "    ");
    for (const auto& ch : c.checks) {
      if (!ch.pass) o.failed.push_back(ch);
    }
    ok = ok && c.overall();
  }
  o.report.overall_pass = ok;
}

inline void least_prime(Outcome& o, std::optional<std::int64_t> quadratic, const std::vector<std::int64_t>& ap,
                        std::optional<std::uint64_t> survey_max, std::uint64_t cap) {
  const int modes = (quadratic ? 1 : 0) + (ap.empty() ? 0 : 1) + (survey_max ? 1 : 0);
  if (modes != 1) throw UsageError("least-prime: give exactly one of --quadratic, --ap, --survey");
  o.report.params["cap"] = cap;
  std::vector<chebsearch::SearchRecord> records;
  json summary;
  if (quadratic) {
    o.report.params["quadratic"] = *quadratic;
    records = chebsearch::field_records(chebsearch::quadratic_field(*quadratic), cap);
  } else if (!ap.empty()) {
    o.report.params["q"] = ap[0];
    o.report.params["a"] = ap[1];
    records.push_back(chebsearch::least_prime_ap(ap[0], ap[1], cap));
  } else {
    o.report.params["survey"] = *survey_max;
    const auto s = chebsearch::survey(*survey_max, cap);
    records = s.records;
    summary = json{{"kind", "summary"},
                   {"fields", s.field_count},
                   {"records", s.records.size()},
                   {"max_exponent_realized", num(s.max_exponent)},
                   {"scan_limit_exceeded", s.scan_failures}};
  }
  bool ok = !records.empty();
  for (const auto& r : records) {
    if (r.scan_limit_exceeded) {
      o.failed.push_back(check_less_equal("scan limit for " + std::string(chebsearch::to_string(r.field.kind)) + " " +
                                              std::to_string(r.field.param) + " class " + r.class_label,
                                          static_cast<double>(cap) + 1.0, static_cast<double>(cap)));
    }
    ok = ok && r.bound_pass && !r.scan_limit_exceeded;
    o.report.results.push_back(report::to_json(r));
  }
  if (!summary.is_null()) o.report.results.push_back(summary);

  const std::size_t shown = survey_max ? std::min<std::size_t>(records.size(), 10) : records.size();
  if (survey_max) o.text << "top " << shown << " of " << records.size() << " records by exponent\n";
  std::ostringstream table;
  report::write_csv(table, std::vector<chebsearch::SearchRecord>(records.begin(), records.begin() + shown));
  o.text << table.str();
  if (!summary.is_null()) {
    o.text << "fields " << summary["fields"].get<std::size_t>() << ", max exponent realized "
           << report::text_num(summary["max_exponent_realized"].get<double>()) << "\n";
  }
  o.records = std::move(records);
  o.report.overall_pass = ok;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "' for writing");
  f << content;
}

}  // namespace detail

/// Runs one subcommand. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit-constant certification for least-prime-ideal bounds", "chebcert"};
  app.require_subcommand(1);

  std::optional<std::string> json_path;
  std::string json_value;
  auto add_json = [&](CLI::App* sub) {
    return sub->add_option("--json", json_value, "Write the JSON report to PATH (stdout if omitted)")
        ->expected(0, 1);
  };
  std::uint64_t seed = kDefaultSeed;

  auto* dh = app.add_subcommand("dh-table", "Verify the repulsion constant table");
  std::string variant = "all-zeros";
  dh->add_option("--variant", variant, "all-zeros | real-zeros | no-arch | no-arch-real-zeros");
  auto* dh_json = add_json(dh);

  auto* opt = app.add_subcommand("optimize", "Minimize the repulsion coefficient over alpha");
  double T = 1.0;
  double grid = 0.01;
  opt->add_option("--t", T, "Height T")->required();
  opt->add_option("--variant", variant, "Coefficient variant");
  opt->add_option("--grid", grid, "Grid step for alpha")->check(CLI::PositiveNumber);
  auto* opt_json = add_json(opt);

  auto* bnd = app.add_subcommand("bound", "Low-lying zero bound");
  double lambda = 0.0, A = 1.0, eta_value = 0.0, B = 0.0;
  int ell = 1;
  bnd->add_option("--lambda", lambda, "lambda")->required();
  bnd->add_option("--a", A, "A")->required();
  bnd->add_option("--ell", ell, "ell")->required();
  bnd->add_option("--eta", eta_value, "eta");
  auto* bnd_json = add_json(bnd);

  auto* wts = app.add_subcommand("weights", "Weight function properties");
  bool check_flag = false;
  int samples = 100000;
  wts->add_option("--ell", ell, "ell")->required();
  wts->add_option("--a", A, "A")->required();
  wts->add_option("--b", B, "B")->required();
  wts->add_flag("--check", check_flag, "Run the randomized property sweep");
  wts->add_option("--seed", seed, "Random seed");
  wts->add_option("--samples", samples, "Random samples")->check(CLI::PositiveNumber);
  auto* wts_json = add_json(wts);

  auto* ps = app.add_subcommand("powersum", "Randomized power sum witness search");
  std::int64_t trials = 10000;
  double epsilon = 1.0;
  int max_n = 50;
  ps->add_option("--trials", trials, "Number of random instances")->check(CLI::PositiveNumber);
  ps->add_option("--seed", seed, "Random seed");
  ps->add_option("--epsilon", epsilon, "epsilon")->check(CLI::PositiveNumber);
  ps->add_option("--max-n", max_n, "Largest sequence length")->check(CLI::PositiveNumber);
  auto* ps_json = add_json(ps);

  auto* cert = app.add_subcommand("certify", "Certify the case analysis");
  std::string which;
  std::optional<double> eta;
  cert->add_option("--case", which,
                   "nonexceptional | small | very-small | extremely-small | tower | small-degree | non-siegel | all")
      ->required();
  cert->add_option("--eta", eta, "eta for the small case (default: selected automatically)");
  auto* cert_json = add_json(cert);

  auto* lp = app.add_subcommand("least-prime", "Least primes in Artin classes of abelian fields");
  std::optional<std::int64_t> quadratic;
  std::vector<std::int64_t> ap;
  std::optional<std::uint64_t> survey_max;
  std::string csv_path;
  std::uint64_t cap = chebsearch::kDefaultScanCap;
  lp->add_option("--quadratic", quadratic, "Squarefree d");
  lp->add_option("--ap", ap, "Q A")->expected(2);
  lp->add_option("--survey", survey_max, "Survey all fields with d_L <= MAXDISC");
  lp->add_option("--csv", csv_path, "Write records as CSV to PATH");
  lp->add_option("--cap", cap, "Scan cap")->check(CLI::PositiveNumber);
  auto* lp_json = add_json(lp);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  CLI::Option* json_opt = nullptr;
  const std::pair<CLI::App*, CLI::Option*> json_opts[] = {{dh, dh_json},   {opt, opt_json},   {bnd, bnd_json},
                                                          {wts, wts_json}, {ps, ps_json},     {cert, cert_json},
                                                          {lp, lp_json}};
  for (const auto& [owner, option] : json_opts) {
    if (owner == sub) json_opt = option;
  }
  if (json_opt->count() > 0) json_path = json_value;

  detail::Outcome o;
  o.report.command = sub->get_name();
  const auto start = std::chrono::steady_clock::now();
  try {
    const std::string name = sub->get_name();
    if (name == "dh-table") detail::dh_table(o, variant);
    else if (name == "optimize") detail::optimize(o, T, variant, grid);
    else if (name == "bound") detail::bound(o, lambda, A, ell, eta_value);
    else if (name == "weights") detail::weights_cmd(o, ell, A, B, check_flag, seed, samples);
    else if (name == "powersum") detail::powersum_cmd(o, trials, seed, epsilon, max_n);
    else if (name == "certify") detail::certify(o, which, eta);
    else detail::least_prime(o, quadratic, ap, survey_max, cap);
  } catch (const powersum::TheoremViolation& e) {
    err << "FALSIFICATION: " << e.what() << "\n";
    return 1;
  } catch (const chebsearch::ScanLimitExceeded& e) {
    err << "SCAN-LIMIT-EXCEEDED: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    // invalid parameters (domain errors from the modules) are usage errors
    err << "usage error: " << e.what() << "\n\n" << sub->help();
    return 2;
  }
  o.report.wallclock_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  try {
    if (!csv_path.empty() && o.records) {
      std::ostringstream csv;
      report::write_csv(csv, *o.records);
      detail::write_file(csv_path, csv.str());
    }
    const std::string dumped = o.report.to_json().dump(2) + "\n";
    if (json_path && (json_path->empty() || *json_path == "-")) {
      out << dumped;
    } else {
      out << o.text.str();
      out << "overall: " << (o.report.overall_pass ? "PASS" : "FAIL") << "\n";
      if (json_path) detail::write_file(*json_path, dumped);
    }
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  if (!o.report.overall_pass) {
    err << "FALSIFICATION: " << o.failed.size() << " failing check(s)\n";
    report::write_checks(err, o.failed, "  >>> ");
    return 1;
  }
  return 0;
}

}  // namespace chebcert::cli

#endif  // CHEBCERT_CLI_HPP
