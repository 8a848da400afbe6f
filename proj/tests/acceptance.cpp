// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chebcert/certifier.hpp>
#include <chebcert/chebsearch.hpp>
#include <chebcert/cli.hpp>
#include <chebcert/powersum.hpp>
#include <chebcert/repulsion.hpp>
#include <chebcert/specfun.hpp>
#include <chebcert/weights.hpp>

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"

namespace {

namespace rp = chebcert::repulsion;
namespace ct = chebcert::certifier;
namespace cs = chebcert::chebsearch;
namespace ps = chebcert::powersum;
namespace sf = chebcert::specfun;
namespace wt = chebcert::weights;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome criterion1() {
  const auto c = rp::coeff_all_zeros(3.07, 1.0);
  const bool ok = c.K >= 1.4878 && c.K <= 1.4883 && 24.0 * c.K < 35.8;
  return {ok, fmt("K(3.07, T=1) = %.6f in [1.4878, 1.4883]; 24K = %.4f < 35.8", c.K, 24.0 * c.K)};
}

Outcome criterion2() {
  const auto rows = rp::verify_dh_table(rp::Variant::all_zeros);
  bool ok = rows.size() == 13;
  double worst = 1e300;
  for (const auto& r : rows) {
    ok = ok && r.pass && r.margin > 0.0;
    worst = std::min(worst, r.margin);
  }
  return {ok, fmt("%zu rows (11 tabled + 2 remark), smallest margin C - 24K = %.6f", rows.size(), worst)};
}

Outcome criterion3() {
  const auto c = rp::coeff_real_zeros(5.8);
  const bool ok = c.K >= 0.6877 && c.K <= 0.6882 && 24.0 * c.K < 16.6;
  return {ok, fmt("K_real(5.8) = %.6f in [0.6877, 0.6882]; 24K = %.4f < 16.6", c.K, 24.0 * c.K)};
}

Outcome criterion4() {
  bool ok = true;
  double worst_alpha = 0.0, worst_k = -1e300;
  for (std::size_t i = 0; i < rp::kTableT.size(); ++i) {
    const auto best = rp::optimize_alpha(rp::kTableT[i], rp::Variant::all_zeros);
    const double tabled = rp::coeff_all_zeros(rp::kTableAlpha[i], rp::kTableT[i]).K;
    const double dalpha = std::abs(best.alpha - rp::kTableAlpha[i]);
    worst_alpha = std::max(worst_alpha, dalpha);
    worst_k = std::max(worst_k, best.K - tabled);
    ok = ok && dalpha <= 0.25 && best.K - tabled <= 2e-3;
  }
  return {ok, fmt("max |alpha* - alpha_tab| = %.4f <= 0.25; max K(alpha*) - K(alpha_tab) = %.3g <= 2e-3", worst_alpha,
                  worst_k)};
}

Outcome criterion5() {
  const double a = rp::low_lying_bound(0.0784, 1.5, 2, 0.0);
  const double b = rp::low_lying_bound(0.0, 0.1, 2, 0.0);
  double worst_limit = 0.0, worst_jump = 0.0;
  for (double A : {0.1, 0.25, 1.5, 3.0}) {
    for (int ell : {1, 2, 5, 101}) {
      const double limit = 2.0 * rp::kPhi / A + 1.0;
      worst_limit = std::max(worst_limit, std::abs(rp::low_lying_bound(0.0, A, ell) - limit) / limit);
      worst_jump = std::max(worst_jump, std::abs(rp::low_lying_bound(1e-12, A, ell) - limit) / limit);
    }
  }
  const bool ok = std::abs(a - 1.1166) <= 1e-3 && std::abs(b - 6.5279) <= 1e-4 && worst_limit <= 1e-14 &&
                  worst_jump <= 1e-9;
  return {ok, fmt("bound(0.0784, 1.5, 2) = %.6f; bound(0, 0.1, 2) = %.6f; limit 2 phi/A + 1 rel. error %.2g; "
                  "jump at lambda = 1e-12 %.2g",
                  a, b, worst_limit, worst_jump)};
}

Outcome criterion6() {
  const auto ne = ct::certify_nonexceptional();
  const auto* main = ne.find("main:");
  const auto sm = ct::certify_small_lambda(ct::select_eta());
  const auto* bracket = sm.find("bracket 2.23");
  const bool ok = main && bracket && main->pass && main->lhs >= 0.9997 && main->lhs <= 0.9999 && ne.overall() &&
                  bracket->pass && bracket->lhs >= 0.0097 && sm.overall();
  return {ok, fmt("nonexceptional main value %.6f (margin %.3g); small-case bracket at 0.0784 = %.6f >= 0.0097",
                  main ? main->lhs : NAN, main ? main->margin : NAN, bracket ? bracket->lhs : NAN)};
}

Outcome criterion7() {
  const auto cert = ct::certify_extremely_small_lambda();
  int ladder = 0, errors = 0;
  bool ok = cert.overall();
  double worst_ladder = -1e300, worst_error = -1e300;
  for (const auto& c : cert.checks) {
    if (c.description.rfind("ladder j = ", 0) == 0) {
      ++ladder;
      ok = ok && c.pass && c.lhs < -0.2 && c.margin >= 1e-3;
      worst_ladder = std::max(worst_ladder, c.lhs);
    }
  }
  // the four error terms of the low-lying zero reduction, as L-exponents
  const double ell_rate = 1.1, A_rate = 0.9, decay = 37.5, T = 12646.0;
  const double exps[4] = {2.0 * ell_rate * std::log(2.0 / (A_rate * T)), -decay / 2.0,
                          -decay + 2.0 * ell_rate * std::log(1.0 / A_rate),
                          -1.5 * decay + 2.0 * ell_rate * std::log(2.0 / A_rate)};
  for (double e : exps) {
    ++errors;
    ok = ok && e < -18.0 && -18.0 - e >= 1e-3;
    worst_error = std::max(worst_error, e);
  }
  for (const auto& c : cert.checks) {
    if (c.description.find("= o(e^{-18 L})") != std::string::npos) ok = ok && c.pass && c.margin >= 1e-3;
  }
  ok = ok && ladder == 9 && errors == 4;
  return {ok, fmt("%d ladder values, largest %.4f <= -0.2; %d error exponents, largest %.4f <= -18", ladder,
                  worst_ladder, errors, worst_error)};
}

Outcome criterion8() {
  std::vector<std::string> failures;
  const std::uint64_t seed = 20150801;
  std::mt19937_64 rng(seed);

  // kernel: P >= -1/2, |P| <= 3r/2 for r <= 1/3, P(1, 0) = J/2
  const auto sweep = ps::sweep_kernel(20000, seed);
  if (!(sweep.min_value >= -0.5 && sweep.worst_small_r <= 0.0 && sweep.worst_peak <= 1e-9)) failures.push_back("kernel");

  // witness never violates the theorem
  std::int64_t witnesses = 0;
  for (double eps : {0.1, 1.0, 12.0}) {
    const auto suite = ps::run_suite(10000, seed, eps, 50);
    witnesses += suite.trials;
    if (suite.violations) failures.push_back("THEOREM-VIOLATION: " + suite.first_violation);
  }

  // CalcBound
  std::uniform_real_distribution<double> cx(1e-6, 50.0), cy(-1e4, 1e4);
  int calc_fail = 0;
  for (int i = 0; i < 100000; ++i) calc_fail += wt::calcbound_check(cx(rng), cy(rng)) ? 0 : 1;
  if (calc_fail) failures.push_back("calcbound");

  // weight properties (i)-(iv) and quadrature against the closed form
  int weight_cases = 0;
  double worst_quad = 0.0;
  for (const auto& spec : {wt::WeightSpec(2, 1.5, 7.41), wt::WeightSpec(2, 0.1, 2.63), wt::WeightSpec(3, 0.5, 4.0)}) {
    for (const auto& c : wt::check_properties(spec, seed, 20000)) {
      if (!c.pass) failures.push_back("weights: " + c.description);
    }
    auto f = [&](double t) {
      return oracle::bspline_truncated_power(spec.order(), (t - spec.support_start()) / spec.A) / spec.A;
    };
    std::uniform_real_distribution<double> ux(-1.0, 3.0), uy(-20.0, 20.0);
    for (int i = 0; i < 3400; ++i) {
      const std::complex<double> z(ux(rng), uy(rng));
      const auto quad = oracle::laplace_quadrature(f, spec.support_start(), spec.A, spec.order(), z);
      worst_quad = std::max(worst_quad, std::abs(wt::laplace_f(spec, z) - quad) / std::max(1.0, std::abs(quad)));
      ++weight_cases;
    }
  }
  if (worst_quad > 1e-8) failures.push_back("laplace quadrature");

  // G_j monotone in t
  std::uniform_real_distribution<double> ua(1.0, 16.0), ut(0.0, 12646.0);
  int mono_fail = 0;
  for (int i = 0; i < 10000; ++i) {
    const double a = ua(rng);
    double t1 = ut(rng), t2 = ut(rng);
    if (t1 > t2) std::swap(t1, t2);
    if (sf::g1(a, t1) > sf::g1(a, t2) || sf::g2(a, t1) > sf::g2(a, t2)) ++mono_fail;
  }
  if (mono_fail) failures.push_back("G monotonicity");

  // trigamma recurrence
  std::uniform_real_distribution<double> ux(0.01, 1000.0);
  double worst_rec = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double x = ux(rng);
    worst_rec = std::max(worst_rec, std::abs(sf::trigamma(x) - sf::trigamma(x + 1.0) - 1.0 / (x * x)) /
                                        std::max(1.0, 1.0 / (x * x)));
  }
  if (worst_rec > 1e-12) failures.push_back("trigamma recurrence");

  std::string detail = fmt(
      "kernel %lld, witnesses %lld, calcbound 100000, weight quadrature %d (max rel err %.2g), monotonicity 10000, "
      "recurrence 10000 (max err %.2g)",
      static_cast<long long>(sweep.samples), static_cast<long long>(witnesses), weight_cases, worst_quad, worst_rec);
  for (const auto& f : failures) detail += "; FAILED " + f;
  return {failures.empty(), detail};
}

int splitting_class(std::int64_t disc, std::int64_t p) {
  if (p == 2) return (((disc % 8) + 8) % 8) == 1 ? 1 : -1;
  return oracle::legendre(disc, p);
}

Outcome criterion9() {
  const auto inert = cs::least_prime_quadratic(5, -1);
  const auto split = cs::least_prime_quadratic(5, 1);
  const auto ap = cs::least_prime_ap(5, 1);
  bool ok = inert.least_prime == 2 && split.least_prime == 11 && ap.least_prime == 11;

  const auto start = std::chrono::steady_clock::now();
  const auto survey = cs::survey(100000);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok = ok && seconds < 60.0 && survey.scan_failures == 0;

  std::size_t bad = 0;
  for (const auto& r : survey.records) {
    bool good = !r.scan_limit_exceeded && r.bound_pass && oracle::is_prime_trial(r.least_prime) &&
                !r.field.ramified(r.least_prime);
    if (r.field.kind == cs::FieldKind::quadratic) {
      const int cls = std::stoi(r.class_label);
      good = good && splitting_class(r.field.discriminant, static_cast<std::int64_t>(r.least_prime)) == cls;
      for (std::uint64_t p = 2; good && p < r.least_prime; ++p) {
        if (oracle::is_prime_trial(p) && !r.field.ramified(p) &&
            splitting_class(r.field.discriminant, static_cast<std::int64_t>(p)) == cls) {
          good = false;
        }
      }
    } else {
      const auto a = static_cast<std::uint64_t>(std::stoll(r.class_label));
      const auto q = static_cast<std::uint64_t>(r.field.param);
      good = good && r.least_prime % q == a;
      for (std::uint64_t p = 2; good && p < r.least_prime; ++p) {
        if (oracle::is_prime_trial(p) && p % q == a) good = false;
      }
    }
    if (!good) ++bad;
  }
  ok = ok && bad == 0;
  return {ok, fmt("d=5 -> {%llu, %llu}; q=5, a=1 -> %llu; survey d_L <= 1e5: %zu fields, %zu records in %.2f s, "
                  "%zu failing re-scan; max exponent %.4f (observed)",
                  static_cast<unsigned long long>(inert.least_prime), static_cast<unsigned long long>(split.least_prime),
                  static_cast<unsigned long long>(ap.least_prime), survey.field_count, survey.records.size(), seconds,
                  bad, survey.max_exponent)};
}

Outcome criterion10() {
  const std::vector<std::vector<std::string>> commands = {
      {"dh-table", "--json"},
      {"optimize", "--t", "134", "--json"},
      {"bound", "--lambda", "0.0784", "--a", "1.5", "--ell", "2", "--json"},
      {"weights", "--ell", "2", "--a", "0.1", "--b", "2.63", "--check", "--json"},
      {"powersum", "--trials", "10000", "--json"},
      {"certify", "--case", "all", "--json"},
      {"least-prime", "--survey", "2000", "--json"},
  };
  int identical = 0;
  for (const auto& cmd : commands) {
    std::string dumps[2];
    for (auto& d : dumps) {
      std::ostringstream out, err;
      if (chebcert::cli::run(cmd, out, err) != 0) break;
      auto j = nlohmann::ordered_json::parse(out.str());
      j.erase("wallclock_ms");
      d = j.dump();
    }
    if (!dumps[0].empty() && dumps[0] == dumps[1]) ++identical;
  }
  return {identical == static_cast<int>(commands.size()),
          fmt("%d of %zu subcommands byte-identical across runs (timing excluded)", identical, commands.size())};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"repulsion coefficient at alpha = 3.07, T = 1", criterion1},
      {"repulsion table, 13 rows", criterion2},
      {"real-zeros coefficient at alpha = 5.8", criterion3},
      {"alpha optimizer vs tabled alpha", criterion4},
      {"low-lying zero bound", criterion5},
      {"non-exceptional and small cases", criterion6},
      {"extremely small case: ladder and error terms", criterion7},
      {"randomized property suites", criterion8},
      {"least-prime search", criterion9},
      {"deterministic reports", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] criterion %zu: %s -- %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
