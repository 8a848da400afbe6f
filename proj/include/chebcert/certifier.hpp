#ifndef CHEBCERT_CERTIFIER_HPP
#define CHEBCERT_CERTIFIER_HPP

// Case-by-case certification of the positivity argument for the weighted
// prime sum S.
//
// Every "for d_L sufficiently large" step is reduced either to an explicit
// threshold on L = log d_L (when the inequality is monotone in L) or to an
// exponent-dominance statement between terms L^k e^{cL}. Unspecified absolute
// constants never enter a numeric check: each check depends only on tabled
// reals and on L-coefficients.

#include <chebcert/check.hpp>
#include <chebcert/repulsion.hpp>
#include <chebcert/weights.hpp>

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace chebcert::certifier {

/// A term L^k e^{cL}.
struct ExponentTerm {
  double k = 0.0;
  double c = 0.0;
  std::string label;
};

/// True iff t1 <= t2 eventually in L: c1 < c2, or c1 = c2 and k1 <= k2.
inline bool exponent_dominates(const ExponentTerm& t1, const ExponentTerm& t2) {
  return t1.c < t2.c || (t1.c == t2.c && t1.k <= t2.k);
}

/// Strict version: t1 = o(t2).
inline bool exponent_strictly_dominates(const ExponentTerm& t1, const ExponentTerm& t2) {
  return t1.c < t2.c || (t1.c == t2.c && t1.k < t2.k);
}

/// o(.) check between two terms. The margin is the gap in the exponent
/// coefficient, or in the power of L when the coefficients agree.
inline Check check_little_o(const ExponentTerm& small, const ExponentTerm& big) {
  const bool same_rate = small.c == big.c;
  const double margin = same_rate ? big.k - small.k : big.c - small.c;
  return Check{small.label + " = o(" + big.label + ")", same_rate ? small.k : small.c,
               same_rate ? big.k : big.c, margin, exponent_strictly_dominates(small, big)};
}

struct LadderRung {
  double T = 0.0;
  double C = 0.0;
};

struct CaseCertificate {
  std::string case_name;
  std::vector<std::pair<std::string, double>> params;
  std::vector<LadderRung> ladder;
  std::vector<Check> checks;

  [[nodiscard]] bool overall() const {
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }

  [[nodiscard]] const Check* find(std::string_view prefix) const {
    for (const auto& c : checks) {
      if (c.description.rfind(prefix, 0) == 0) return &c;
    }
    return nullptr;
  }

  void append(const CaseCertificate& other, const std::string& prefix) {
    for (const auto& [k, v] : other.params) params.emplace_back(prefix + k, v);
    for (const auto& c : other.checks) {
      Check copy = c;
      copy.description = prefix + copy.description;
      checks.push_back(std::move(copy));
    }
    ladder.insert(ladder.end(), other.ladder.begin(), other.ladder.end());
  }
};

// Zero-free region width near s = 1 (input constant).
inline constexpr double kZeroFreeWidth = 0.0784;

namespace detail {

inline std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

// Repulsion row for a ladder rung: tabled alpha when the height is tabled,
// otherwise the optimizer's alpha.
inline repulsion::DhRow rung_row(repulsion::Variant v, double T, double C) {
  using namespace repulsion;
  if (v == Variant::all_zeros) {
    for (std::size_t i = 0; i < kTableT.size(); ++i) {
      if (kTableT[i] == T) return make_row(v, T, kTableAlpha[i], C, false);
    }
  }
  return make_row(v, T, optimize_alpha(std::max(T, 1.0), v).alpha, C, true);
}

inline Check largest_exponent(std::initializer_list<double> Bs, double claimed) {
  return check_less_equal("largest B over all cases <= " + fmt(claimed), std::max(Bs), claimed);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Non-exceptional case: lambda_1 >= 0.0784.

struct NonexceptionalParams {
  int ell = 2;
  double A = 1.5;
  double B = 7.41;
  double expected_decay = 1.41;
};

inline CaseCertificate certify_nonexceptional(const NonexceptionalParams& p = {}) {
  CaseCertificate cert;
  cert.case_name = "nonexceptional";
  const double lambda = kZeroFreeWidth;
  const double decay = p.B - 2.0 * p.ell * p.A;
  cert.params = {{"ell", p.ell}, {"A", p.A}, {"B", p.B}, {"T_star", 1.0}, {"lambda_floor", lambda}};

  cert.checks.push_back(check_close("B - 2 ell A = " + detail::fmt(p.expected_decay), decay, p.expected_decay, 1e-12));
  cert.checks.push_back(check_greater_equal("B >= 2", p.B, 2.0));
  cert.checks.push_back(check_less_equal("B <= 100", p.B, 100.0));

  const double bound = repulsion::low_lying_bound(lambda, p.A, p.ell, 0.0);
  const double certified = repulsion::round_up(bound, 4);
  cert.params.emplace_back("low_lying_bound", bound);
  cert.params.emplace_back("low_lying_bound_certified", certified);
  cert.checks.push_back(check_less_equal("low-lying zero bound at lambda = 0.0784 <= its 4-decimal round-up",
                                         bound, certified));

  cert.checks.push_back(check_less("main: e^{-(B - 2 ell A) 0.0784} x certified bound < 1",
                                   std::exp(-decay * lambda) * certified, 1.0));
  cert.checks.push_back(check_less("e^{-(B - 2 ell A) 0.0784} x unrounded bound < 1",
                                   std::exp(-decay * lambda) * bound, 1.0));

  // lambda_1 >= 0.0784 is covered because the slack only decreases in lambda.
  double worst_step = -std::numeric_limits<double>::infinity();
  const int grid = 10000;
  double prev = std::exp(-decay * lambda) * certified;
  for (int i = 1; i <= grid; ++i) {
    const double l = lambda + (1.0 - lambda) * i / grid;
    const double v = std::exp(-decay * l) * certified;
    worst_step = std::max(worst_step, v - prev);
    prev = v;
  }
  cert.checks.push_back(check_less("slack e^{-(B - 2 ell A) lambda} x bound decreasing on [0.0784, 1]", worst_step, 0.0));
  return cert;
}

// ---------------------------------------------------------------------------
// Exceptional, lambda_1 small: eta <= lambda_1 < 0.0784.

struct SmallLambdaParams {
  int ell = 2;
  double A = 0.1;
  double B = 2.63;
  double expected_decay = 2.23;
  double repulsion_rate = 0.6546;   // lambda' >= 0.6546 log(1/lambda_1), input constant
  double stated_exponent = 1.4597;  // lower bound for decay * repulsion_rate
  double taylor_coefficient = 2.4865;
  double bracket_floor = 0.0097;
};

namespace detail {

// 2.23 - c lambda^{e - 1} - taylor lambda
inline double small_bracket(const SmallLambdaParams& p, double zero_bound, double lambda) {
  return p.expected_decay - zero_bound * std::pow(lambda, p.stated_exponent - 1.0) - p.taylor_coefficient * lambda;
}

// min over lambda in [eta, 0.0784] of bracket(lambda) * lambda - 1e-6 eta.
// The function is concave, so the minimum is at an endpoint; a grid guards
// that reasoning numerically.
inline double small_positivity(const SmallLambdaParams& p, double zero_bound, double eta) {
  double best = std::numeric_limits<double>::infinity();
  const int grid = 2000;
  for (int i = 0; i <= grid; ++i) {
    const double l = eta + (kZeroFreeWidth - eta) * i / grid;
    best = std::min(best, small_bracket(p, zero_bound, l) * l);
  }
  return best - 1e-6 * eta;
}

}  // namespace detail

/// Smallest eta in (0, 0.0784) for which the positivity margin of the small
/// case is at least `margin`. Smaller eta leaves less to the very-small case.
inline double select_eta(double margin = 1e-4, const SmallLambdaParams& p = {}) {
  const double zero_bound = repulsion::round_up(repulsion::low_lying_bound(0.0, p.A, p.ell, 0.0), 4);
  double lo = 0.0;
  double hi = kZeroFreeWidth;
  if (detail::small_positivity(p, zero_bound, hi * (1 - 1e-12)) < margin) return hi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (detail::small_positivity(p, zero_bound, mid) >= margin) hi = mid;
    else lo = mid;
  }
  return hi;
}

inline CaseCertificate certify_small_lambda(double eta, const SmallLambdaParams& p = {}) {
  if (!(eta > 0.0 && eta < kZeroFreeWidth)) {
    throw std::domain_error("certify_small_lambda: requires 0 < eta < 0.0784");
  }
  CaseCertificate cert;
  cert.case_name = "small";
  const double decay = p.B - 2.0 * p.ell * p.A;
  cert.params = {{"ell", p.ell}, {"A", p.A}, {"B", p.B}, {"eta", eta}, {"epsilon", 1e-6 * eta},
                 {"lambda_upper", kZeroFreeWidth}};

  cert.checks.push_back(check_close("B - 2 ell A = " + detail::fmt(p.expected_decay), decay, p.expected_decay, 1e-12));

  const double zero_bound = repulsion::low_lying_bound(0.0, p.A, p.ell, 0.0);
  const double certified = repulsion::round_up(zero_bound, 4);
  cert.params.emplace_back("low_lying_bound_at_0", zero_bound);
  cert.params.emplace_back("low_lying_bound_at_0_certified", certified);
  cert.checks.push_back(check_less_equal("low-lying zero bound at lambda = 0 <= its 4-decimal round-up", zero_bound, certified));

  // |F((1 - beta_1) L)| = e^{-decay lambda} ((1 - e^{-A lambda}) / (A lambda))^{2 ell} <= e^{-decay lambda}
  double worst_box = 0.0;
  for (int i = 1; i <= 1000; ++i) {
    const double l = kZeroFreeWidth * i / 1000.0;
    worst_box = std::max(worst_box, std::pow(weights::box_factor(p.A * l), 2.0 * p.ell));
  }
  cert.checks.push_back(check_less_equal("((1 - e^{-A lambda}) / (A lambda))^{2 ell} <= 1 on (0, 0.0784]", worst_box, 1.0));

  cert.checks.push_back(check_greater_equal("(B - 2 ell A) x 0.6546 >= 1.4597", decay * p.repulsion_rate, p.stated_exponent));
  cert.checks.push_back(check_less_equal("(B - 2 ell A)^2 / 2 <= 2.4865", decay * decay / 2.0, p.taylor_coefficient));

  double worst_taylor = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= 1000; ++i) {
    const double t = decay * kZeroFreeWidth * i / 1000.0;
    worst_taylor = std::min(worst_taylor, -std::expm1(-t) - (t - t * t / 2.0));
  }
  cert.checks.push_back(check_greater_equal("1 - e^{-t} >= t - t^2/2 on (0, 0.0784 (B - 2 ell A)]", worst_taylor, 0.0));

  const double bracket = detail::small_bracket(p, certified, kZeroFreeWidth);
  cert.params.emplace_back("bracket_at_0.0784", bracket);
  cert.checks.push_back(check_greater_equal("bracket 2.23 - 6.5279 lambda^0.4597 - 2.4865 lambda at 0.0784 >= 0.0097",
                                            bracket, p.bracket_floor));

  // derivative: -c (e - 1) lambda^{e - 2} - taylor, largest at the right end
  double worst_slope = -std::numeric_limits<double>::infinity();
  for (int i = 1; i <= 1000; ++i) {
    const double l = kZeroFreeWidth * i / 1000.0;
    const double slope = -certified * (p.stated_exponent - 1.0) * std::pow(l, p.stated_exponent - 2.0) - p.taylor_coefficient;
    worst_slope = std::max(worst_slope, slope);
  }
  cert.checks.push_back(check_less("bracket decreasing on (0, 0.0784]: max derivative < 0", worst_slope, 0.0));

  cert.checks.push_back(check_greater("lower bound bracket(lambda) lambda - 1e-6 eta > 0 on [eta, 0.0784]",
                                      detail::small_positivity(p, certified, eta), 0.0));
  return cert;
}

// ---------------------------------------------------------------------------
// Exceptional, lambda_1 very small: L^{-power} <= lambda_1 < eta.

struct VerySmallParams {
  int ell = 101;
  double A = 1.0 / 404.0;
  double B = 36.5;
  double expected_decay = 36.0;
  double repulsion_T = 1.0;
  double repulsion_C = 35.8;
  repulsion::Variant repulsion_variant = repulsion::Variant::all_zeros;
  double lambda_power = 200.0;  // lambda_1 >= L^{-lambda_power}
};

/// Least integer L >= 2 with (power / C) log L < L / 4, i.e. R_1 < L/4 when
/// the symbolic constant satisfies log c_1 <= 0.
inline double radius_threshold(double power, double C) {
  for (double L = 2.0;; L += 1.0) {
    bool ok = true;
    // the inequality is monotone once it holds, confirmed on a stretch past L
    for (double M = L; M <= 1000.0 * L; M *= 1.01) {
      if (!(power / C * std::log(M) < M / 4.0)) {
        ok = false;
        break;
      }
    }
    if (ok) return L;
  }
}

inline CaseCertificate certify_very_small_lambda(const VerySmallParams& p = {}) {
  CaseCertificate cert;
  cert.case_name = "very-small";
  const double decay = p.B - 2.0 * p.ell * p.A;
  cert.params = {{"ell", p.ell}, {"A", p.A}, {"B", p.B}, {"T_star", p.repulsion_T},
                 {"repulsion_C", p.repulsion_C}, {"lambda_power", p.lambda_power}};
  cert.ladder = {{p.repulsion_T, p.repulsion_C}};

  cert.checks.push_back(check_close("B - 2 ell A = " + detail::fmt(p.expected_decay), decay, p.expected_decay, 1e-9));

  const auto row = detail::rung_row(p.repulsion_variant, p.repulsion_T, p.repulsion_C);
  cert.params.emplace_back("repulsion_alpha", row.alpha);
  cert.checks.push_back(check_less("repulsion row T = " + detail::fmt(p.repulsion_T) + ": 24 K < " +
                                       detail::fmt(p.repulsion_C),
                                   24.0 * row.K, p.repulsion_C));
  cert.checks.push_back(check_greater("(B - 2 ell A) / C > 1, so lambda_1^{(B - 2 ell A)/C} = o(lambda_1)",
                                      decay / p.repulsion_C, 1.0));

  // R_1 = (log c_1 + power log L) / C has L-coefficient 0 < 1/4.
  cert.checks.push_back(check_less("R_1 < L/4: L-coefficient of R_1 < 1/4", 0.0, 0.25));
  const double L0 = radius_threshold(p.lambda_power, p.repulsion_C);
  cert.params.emplace_back("radius_threshold_L", L0);
  cert.checks.push_back(check_less("(power / C) log L - L/4 < 0 at the reported threshold",
                                   p.lambda_power / p.repulsion_C * std::log(L0) - L0 / 4.0, 0.0));

  const ExponentTerm floor{-p.lambda_power, 0.0, "L^" + detail::fmt(-p.lambda_power)};
  const double far = 1.0 - 2.0 * p.ell;  // L (2 / (A T L))^{2 ell}
  cert.checks.push_back(check_little_o({far, 0.0, "L^" + detail::fmt(far)}, floor));
  cert.checks.push_back(check_little_o({2.0, -decay / 2.0, "L^2 e^{-(B - 2 ell A) L / 2} / A"}, floor));
  cert.checks.push_back(check_little_o({far, -decay, "L (1 / (A L))^{2 ell} e^{-(B - 2 ell A) L}"}, floor));
  cert.checks.push_back(check_little_o({far, -1.5 * decay, "L (2 / (A L))^{2 ell} e^{-3 (B - 2 ell A) L / 2}"}, floor));
  return cert;
}

// ---------------------------------------------------------------------------
// Exceptional, lambda_1 extremely small: lambda_1 < L^{-power}.
// Parameters scale with L: ell = ceil(ell_rate L), A = A_rate / L.

struct ExtremeParams {
  double ell_rate = 1.1;
  double A_rate = 0.9;
  double B = 39.5;
  double decay = 37.5;              // certified lower bound for B - 2 ell A
  double T_star = 12646.0;
  double lambda_floor_rate = 16.6;  // lambda_1 >> L e^{-rate L}
  double lambda_power = 200.0;      // lambda_1 < L^{-power}
  std::vector<LadderRung> ladder = {{3.5, 37.0},  {8.7, 39.3},   {22, 42.5},   {54, 46.1},   {134, 50.0},
                                    {332, 53.8},  {825, 57.6},   {2048, 61.4}, {5089, 65.2}, {12646, 69.0}};
  repulsion::Variant repulsion_variant = repulsion::Variant::all_zeros;
  double error_target = -18.0;      // all error terms are O(e^{error_target L})
  double ladder_target = -0.2;      // each ladder term << lambda_1 L^2 e^{ladder_target L}
  double j1_ratio_floor = 1.01;     // decay / C_1 exceeds this
  double j1_target = 1.005;         // L lambda_1^{decay/C_1} << lambda_1^{j1_target}
};

/// Least integer L with B - 2 (ell_rate L + 1) A_rate / L > decay, or 0 if
/// the asymptotic value does not exceed decay.
inline double decay_threshold(const ExtremeParams& p) {
  const double asymptotic = p.B - 2.0 * p.ell_rate * p.A_rate;
  if (!(asymptotic > p.decay)) return 0.0;
  // B - 2 ell_rate A_rate - 2 A_rate / L > decay  <=>  L > 2 A_rate / (asymptotic - decay)
  double L = std::floor(2.0 * p.A_rate / (asymptotic - p.decay)) + 1.0;
  while (L > 1.0 && p.B - 2.0 * (p.ell_rate * (L - 1.0) + 1.0) * p.A_rate / (L - 1.0) > p.decay) L -= 1.0;
  while (!(p.B - 2.0 * (p.ell_rate * L + 1.0) * p.A_rate / L > p.decay)) L += 1.0;
  return L;
}

inline weights::WeightSpec extreme_spec(const ExtremeParams& p, double L) {
  return weights::WeightSpec(static_cast<int>(std::ceil(p.ell_rate * L)), p.A_rate / L, p.B);
}

inline CaseCertificate certify_extremely_small_lambda(const ExtremeParams& p = {}) {
  CaseCertificate cert;
  cert.case_name = "extremely-small";
  cert.ladder = p.ladder;
  cert.params = {{"ell_rate", p.ell_rate}, {"A_rate", p.A_rate}, {"B", p.B}, {"decay", p.decay},
                 {"T_star", p.T_star}, {"lambda_floor_rate", p.lambda_floor_rate},
                 {"lambda_power", p.lambda_power}, {"ladder_length", static_cast<double>(p.ladder.size())}};

  // (a) B - 2 ell A > decay for L past an explicit threshold.
  const double asymptotic = p.B - 2.0 * p.ell_rate * p.A_rate;
  cert.checks.push_back(check_greater("limit of B - 2 ell A exceeds decay", asymptotic, p.decay));
  const double L0 = decay_threshold(p);
  cert.params.emplace_back("decay_threshold_L", L0);
  double worst_decay = std::numeric_limits<double>::infinity();
  if (L0 > 0.0) {
    for (double L = L0; L <= 100.0 * L0; L += 0.0137 * L0) {
      worst_decay = std::min(worst_decay, extreme_spec(p, L).support_start());
    }
  }
  cert.checks.push_back(check_greater("B - 2 ceil(ell_rate L) A_rate / L > decay for L >= threshold", worst_decay, p.decay));

  // (b) error terms of the low-lying zero reduction.
  const ExponentTerm target{0.0, p.error_target, "e^{" + detail::fmt(p.error_target) + " L}"};
  const double two_ell = 2.0 * p.ell_rate;
  cert.checks.push_back(check_little_o(
      {1.0, two_ell * std::log(2.0 / (p.A_rate * p.T_star)), "L (2 / (A T* L))^{2 ell}"}, target));
  cert.checks.push_back(check_little_o({3.0, -p.decay / 2.0, "L^2 e^{-(B - 2 ell A) L / 2} / A"}, target));
  cert.checks.push_back(check_little_o(
      {1.0, -p.decay + two_ell * std::log(1.0 / p.A_rate), "L (1 / (A L))^{2 ell} e^{-(B - 2 ell A) L}"}, target));
  cert.checks.push_back(check_little_o(
      {1.0, -1.5 * p.decay + two_ell * std::log(2.0 / p.A_rate), "L (2 / (A L))^{2 ell} e^{-3 (B - 2 ell A) L / 2}"},
      target));
  cert.checks.push_back(check_little_o({0.0, -p.decay, "F(beta_1 L) ~ e^{-decay L}"}, target));
  const ExponentTerm lambda_floor{1.0, -p.lambda_floor_rate, "L e^{-" + detail::fmt(p.lambda_floor_rate) + " L}"};
  cert.checks.push_back(check_little_o(target, lambda_floor));

  // (c) ladder of repulsion constants.
  for (std::size_t j = 0; j < p.ladder.size(); ++j) {
    const auto& rung = p.ladder[j];
    const auto row = detail::rung_row(p.repulsion_variant, rung.T, rung.C);
    cert.checks.push_back(check_less("rung " + std::to_string(j + 1) + " repulsion: 24 K(T = " + detail::fmt(rung.T) +
                                         ") < " + detail::fmt(rung.C),
                                     24.0 * row.K, rung.C));
    if (j > 0) {
      cert.checks.push_back(check_greater("rung " + std::to_string(j + 1) + " height increases",
                                          rung.T, p.ladder[j - 1].T));
    }
  }
  if (!p.ladder.empty()) {
    cert.checks.push_back(check_close("last rung height = T*", p.ladder.back().T, p.T_star, 0.0));
  }
  for (std::size_t j = 1; j < p.ladder.size(); ++j) {
    const double prev_T = p.ladder[j - 1].T;
    const double value = two_ell * std::log(2.0 / (p.A_rate * prev_T)) +
                         p.lambda_floor_rate * (1.0 - p.decay / p.ladder[j].C);
    cert.checks.push_back(check_less("ladder j = " + std::to_string(j + 1) + ": 2 ell_rate log(2 / (A_rate T_" +
                                         std::to_string(j) + ")) + rate (1 - decay / C_" + std::to_string(j + 1) +
                                         ") < " + detail::fmt(p.ladder_target),
                                     value, p.ladder_target));
  }

  // (d) the j = 1 term.
  if (!p.ladder.empty()) {
    const double ratio = p.decay / p.ladder.front().C;
    cert.checks.push_back(check_greater("decay / C_1 > " + detail::fmt(p.j1_ratio_floor), ratio, p.j1_ratio_floor));
    cert.checks.push_back(check_greater_equal("(decay / C_1 - " + detail::fmt(p.j1_target) + ") x power >= 1",
                                              (ratio - p.j1_target) * p.lambda_power, 1.0));
  }
  cert.checks.push_back(check_greater("lambda_1^{j1_target} = o(lambda_1): exponent > 1", p.j1_target, 1.0));
  // rungs are checked strictly against the target, which absorbs the L^2 factor
  cert.checks.push_back(check_less_equal("ladder target <= 0", p.ladder_target, 0.0));

  // (e) transform facts at the exceptional zero and its reflection.
  double worst_near = -std::numeric_limits<double>::infinity();
  double worst_far = -std::numeric_limits<double>::infinity();
  if (L0 > 0.0) {
    for (double L : {L0, 2.0 * L0, 10.0 * L0, 100.0 * L0}) {
      const auto spec = extreme_spec(p, L);
      for (double lam = 1e-12; lam < kZeroFreeWidth; lam *= 1.5) {
        worst_near = std::max(worst_near, weights::log_abs_laplace_f(spec, {lam, 0.0}) + p.decay * lam);
        worst_far = std::max(worst_far, weights::log_abs_laplace_f(spec, {L - lam, 0.0}) + p.decay * (L - lam));
      }
    }
  }
  cert.checks.push_back(check_less_equal("log|F((1 - beta_1) L)| + decay lambda_1 <= 0", worst_near, 0.0));
  cert.checks.push_back(check_less_equal("log F(beta_1 L) + decay (L - lambda_1) <= 0", worst_far, 0.0));
  return cert;
}

// ---------------------------------------------------------------------------
// Variants.

/// Tower of normal extensions over Q: lambda_1 >> L e^{-0.5 L}.
inline ExtremeParams tower_params() {
  ExtremeParams p;
  p.ell_rate = 0.05;
  p.A_rate = 3.53;
  p.B = 36.4;
  p.decay = 36.0;
  p.T_star = 149.0;
  p.lambda_floor_rate = 0.5;
  p.lambda_power = 200.0;
  p.ladder = {{1.0, 35.8}, {12.2, 40.3}, {149.0, 50.4}};
  p.error_target = -0.5;
  p.ladder_target = 0.0;
  p.j1_ratio_floor = 1.005;
  p.j1_target = 1.0005;
  return p;
}

/// n_L = o(log d_L), extremely small lambda_1 < L^{-1000}.
inline ExtremeParams small_degree_extreme_params() {
  ExtremeParams p;
  p.ell_rate = 0.1;
  p.A_rate = 0.2;
  p.B = 24.1;
  p.decay = 24.05;
  p.T_star = std::exp(64.0);
  p.lambda_floor_rate = repulsion::kNoArchRealZerosC;
  p.lambda_power = 1000.0;
  p.ladder = {{std::exp(64.0), repulsion::kNoArchAllZerosC}};
  p.repulsion_variant = repulsion::Variant::no_arch_all_zeros;
  p.error_target = -repulsion::kNoArchRealZerosC;
  p.ladder_target = 0.0;
  p.j1_ratio_floor = 1.001;
  p.j1_target = 1.0005;
  return p;
}

/// n_L = o(log d_L), very small L^{-1000} <= lambda_1 < eta.
inline VerySmallParams small_degree_very_small_params() {
  VerySmallParams p;
  p.ell = 1000;
  p.A = 1e-6;
  p.B = 24.1;
  p.expected_decay = 24.098;
  p.repulsion_T = std::exp(64.0);
  p.repulsion_C = repulsion::kNoArchAllZerosC;
  p.repulsion_variant = repulsion::Variant::no_arch_all_zeros;
  p.lambda_power = 1000.0;
  return p;
}

inline constexpr double kNonexceptionalB = 7.41;
inline constexpr double kSmallB = 2.63;
inline constexpr double kVerySmallB = 36.5;
inline constexpr double kExtremeB = 39.5;

inline CaseCertificate certify_tower() {
  CaseCertificate cert = certify_extremely_small_lambda(tower_params());
  cert.case_name = "tower";
  cert.checks.push_back(detail::largest_exponent({kNonexceptionalB, kSmallB, kVerySmallB, 36.4}, 36.5));
  return cert;
}

inline CaseCertificate certify_small_degree() {
  using namespace repulsion;
  CaseCertificate cert;
  cert.case_name = "small-degree";
  cert.append(certify_very_small_lambda(small_degree_very_small_params()), "very small: ");
  cert.append(certify_extremely_small_lambda(small_degree_extreme_params()), "extremely small: ");

  const auto all = optimize_alpha(1.0, Variant::no_arch_all_zeros);
  const auto real = optimize_alpha(1.0, Variant::no_arch_real_zeros);
  cert.params.emplace_back("no_arch_alpha", all.alpha);
  cert.checks.push_back(check_less("24 K (no archimedean terms, all zeros) < 24.01", 24.0 * all.K, kNoArchAllZerosC));
  cert.checks.push_back(check_less("24 K (no archimedean terms, real zeros) < 12.01", 24.0 * real.K, kNoArchRealZerosC));
  // alpha fixed large enough for M/alpha <= 1.0001 log d_L
  const double large_alpha = 2e4;
  cert.params.emplace_back("large_alpha", large_alpha);
  cert.checks.push_back(check_less_equal("K (no archimedean terms) at alpha = 2e4 <= 1.0001",
                                         coeff_no_archimedean(large_alpha, ZeroSet::all), 1.0001));
  cert.checks.push_back(check_less("24 x 1.0001 < 24.01", 24.0 * 1.0001, kNoArchAllZerosC));
  cert.checks.push_back(detail::largest_exponent({kNonexceptionalB, kSmallB, 24.1, 24.1}, 24.1));
  return cert;
}

/// No Siegel zero: only the non-exceptional and small cases are needed.
inline CaseCertificate certify_non_siegel() {
  CaseCertificate cert;
  cert.case_name = "non-siegel";
  cert.params = {{"B_nonexceptional", kNonexceptionalB}, {"B_small", kSmallB}};
  cert.checks.push_back(detail::largest_exponent({kNonexceptionalB, kSmallB}, 7.5));
  cert.checks.push_back(check_less("B = 7.41 < 7.5", kNonexceptionalB, 7.5));
  return cert;
}

inline std::vector<CaseCertificate> certify_variants() {
  return {certify_tower(), certify_small_degree(), certify_non_siegel()};
}

/// The four main cases (with eta chosen by select_eta) followed by the variants.
inline std::vector<CaseCertificate> certify_all() {
  std::vector<CaseCertificate> out;
  out.push_back(certify_nonexceptional());
  out.push_back(certify_small_lambda(select_eta()));
  out.push_back(certify_very_small_lambda());
  CaseCertificate extreme = certify_extremely_small_lambda();
  extreme.checks.push_back(detail::largest_exponent({kNonexceptionalB, kSmallB, kVerySmallB, kExtremeB}, 40.0));
  out.push_back(std::move(extreme));
  for (auto& c : certify_variants()) out.push_back(std::move(c));
  return out;
}

}  // namespace chebcert::certifier

#endif  // CHEBCERT_CERTIFIER_HPP
