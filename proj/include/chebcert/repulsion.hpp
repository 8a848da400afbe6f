#ifndef CHEBCERT_REPULSION_HPP
#define CHEBCERT_REPULSION_HPP

// Deuring-Heilbronn repulsion constants.
//
// For alpha >= 1 the power-sum argument needs an upper bound M/alpha <= K log d_L
// + correction. K is minimized over alpha; the repulsion constant C(T) is then
// certified by 24 K < C.

#include <chebcert/specfun.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chebcert::repulsion {

enum class Variant {
  all_zeros,           // zeros with |gamma'| <= T
  real_zeros,          // real zeros only
  no_arch_all_zeros,   // n_L = o(log d_L): archimedean coefficients dropped
  no_arch_real_zeros,
};

inline std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::all_zeros: return "all-zeros";
    case Variant::real_zeros: return "real-zeros";
    case Variant::no_arch_all_zeros: return "no-arch-all-zeros";
    case Variant::no_arch_real_zeros: return "no-arch-real-zeros";
  }
  return "unknown";
}

inline std::optional<Variant> parse_variant(std::string_view s) {
  if (s == "all-zeros") return Variant::all_zeros;
  if (s == "real-zeros") return Variant::real_zeros;
  if (s == "no-arch-all-zeros" || s == "no-arch") return Variant::no_arch_all_zeros;
  if (s == "no-arch-real-zeros") return Variant::no_arch_real_zeros;
  return std::nullopt;
}

enum class ZeroSet { all, real };

/// Coefficient of log d_L, and the log d_L-independent remainder.
struct Coefficient {
  double K = 0.0;
  double correction = 0.0;
};

namespace detail {
inline void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}
inline double finite_terms(double alpha) { return 2.0 / (alpha * alpha) + 2.0 / (alpha + alpha * alpha); }
}  // namespace detail

inline Coefficient coeff_all_zeros(double alpha, double T) {
  detail::require(alpha >= 1.0, "coeff_all_zeros: requires alpha >= 1");
  detail::require(T >= 1.0, "coeff_all_zeros: requires T >= 1");
  using namespace specfun;
  const double pre = (alpha + 0.5) * (alpha + 0.5) / alpha;
  const double real_place = (g1(alpha, T) + 2.0 * alpha * w1(alpha)) / (alpha * std::log(60.0));
  const double complex_place = (g2(alpha, T) + alpha * w2(alpha)) / (alpha * std::log(22.0));
  const double worst = std::max({real_place, complex_place, 0.0});
  return {pre * (1.0 / alpha + worst), pre * detail::finite_terms(alpha)};
}

inline Coefficient coeff_real_zeros(double alpha) {
  detail::require(alpha >= 1.0, "coeff_real_zeros: requires alpha >= 1");
  using namespace specfun;
  const double pre = (alpha + 1.0) * (alpha + 1.0) / (2.0 * alpha);
  const double real_place = g1(alpha, 0.0) / (alpha * std::log(60.0));
  const double complex_place = g2(alpha, 0.0) / (alpha * std::log(22.0));
  const double worst = std::max({real_place, complex_place, 0.0});
  return {pre * (1.0 / alpha + worst), pre * detail::finite_terms(alpha)};
}

/// Archimedean terms dropped; returns K only.
inline double coeff_no_archimedean(double alpha, ZeroSet zeros) {
  detail::require(alpha >= 1.0, "coeff_no_archimedean: requires alpha >= 1");
  if (zeros == ZeroSet::all) return (alpha + 0.5) * (alpha + 0.5) / alpha / alpha;
  return (alpha + 1.0) * (alpha + 1.0) / (2.0 * alpha) / alpha;
}

inline Coefficient coefficient(Variant v, double alpha, double T) {
  switch (v) {
    case Variant::all_zeros: return coeff_all_zeros(alpha, T);
    case Variant::real_zeros: return coeff_real_zeros(alpha);
    case Variant::no_arch_all_zeros:
      return {coeff_no_archimedean(alpha, ZeroSet::all),
              (alpha + 0.5) * (alpha + 0.5) / alpha * detail::finite_terms(alpha)};
    case Variant::no_arch_real_zeros:
      return {coeff_no_archimedean(alpha, ZeroSet::real),
              (alpha + 1.0) * (alpha + 1.0) / (2.0 * alpha) * detail::finite_terms(alpha)};
  }
  throw std::logic_error("coefficient: unknown variant");
}

/// Rounds up at the given number of decimals. Upper bounds must round up.
inline double round_up(double x, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::ceil(x * scale - 1e-9) / scale;
}

struct RepulsionBound {
  double T = 1.0;
  double alpha = 1.0;
  double K = 0.0;
  double C = 0.0;
  Variant variant = Variant::all_zeros;
  double correction = 0.0;
};

struct SearchOptions {
  double alpha_min = 1.0;
  double alpha_max = 2500.0;
  double grid_step = 0.01;
  double tolerance = 1e-4;
};

/// Grid search over alpha, refined by ternary search around the best grid
/// point. Ties go to the smaller alpha. C = round_up(24 K, 1).
inline RepulsionBound optimize_alpha(double T, Variant v, const SearchOptions& opt = {}) {
  detail::require(T >= 1.0 || v == Variant::real_zeros, "optimize_alpha: requires T >= 1");
  detail::require(opt.grid_step > 0.0, "optimize_alpha: grid step must be positive");
  const double height = std::max(T, 1.0);
  auto K = [&](double a) { return coefficient(v, a, height).K; };

  const auto steps = static_cast<long>(std::floor((opt.alpha_max - opt.alpha_min) / opt.grid_step + 1e-9));
  long best_i = 0;
  double best_k = std::numeric_limits<double>::infinity();
  for (long i = 0; i <= steps; ++i) {
    const double a = opt.alpha_min + static_cast<double>(i) * opt.grid_step;
    const double k = K(a);
    if (k < best_k) {
      best_k = k;
      best_i = i;
    }
  }
  double lo = opt.alpha_min + static_cast<double>(std::max(best_i - 1, 0L)) * opt.grid_step;
  double hi = opt.alpha_min + static_cast<double>(std::min(best_i + 1, steps)) * opt.grid_step;
  while (hi - lo > opt.tolerance) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (K(m1) <= K(m2)) hi = m2;
    else lo = m1;
  }
  double alpha = opt.alpha_min + static_cast<double>(best_i) * opt.grid_step;
  const double refined = 0.5 * (lo + hi);
  if (K(refined) < best_k) alpha = refined;

  const Coefficient c = coefficient(v, alpha, height);
  return RepulsionBound{T, alpha, c.K, round_up(24.0 * c.K, 1), v, c.correction};
}

// Tabled heights, multipliers and repulsion constants.
inline constexpr std::array<double, 11> kTableT = {1, 3.5, 8.7, 22, 54, 134, 332, 825, 2048, 5089, 12646};
inline constexpr std::array<double, 11> kTableAlpha = {3.07, 4.06, 5.68, 7.73, 9.43, 10.7,
                                                       11.7, 12.7, 13.7, 14.7, 15.7};
inline constexpr std::array<double, 11> kTableC = {35.8, 37.0, 39.3, 42.5, 46.1, 50.0,
                                                   53.8, 57.6, 61.4, 65.2, 69.0};
// Extra heights used by the tower-of-normal-extensions variant.
inline constexpr std::array<double, 2> kRemarkT = {12.2, 149};
inline constexpr std::array<double, 2> kRemarkC = {40.3, 50.4};

inline constexpr double kRealZerosAlpha = 5.8;
inline constexpr double kRealZerosC = 16.6;
inline constexpr double kNoArchAllZerosC = 24.01;
inline constexpr double kNoArchRealZerosC = 12.01;

struct DhRow {
  double T = 0.0;
  double alpha = 0.0;
  double K = 0.0;
  double C = 0.0;
  double margin = 0.0;  // C - 24 K
  bool pass = false;
  bool optimized_alpha = false;  // alpha came from optimize_alpha, not a table
  Variant variant = Variant::all_zeros;
};

inline DhRow make_row(Variant v, double T, double alpha, double C, bool optimized) {
  const double K = coefficient(v, alpha, std::max(T, 1.0)).K;
  const double margin = C - 24.0 * K;
  return DhRow{T, alpha, K, C, margin, margin > 0.0, optimized, v};
}

/// Checks 24 K < C for every tabled row of the given variant.
///  all-zeros: the 11 main rows plus (12.2, 40.3) and (149, 50.4)
///  real-zeros: alpha = 5.8, C = 16.6
///  no-arch-*: C = 24.01 / 12.01 at the optimizer's alpha
inline std::vector<DhRow> verify_dh_table(Variant v = Variant::all_zeros) {
  std::vector<DhRow> rows;
  switch (v) {
    case Variant::all_zeros:
      for (std::size_t i = 0; i < kTableT.size(); ++i) {
        rows.push_back(make_row(v, kTableT[i], kTableAlpha[i], kTableC[i], false));
      }
      for (std::size_t i = 0; i < kRemarkT.size(); ++i) {
        const double alpha = optimize_alpha(kRemarkT[i], v).alpha;
        rows.push_back(make_row(v, kRemarkT[i], alpha, kRemarkC[i], true));
      }
      break;
    case Variant::real_zeros:
      rows.push_back(make_row(v, 0.0, kRealZerosAlpha, kRealZerosC, false));
      break;
    case Variant::no_arch_all_zeros:
    case Variant::no_arch_real_zeros: {
      const double C = v == Variant::no_arch_all_zeros ? kNoArchAllZerosC : kNoArchRealZerosC;
      rows.push_back(make_row(v, 1.0, optimize_alpha(1.0, v).alpha, C, true));
      break;
    }
  }
  return rows;
}

/// phi = (1 - 1/sqrt 5) / 2
inline const double kPhi = 0.5 * (1.0 - 1.0 / std::sqrt(5.0));

/// Bound for the sum of |F~_ell((1 - rho) L)| over zeros near 1 when no zero
/// lies in Re s >= 1 - lambda/L, |Im s| <= 1:
///   ((1 - e^{-A lambda}) / (A lambda))^{2(ell - 1)}
///     * { phi (1 - e^{-2 A lambda}) / (A^2 lambda)
///         + (2 A lambda - 1 + e^{-2 A lambda}) / (2 A^2 lambda^2) + eta }
/// At lambda = 0 this is 2 phi / A + 1 + eta.
inline double low_lying_bound(double lambda, double A, int ell, double eta = 0.0) {
  if (!(lambda >= 0.0)) throw std::domain_error("low_lying_bound: requires lambda >= 0");
  if (lambda > 10.0) throw std::domain_error("low_lying_bound: requires lambda <= 10");
  if (!(A > 0.0)) throw std::domain_error("low_lying_bound: requires A > 0");
  if (ell < 1) throw std::domain_error("low_lying_bound: requires ell >= 1");
  if (!(eta >= 0.0)) throw std::domain_error("low_lying_bound: requires eta >= 0");

  const double u = A * lambda;
  double damping = 0.0;   // (1 - e^{-u}) / u
  double first = 0.0;     // (1 - e^{-2u}) / u
  double second = 0.0;    // (2u - 1 + e^{-2u}) / (2 u^2)
  if (lambda < 1e-6) {
    damping = 1.0 + u * (-0.5 + u * (1.0 / 6.0 + u * (-1.0 / 24.0)));
    first = 2.0 + u * (-2.0 + u * (4.0 / 3.0 + u * (-2.0 / 3.0)));
    second = 1.0 + u * (-2.0 / 3.0 + u * (1.0 / 3.0 + u * (-2.0 / 15.0)));
  } else {
    damping = -std::expm1(-u) / u;
    first = -std::expm1(-2.0 * u) / u;
    second = (2.0 * u + std::expm1(-2.0 * u)) / (2.0 * u * u);
  }
  return std::pow(damping, 2.0 * (ell - 1)) * (kPhi * first / A + second + eta);
}

}  // namespace chebcert::repulsion

#endif  // CHEBCERT_REPULSION_HPP
