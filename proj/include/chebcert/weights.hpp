#ifndef CHEBCERT_WEIGHTS_HPP
#define CHEBCERT_WEIGHTS_HPP

// The compactly supported weight f_ell: the 2*ell-fold convolution power of
// the box (1/A) 1_{[-A/2, A/2]}, shifted to be supported on [B - 2 ell A, B].
// Its Laplace transform is
//   F(z) = exp(-(B - 2 ell A) z) * ((1 - exp(-A z)) / (A z))^{2 ell}.

#include <chebcert/check.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace chebcert::weights {

struct WeightSpec {
  int ell = 1;
  double A = 1.0;
  double B = 3.0;

  WeightSpec(int ell_, double A_, double B_) : ell(ell_), A(A_), B(B_) {
    if (ell < 1) throw std::invalid_argument("WeightSpec: ell must be a positive integer");
    if (!(A > 0.0) || !(B > 0.0)) throw std::invalid_argument("WeightSpec: A and B must be positive");
    if (!(B > 2.0 * ell * A)) throw std::invalid_argument("WeightSpec: requires B > 2 ell A");
  }

  [[nodiscard]] int order() const noexcept { return 2 * ell; }
  /// Left end of the support, B - 2 ell A.
  [[nodiscard]] double support_start() const noexcept { return B - 2.0 * ell * A; }
};

/// Cardinal B-spline of order n (degree n - 1) on [0, n], unit mass.
/// Cox-de Boor recursion; stable for the orders used here.
inline double cardinal_bspline(int n, double u) {
  if (!(u > 0.0) || !(u < static_cast<double>(n))) return 0.0;
  const int cell = std::min(static_cast<int>(std::floor(u)), n - 1);
  // vals[m] = M_k(u - m) for m = 0..n-k.
  std::vector<double> vals(static_cast<std::size_t>(n), 0.0);
  vals[static_cast<std::size_t>(cell)] = 1.0;
  for (int k = 2; k <= n; ++k) {
    // M_k(v) = (v M_{k-1}(v) + (k - v) M_{k-1}(v - 1)) / (k - 1)
    for (int m = 0; m <= n - k; ++m) {
      const double v = u - m;
      vals[static_cast<std::size_t>(m)] =
          (v * vals[static_cast<std::size_t>(m)] + (k - v) * vals[static_cast<std::size_t>(m + 1)]) / (k - 1);
    }
  }
  return vals[0];
}

/// f_ell(t); zero outside [B - 2 ell A, B].
inline double weight_eval(const WeightSpec& spec, double t) {
  const double u = (t - spec.support_start()) / spec.A;
  return cardinal_bspline(spec.order(), u) / spec.A;
}

/// (1 - e^{-w}) / w, with the removable singularity at 0 handled by series.
inline std::complex<double> box_factor(std::complex<double> w) {
  if (std::abs(w) < 1e-4) {
    // 1 - w/2 + w^2/6 - w^3/24 + w^4/120
    return 1.0 + w * (-0.5 + w * (1.0 / 6.0 + w * (-1.0 / 24.0 + w / 120.0)));
  }
  // 1 - e^{-w} = -expm1(-w), written out to keep the real part accurate.
  const double e = std::exp(-w.real());
  const double re = -std::expm1(-w.real()) + 2.0 * e * std::pow(std::sin(0.5 * w.imag()), 2);
  const double im = e * std::sin(w.imag());
  return std::complex<double>(re, im) / w;
}

inline double box_factor(double w) {
  if (std::abs(w) < 1e-4) return 1.0 + w * (-0.5 + w * (1.0 / 6.0 + w * (-1.0 / 24.0 + w / 120.0)));
  return -std::expm1(-w) / w;
}

/// F(z) in closed form. Uses exp(2 ell log W) so large ell does not need
/// repeated multiplication.
inline std::complex<double> laplace_f(const WeightSpec& spec, std::complex<double> z) {
  const std::complex<double> w = box_factor(spec.A * z);
  const std::complex<double> shift = -spec.support_start() * z;
  if (w == std::complex<double>(0.0, 0.0)) return {0.0, 0.0};
  return std::exp(shift + static_cast<double>(spec.order()) * std::log(w));
}

/// log |F(z)|; usable where F itself under- or overflows.
inline double log_abs_laplace_f(const WeightSpec& spec, std::complex<double> z) {
  const double w = std::abs(box_factor(spec.A * z));
  return -spec.support_start() * z.real() + static_cast<double>(spec.order()) * std::log(w);
}

/// log of e^{-(B - 2 ell A) x} (2 / (A sqrt(x^2 + y^2)))^power, the majorant
/// of |F((1 - s) L)| with x = (1 - sigma) L, y = t L.
inline double log_transform_majorant(const WeightSpec& spec, double x, double y, double power) {
  return -spec.support_start() * x + power * std::log(2.0 / (spec.A * std::hypot(x, y)));
}

/// |(1 - e^{-z}) / z|^2 <= ((1 - e^{-x}) / x)^2 at z = x + iy.
inline bool calcbound_check(double x, double y) {
  if (!(x > 0.0)) throw std::domain_error("calcbound_check: requires x > 0");
  const double lhs = std::norm(box_factor(std::complex<double>(x, y)));
  const double r = box_factor(x);
  // rounding slack of a few ulps on the y = 0 equality case
  return lhs <= r * r * (1.0 + 1e-13);
}

namespace detail {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
inline void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& wts) {
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  wts.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double pn = n == 1 ? x : p1;
      const double pnm1 = n == 1 ? 1.0 : p0;
      dp = n * (x * pn - pnm1) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    nodes[static_cast<std::size_t>(i)] = -x;
    nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    wts[static_cast<std::size_t>(i)] = w;
    wts[static_cast<std::size_t>(n - 1 - i)] = w;
  }
}

}  // namespace detail

/// Integral of g(t) f(t) dt, exact for polynomial g up to modest degree:
/// Gauss-Legendre on every knot interval of f.
template <typename G>
auto integrate_against_weight(const WeightSpec& spec, G&& g, int points_per_piece = 24) {
  std::vector<double> nodes, wts;
  detail::gauss_legendre(points_per_piece, nodes, wts);
  using R = decltype(g(0.0));
  R total{};
  const double a0 = spec.support_start();
  for (int piece = 0; piece < spec.order(); ++piece) {
    const double lo = a0 + piece * spec.A;
    const double half = 0.5 * spec.A;
    const double mid = lo + half;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const double t = mid + half * nodes[i];
      total += wts[i] * half * weight_eval(spec, t) * g(t);
    }
  }
  return total;
}

/// Numerical property sweep used by the `weights --check` command.
inline std::vector<Check> check_properties(const WeightSpec& spec, std::uint64_t seed = 20150801,
                                           int samples = 100000) {
  std::vector<Check> out;
  std::mt19937_64 rng(seed);

  out.push_back(check_close("F(0) = 1", laplace_f(spec, {0.0, 0.0}).real(), 1.0, 1e-15));

  // (i) and (ii): bounds and support on a grid covering the support and beyond.
  double peak = 0.0;
  double outside = 0.0;
  double negative = 0.0;
  const double lo = spec.support_start();
  const int grid = 20000;
  for (int i = -grid / 10; i <= grid + grid / 10; ++i) {
    const double t = lo + (spec.B - lo) * i / grid;
    const double v = weight_eval(spec, t);
    peak = std::max(peak, v);
    negative = std::min(negative, v);
    if (t < lo || t > spec.B) outside = std::max(outside, std::abs(v));
  }
  out.push_back(check_less_equal("max f <= 1/A", peak, 1.0 / spec.A));
  out.push_back(check_greater_equal("min f >= 0", negative, 0.0));
  out.push_back(check_less_equal("f vanishes outside [B - 2 ell A, B]", outside, 0.0));

  if (spec.ell <= 16) {
    const double mass = integrate_against_weight(spec, [](double) { return 1.0; });
    out.push_back(check_close("integral of f = 1", mass, 1.0, 1e-8));
  }

  // conjugate symmetry and the (iv) majorant
  std::uniform_real_distribution<double> ux(1e-3, 50.0);
  std::uniform_real_distribution<double> uy(-200.0, 200.0);
  double conj_err = 0.0;
  double worst_iv = -1e300;
  for (int i = 0; i < std::min(samples, 20000); ++i) {
    const double x = ux(rng);
    const double y = uy(rng);
    const std::complex<double> z(x, y);
    const auto f1 = laplace_f(spec, std::conj(z));
    const auto f2 = std::conj(laplace_f(spec, z));
    conj_err = std::max(conj_err, std::abs(f1 - f2) / std::max(1.0, std::abs(f2)));
    const double lhs = log_abs_laplace_f(spec, {x, -y});
    for (double power : {0.0, 1.0, static_cast<double>(spec.order())}) {
      worst_iv = std::max(worst_iv, lhs - log_transform_majorant(spec, x, y, power));
    }
  }
  out.push_back(check_less_equal("F(conj z) = conj F(z) (relative error)", conj_err, 1e-12));
  out.push_back(check_less_equal("log|F((1-s)L)| - log majorant, alpha in {0, 1, 2 ell}", worst_iv, 1e-12));

  std::uniform_real_distribution<double> cx(0.0, 50.0);
  std::uniform_real_distribution<double> cy(-1e4, 1e4);
  int failures = 0;
  for (int i = 0; i < samples; ++i) {
    double x = cx(rng);
    if (x == 0.0) x = 50.0;
    if (!calcbound_check(x, cy(rng))) ++failures;
  }
  out.push_back(check_less_equal("|(1-e^-z)/z| <= (1-e^-x)/x failures", failures, 0.0));
  return out;
}

}  // namespace chebcert::weights

#endif  // CHEBCERT_WEIGHTS_HPP
