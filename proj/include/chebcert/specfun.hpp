#ifndef CHEBCERT_SPECFUN_HPP
#define CHEBCERT_SPECFUN_HPP

// Digamma-based archimedean quantities entering the zero-sum bounds:
//   delta(x, y) = Re psi((x + iy) / 2)
//   g1, g2      = averaged gamma-factor contributions of real / complex places
//   w1, w2      = trivial-zero sums, expressed through the trigamma function

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace chebcert::specfun {

/// Archimedean data of a number field as it enters the bounds.
struct FieldSignature {
  int r1 = 0;
  int r2 = 0;
  double logd = 0.0;  // log of the absolute discriminant

  FieldSignature(int real_places, int complex_pairs, double log_disc)
      : r1(real_places), r2(complex_pairs), logd(log_disc) {
    if (r1 < 0 || r2 < 0) throw std::invalid_argument("FieldSignature: negative place count");
    if (r1 + r2 == 0) throw std::invalid_argument("FieldSignature: degree must be positive");
    if (!(logd > 0.0)) throw std::invalid_argument("FieldSignature: log-discriminant must be positive");
  }

  [[nodiscard]] int degree() const noexcept { return r1 + 2 * r2; }

  // Odlyzko-type admissibility: (log 60) r1 + (log 22) 2 r2 <= log d.
  [[nodiscard]] bool odlyzko_admissible() const noexcept {
    return std::log(60.0) * r1 + std::log(22.0) * 2.0 * r2 <= logd;
  }
};

namespace detail {

// Even Bernoulli numbers B_2 .. B_14.
inline constexpr std::array<double, 7> kBernoulli = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0};

// |B_16|, the first omitted coefficient.
inline constexpr double kBernoulli16 = 3617.0 / 510.0;

// Asymptotic series is only used once Re z reaches this value.
inline constexpr double kShift = 10.0;

}  // namespace detail

/// Upper bound for the truncation error of the digamma asymptotic series
/// (terms through B_14) at a point with |z| = modulus and Re z > 0.
///
/// The remainder after n terms is bounded by the first omitted term times
/// sec^{2n}(arg(z)/2); for Re z > 0 that factor is at most 2^n, so with
/// n = 8 the bound is 256 |B_16| / (16 |z|^16).
inline double digamma_remainder_bound(double modulus) {
  return 256.0 * detail::kBernoulli16 / (16.0 * std::pow(modulus, 16.0));
}

/// Complex digamma for Re z > 0: upward recurrence to Re z >= 10, then the
/// Stirling series with Bernoulli coefficients through B_14.
inline std::complex<double> digamma(std::complex<double> z) {
  if (!(z.real() > 0.0)) throw std::domain_error("digamma: requires Re z > 0");
  std::complex<double> shift{0.0, 0.0};
  while (z.real() < detail::kShift) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  const std::complex<double> inv = 1.0 / z;
  const std::complex<double> inv2 = inv * inv;
  // Horner in 1/z^2: sum_{k=1}^{7} B_{2k} / (2k z^{2k})
  std::complex<double> series{0.0, 0.0};
  for (int k = static_cast<int>(detail::kBernoulli.size()); k >= 1; --k) {
    series = (series + detail::kBernoulli[k - 1] / (2.0 * k)) * inv2;
  }
  return shift + std::log(z) - 0.5 * inv - series;
}

/// Real trigamma for x > 0, same recurrence/asymptotic scheme as digamma.
inline double trigamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("trigamma: requires x > 0");
  double shift = 0.0;
  while (x < detail::kShift) {
    shift += 1.0 / (x * x);
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // 1/x + 1/(2x^2) + sum_{k=1}^{7} B_{2k} / x^{2k+1}
  double series = 0.0;
  for (int k = static_cast<int>(detail::kBernoulli.size()); k >= 1; --k) {
    series = (series + detail::kBernoulli[k - 1]) * inv2;
  }
  return shift + inv + 0.5 * inv2 + series * inv;
}

/// Re psi((x + iy)/2). Only x > 0 is supported.
inline double delta(double x, double y) {
  if (!(x > 0.0)) throw std::domain_error("delta: requires x > 0");
  return digamma(std::complex<double>(0.5 * x, 0.5 * y)).real();
}

namespace detail {
inline void require_alpha(double alpha, const char* who) {
  if (!(alpha >= 1.0)) throw std::domain_error(std::string(who) + ": requires alpha >= 1");
}
inline void require_t(double t, const char* who) {
  if (!(t >= 0.0)) throw std::domain_error(std::string(who) + ": requires t >= 0");
}
}  // namespace detail

/// Real-place contribution G_1(alpha; t).
inline double g1(double alpha, double t) {
  detail::require_alpha(alpha, "g1");
  detail::require_t(t, "g1");
  return 0.5 * (delta(alpha + 1.0, 0.0) + delta(alpha + 1.0, t)) - std::log(std::numbers::pi);
}

/// Complex-place contribution G_2(alpha; t).
inline double g2(double alpha, double t) {
  detail::require_alpha(alpha, "g2");
  detail::require_t(t, "g2");
  return 0.25 * (delta(alpha + 1.0, 0.0) + delta(alpha + 2.0, 0.0) + delta(alpha + 1.0, t) +
                 delta(alpha + 2.0, t)) -
         std::log(std::numbers::pi);
}

/// sum_{k>=0} (alpha + 1 + 2k)^{-2} = psi'((alpha + 1)/2) / 4.
inline double w1(double alpha) {
  detail::require_alpha(alpha, "w1");
  return 0.25 * trigamma(0.5 * (alpha + 1.0));
}

/// sum_{k>=0} (alpha + 1 + k)^{-2} = psi'(alpha + 1).
inline double w2(double alpha) {
  detail::require_alpha(alpha, "w2");
  return trigamma(alpha + 1.0);
}

}  // namespace chebcert::specfun

#endif  // CHEBCERT_SPECFUN_HPP
