#ifndef CHEBCERT_TESTS_ORACLES_HPP
#define CHEBCERT_TESTS_ORACLES_HPP

// Independent reference implementations used only by the tests. None of
// these share code paths with the library.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr double kEulerGamma = 0.57721566490153286061;

// psi(z) = -gamma + sum_{n>=0} (1/(n+1) - 1/(n+z)), summed directly to N and
// closed with an Euler-Maclaurin tail (integral + f(N)/2 - f'(N)/12).
inline std::complex<double> digamma(std::complex<double> z, int N = 20000) {
  std::complex<long double> s = 0.0L;
  const std::complex<long double> zl(z.real(), z.imag());
  for (int n = N - 1; n >= 0; --n) {
    s += 1.0L / static_cast<long double>(n + 1) - 1.0L / (static_cast<long double>(n) + zl);
  }
  const std::complex<long double> Nl(N, 0.0L);
  const auto f = [&](std::complex<long double> x) { return (zl - 1.0L) / ((x + 1.0L) * (x + zl)); };
  const auto fp = -(zl - 1.0L) * (2.0L * Nl + 1.0L + zl) / ((Nl + 1.0L) * (Nl + 1.0L) * (Nl + zl) * (Nl + zl));
  s += std::log((Nl + zl) / (Nl + 1.0L)) + f(Nl) / 2.0L - fp / 12.0L;
  return {static_cast<double>(s.real()) - kEulerGamma, static_cast<double>(s.imag())};
}

// psi'(x) = sum_{n>=0} 1/(x+n)^2 with the same kind of tail.
inline double trigamma(double x, int N = 20000) {
  long double s = 0.0L;
  for (int n = N - 1; n >= 0; --n) {
    const long double t = static_cast<long double>(x) + n;
    s += 1.0L / (t * t);
  }
  const long double y = static_cast<long double>(x) + N;
  s += 1.0L / y + 1.0L / (2.0L * y * y) + 1.0L / (6.0L * y * y * y);
  return static_cast<double>(s);
}

// sum_{k>=0} 1/(a + step k)^2: `terms` terms directly, then the integral tail
// 1/(step (a + step terms)) and half the next term.
inline double inverse_square_sum(double a, double step, std::int64_t terms) {
  long double s = 0.0L;
  for (std::int64_t k = terms - 1; k >= 0; --k) {
    const long double t = static_cast<long double>(a) + static_cast<long double>(step) * k;
    s += 1.0L / (t * t);
  }
  const long double end = static_cast<long double>(a) + static_cast<long double>(step) * terms;
  s += 1.0L / (static_cast<long double>(step) * end) + 0.5L / (end * end);
  return static_cast<double>(s);
}

// Cardinal B-spline via the alternating truncated-power formula
// M_n(u) = (1/(n-1)!) sum_k (-1)^k C(n, k) (u - k)_+^{n-1}. Only used for
// small n, where the cancellation is harmless in long double.
inline double bspline_truncated_power(int n, double u) {
  if (u <= 0.0 || u >= n) return 0.0;
  long double sum = 0.0L;
  long double binom = 1.0L;
  for (int k = 0; k <= n; ++k) {
    const long double d = static_cast<long double>(u) - k;
    if (d > 0.0L) sum += ((k % 2) ? -1.0L : 1.0L) * binom * std::pow(d, static_cast<long double>(n - 1));
    binom = binom * (n - k) / (k + 1);
  }
  long double fact = 1.0L;
  for (int i = 2; i < n; ++i) fact *= i;
  return static_cast<double>(sum / fact);
}

// Laplace transform of the weight (given as a callable) by adaptive
// Gauss-Kronrod quadrature on each knot interval.
template <typename F>
std::complex<double> laplace_quadrature(F&& f, double start, double A, int pieces, std::complex<double> z) {
  using boost::math::quadrature::gauss_kronrod;
  double re = 0.0, im = 0.0;
  for (int p = 0; p < pieces; ++p) {
    const double a = start + p * A;
    const double b = a + A;
    re += gauss_kronrod<double, 31>::integrate(
        [&](double t) { return f(t) * std::exp(-z.real() * t) * std::cos(z.imag() * t); }, a, b, 8, 1e-14);
    im += gauss_kronrod<double, 31>::integrate(
        [&](double t) { return -f(t) * std::exp(-z.real() * t) * std::sin(z.imag() * t); }, a, b, 8, 1e-14);
  }
  return {re, im};
}

// Legendre symbol by Euler's criterion, p an odd prime.
inline int legendre(std::int64_t a, std::int64_t p) {
  std::int64_t r = ((a % p) + p) % p;
  if (r == 0) return 0;
  std::int64_t e = (p - 1) / 2, base = r, acc = 1;
  while (e) {
    if (e & 1) acc = static_cast<std::int64_t>((__int128)acc * base % p);
    base = static_cast<std::int64_t>((__int128)base * base % p);
    e >>= 1;
  }
  return acc == 1 ? 1 : -1;
}

// x^2 = a (mod p) solvable with x != 0 mod p, by exhaustion.
inline bool is_square_residue(std::int64_t a, std::int64_t p) {
  const std::int64_t r = ((a % p) + p) % p;
  for (std::int64_t x = 1; x < p; ++x) {
    if (x * x % p == r) return true;
  }
  return false;
}

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Kronecker symbol from the definition: factor n, Legendre at odd primes,
// (a|2) from a mod 8, sign from (a|-1).
inline int kronecker(std::int64_t a, std::int64_t n) {
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  for (std::int64_t p = 2; p * p <= n || n > 1; ++p) {
    if (p * p > n) p = n;
    while (n % p == 0) {
      n /= p;
      int s;
      if (p == 2) {
        const std::int64_t r = ((a % 8) + 8) % 8;
        s = (r % 2 == 0) ? 0 : ((r == 1 || r == 7) ? 1 : -1);
      } else {
        s = legendre(a, p);
      }
      result *= s;
    }
  }
  return result;
}

}  // namespace oracle

#endif  // CHEBCERT_TESTS_ORACLES_HPP
