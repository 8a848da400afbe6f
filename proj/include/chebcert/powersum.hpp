#ifndef CHEBCERT_POWERSUM_HPP
#define CHEBCERT_POWERSUM_HPP

// Turan-type power sum machinery: the Fejer-like kernel P(r, theta) and a
// witness finder for the lower bound on Re sum z_n^m.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace chebcert::powersum {

/// P(r, theta) = sum_{j=1}^{J} (1 - j/(J+1)) r^j cos(j theta).
inline double kernel_p(double r, double theta, int terms) {
  if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("kernel_p: requires 0 <= r <= 1");
  if (terms < 1) throw std::domain_error("kernel_p: requires J >= 1");
  const double denom = static_cast<double>(terms) + 1.0;
  double sum = 0.0;
  double rj = 1.0;
  for (int j = 1; j <= terms; ++j) {
    rj *= r;
    sum += (1.0 - j / denom) * rj * std::cos(j * theta);
  }
  return sum;
}

/// A finite sequence z_1..z_N, sorted so that |z_1| is maximal, with a
/// tolerance parameter epsilon > 0.
class PowerSumInstance {
 public:
  PowerSumInstance(std::vector<std::complex<double>> zs, double epsilon)
      : zs_(std::move(zs)), epsilon_(epsilon) {
    if (zs_.empty()) throw std::invalid_argument("PowerSumInstance: empty sequence");
    if (!(epsilon_ > 0.0)) throw std::invalid_argument("PowerSumInstance: epsilon must be positive");
    std::stable_sort(zs_.begin(), zs_.end(),
                     [](const auto& a, const auto& b) { return std::abs(a) > std::abs(b); });
    if (std::abs(zs_.front()) == 0.0) throw std::invalid_argument("PowerSumInstance: z_1 = 0");
  }

  [[nodiscard]] const std::vector<std::complex<double>>& zs() const noexcept { return zs_; }
  [[nodiscard]] double epsilon() const noexcept { return epsilon_; }
  [[nodiscard]] double leading_modulus() const { return std::abs(zs_.front()); }

  /// M = |z_1|^{-1} sum |z_n|.
  [[nodiscard]] double mass() const {
    double total = 0.0;
    for (const auto& z : zs_) total += std::abs(z);
    return total / leading_modulus();
  }

  /// Largest admissible exponent floor((12 + eps) M).
  [[nodiscard]] std::int64_t max_exponent() const {
    return static_cast<std::int64_t>(std::floor((12.0 + epsilon_) * mass()));
  }

  /// eps / (48 + 5 eps).
  [[nodiscard]] double threshold_ratio() const { return epsilon_ / (48.0 + 5.0 * epsilon_); }

  [[nodiscard]] std::string describe() const {
    std::ostringstream os;
    os.precision(17);
    os << "epsilon=" << epsilon_ << " zs=[";
    for (std::size_t i = 0; i < zs_.size(); ++i) {
      if (i) os << ", ";
      os << "(" << zs_[i].real() << "," << zs_[i].imag() << ")";
    }
    os << "]";
    return os.str();
  }

 private:
  std::vector<std::complex<double>> zs_;
  double epsilon_;
};

/// Raised when no admissible m_0 exists. This would falsify the power sum
/// theorem and is never expected on a valid instance.
class TheoremViolation : public std::runtime_error {
 public:
  explicit TheoremViolation(const PowerSumInstance& inst)
      : std::runtime_error("THEOREM-VIOLATION: no witness exponent for " + inst.describe()) {}
};

struct Witness {
  std::int64_t m0 = 0;
  double value = 0.0;      // Re s_{m0}
  double threshold = 0.0;  // eps/(48+5eps) |z_1|^{m0}
  double normalized_margin = 0.0;  // (value - threshold) / |z_1|^{m0}
};

/// Least m_0 in [1, (12+eps)M] with Re sum z_n^{m_0} >= eps/(48+5eps) |z_1|^{m_0}.
inline Witness power_sum_witness(const PowerSumInstance& inst) {
  const double lead = inst.leading_modulus();
  const double ratio = inst.threshold_ratio();
  const std::int64_t limit = inst.max_exponent();

  // Work with w_n = z_n / |z_1| so that |w_1| = 1 and nothing over/underflows.
  std::vector<std::complex<double>> base;
  base.reserve(inst.zs().size());
  for (const auto& z : inst.zs()) base.push_back(z / lead);
  std::vector<std::complex<double>> power = base;

  for (std::int64_t m = 1; m <= limit; ++m) {
    if (m > 1) {
      for (std::size_t i = 0; i < power.size(); ++i) power[i] *= base[i];
    }
    double re = 0.0;
    for (const auto& p : power) re += p.real();
    if (re >= ratio) {
      const double scale = std::pow(lead, static_cast<double>(m));
      return Witness{m, re * scale, ratio * scale, re - ratio};
    }
  }
  throw TheoremViolation(inst);
}

/// Random instance: N uniform in [1, max_n], moduli uniform in [0, 1] sorted
/// descending with the largest rescaled to 1, phases uniform in [0, 2 pi).
inline PowerSumInstance random_instance(std::mt19937_64& rng, int max_n, double epsilon) {
  std::uniform_int_distribution<int> count(1, max_n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  const int n = count(rng);
  std::vector<double> mods(static_cast<std::size_t>(n));
  for (auto& m : mods) m = unit(rng);
  std::sort(mods.begin(), mods.end(), std::greater<>());
  if (mods.front() == 0.0) mods.front() = 1.0;
  const double top = mods.front();
  std::vector<std::complex<double>> zs;
  zs.reserve(mods.size());
  for (double m : mods) zs.push_back(std::polar(m / top, phase(rng)));
  return PowerSumInstance(std::move(zs), epsilon);
}

struct SuiteResult {
  std::int64_t trials = 0;
  std::int64_t violations = 0;
  std::int64_t max_m0 = 0;
  double max_m0_fraction = 0.0;  // m0 / floor((12 + eps) M)
  double min_normalized_margin = std::numeric_limits<double>::infinity();
  std::string first_violation;
};

/// Witness search over `trials` seeded random instances.
inline SuiteResult run_suite(std::int64_t trials, std::uint64_t seed, double epsilon, int max_n = 50) {
  if (trials < 1) throw std::invalid_argument("run_suite: trials must be positive");
  if (max_n < 1) throw std::invalid_argument("run_suite: max_n must be positive");
  std::mt19937_64 rng(seed);
  SuiteResult out;
  for (std::int64_t i = 0; i < trials; ++i) {
    const auto inst = random_instance(rng, max_n, epsilon);
    ++out.trials;
    try {
      const Witness w = power_sum_witness(inst);
      out.max_m0 = std::max(out.max_m0, w.m0);
      out.max_m0_fraction = std::max(out.max_m0_fraction, static_cast<double>(w.m0) / inst.max_exponent());
      out.min_normalized_margin = std::min(out.min_normalized_margin, w.normalized_margin);
    } catch (const TheoremViolation& e) {
      if (out.violations++ == 0) out.first_violation = e.what();
    }
  }
  return out;
}

struct KernelSweep {
  std::int64_t samples = 0;
  double min_value = std::numeric_limits<double>::infinity();  // vs -1/2
  double worst_small_r = -std::numeric_limits<double>::infinity();  // max |P| - 1.5 r over r <= 1/3
  double worst_peak = 0.0;  // max |P(1, 0) - J/2|
};

/// Random (r, theta, J) samples of the kernel bounds.
inline KernelSweep sweep_kernel(std::int64_t samples, std::uint64_t seed, int max_terms = 60) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ur(0.0, 1.0);
  std::uniform_real_distribution<double> ut(-std::numbers::pi, std::numbers::pi);
  std::uniform_int_distribution<int> uj(1, max_terms);
  KernelSweep out;
  for (std::int64_t i = 0; i < samples; ++i) {
    const double r = ur(rng);
    const double theta = ut(rng);
    const int J = uj(rng);
    const double p = kernel_p(r, theta, J);
    out.min_value = std::min(out.min_value, p);
    const double small = r / 3.0;
    out.worst_small_r = std::max(out.worst_small_r, std::abs(kernel_p(small, theta, J)) - 1.5 * small);
    out.worst_peak = std::max(out.worst_peak, std::abs(kernel_p(1.0, 0.0, J) - J / 2.0));
    ++out.samples;
  }
  return out;
}

}  // namespace chebcert::powersum

#endif  // CHEBCERT_POWERSUM_HPP
