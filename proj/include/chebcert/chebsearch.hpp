#ifndef CHEBCERT_CHEBSEARCH_HPP
#define CHEBCERT_CHEBSEARCH_HPP

// Least primes in Artin classes of abelian extensions of Q: quadratic fields
// (class = Kronecker symbol of the discriminant) and prime-conductor
// cyclotomic fields (class = residue mod q).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace chebcert::chebsearch {

inline constexpr std::uint64_t kDefaultScanCap = 1000000000ULL;

class ScanLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline constexpr std::uint32_t kSieveLimit = 1u << 20;

// Read-only after first use.
inline const std::vector<bool>& small_prime_table() {
  static const std::vector<bool> table = [] {
    std::vector<bool> t(kSieveLimit, true);
    t[0] = t[1] = false;
    for (std::uint32_t i = 2; i * i < kSieveLimit; ++i) {
      if (!t[i]) continue;
      for (std::uint32_t j = i * i; j < kSieveLimit; j += i) t[j] = false;
    }
    return t;
  }();
  return table;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Decimal string of base^exp.
inline std::string pow_decimal(std::uint64_t base, int exp) {
  std::vector<int> digits{1};  // little-endian
  for (int i = 0; i < exp; ++i) {
    std::uint64_t carry = 0;
    for (auto& d : digits) {
      const std::uint64_t v = static_cast<std::uint64_t>(d) * base + carry;
      d = static_cast<int>(v % 10);
      carry = v / 10;
    }
    while (carry) {
      digits.push_back(static_cast<int>(carry % 10));
      carry /= 10;
    }
  }
  std::string s;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) s.push_back(static_cast<char>('0' + *it));
  return s;
}

}  // namespace detail

/// Deterministic for all 64-bit n: sieve lookup below 2^20, otherwise strong
/// probable-prime tests to the first twelve prime bases.
inline bool is_prime(std::uint64_t n) {
  if (n < detail::kSieveLimit) return detail::small_prime_table()[n];
  if (n % 2 == 0) return false;
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = detail::pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Kronecker symbol (a | n), n != 0.
inline int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) throw std::invalid_argument("kronecker: requires n != 0");
  static constexpr int tab[8] = {0, 1, 0, -1, 0, -1, 0, 1};  // (2 | a) by a mod 8
  if (!(a & 1) && !(n & 1)) return 0;
  int v = 0;
  while (!(n & 1)) {
    n /= 2;
    ++v;
  }
  int k = (v % 2 == 0) ? 1 : tab[a & 7];
  if (n < 0) {
    n = -n;
    if (a < 0) k = -k;
  }
  // n odd and positive from here on
  while (true) {
    if (a == 0) return n == 1 ? k : 0;
    v = 0;
    while (!(a & 1)) {
      a /= 2;
      ++v;
    }
    if (v & 1) k *= tab[n & 7];
    if (a & n & 2) k = -k;
    const std::int64_t r = a < 0 ? -a : a;
    a = n % r;
    n = r;
  }
}

inline bool is_squarefree(std::int64_t d) {
  std::uint64_t m = d < 0 ? static_cast<std::uint64_t>(-d) : static_cast<std::uint64_t>(d);
  if (m == 0) return false;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return false;
    }
  }
  return true;
}

enum class FieldKind { quadratic, cyclotomic };

inline const char* to_string(FieldKind k) { return k == FieldKind::quadratic ? "quadratic" : "cyclotomic"; }

struct AbelianField {
  FieldKind kind = FieldKind::quadratic;
  std::int64_t param = 0;       // d for quadratic, q for cyclotomic
  std::int64_t discriminant = 0;  // fundamental discriminant (quadratic only)
  std::string dL;               // absolute discriminant, exact decimal
  double log_dl = 0.0;
  std::vector<std::string> classes;

  /// Divisibility p | d_L, without forming d_L.
  [[nodiscard]] bool ramified(std::uint64_t p) const {
    if (kind == FieldKind::cyclotomic) return p == static_cast<std::uint64_t>(param);
    const std::uint64_t abs_disc = static_cast<std::uint64_t>(discriminant < 0 ? -discriminant : discriminant);
    return abs_disc % p == 0;
  }
};

inline AbelianField quadratic_field(std::int64_t d) {
  if (d == 0 || d == 1 || !is_squarefree(d)) {
    throw std::invalid_argument("quadratic_field: d must be squarefree with d != 0, 1");
  }
  if (d > (std::int64_t{1} << 60) || d < -(std::int64_t{1} << 60)) {
    throw std::invalid_argument("quadratic_field: |d| too large");
  }
  AbelianField f;
  f.kind = FieldKind::quadratic;
  f.param = d;
  const std::int64_t r = ((d % 4) + 4) % 4;
  f.discriminant = r == 1 ? d : 4 * d;
  const std::int64_t abs_disc = f.discriminant < 0 ? -f.discriminant : f.discriminant;
  f.dL = std::to_string(abs_disc);
  f.log_dl = std::log(static_cast<double>(abs_disc));
  f.classes = {"+1", "-1"};
  return f;
}

inline AbelianField cyclotomic_field(std::int64_t q) {
  if (q < 3 || q % 2 == 0 || !is_prime(static_cast<std::uint64_t>(q))) {
    throw std::invalid_argument("cyclotomic_field: q must be an odd prime");
  }
  AbelianField f;
  f.kind = FieldKind::cyclotomic;
  f.param = q;
  f.dL = detail::pow_decimal(static_cast<std::uint64_t>(q), static_cast<int>(q - 2));
  f.log_dl = static_cast<double>(q - 2) * std::log(static_cast<double>(q));
  for (std::int64_t a = 1; a < q; ++a) f.classes.push_back(std::to_string(a));
  return f;
}

struct SearchRecord {
  AbelianField field;
  std::string class_label;
  std::uint64_t least_prime = 0;
  double exponent_realized = 0.0;  // log p / log d_L
  bool bound_pass = false;         // p <= d_L^40
  bool scan_limit_exceeded = false;
};

namespace detail {

inline SearchRecord make_record(const AbelianField& f, std::string label, std::uint64_t p) {
  SearchRecord r;
  r.field = f;
  r.class_label = std::move(label);
  r.least_prime = p;
  const double lp = std::log(static_cast<double>(p));
  r.exponent_realized = lp / f.log_dl;
  r.bound_pass = lp <= 40.0 * f.log_dl;
  return r;
}

}  // namespace detail

/// Least prime p not dividing d_L with (disc | p) = cls.
inline SearchRecord least_prime_quadratic(const AbelianField& f, int cls, std::uint64_t cap = kDefaultScanCap) {
  if (f.kind != FieldKind::quadratic) throw std::invalid_argument("least_prime_quadratic: not a quadratic field");
  if (cls != 1 && cls != -1) throw std::invalid_argument("least_prime_quadratic: class must be +1 or -1");
  for (std::uint64_t p = 2; p <= cap; p += (p == 2 ? 1 : 2)) {
    if (!is_prime(p) || f.ramified(p)) continue;
    if (kronecker(f.discriminant, static_cast<std::int64_t>(p)) == cls) {
      return detail::make_record(f, cls == 1 ? "+1" : "-1", p);
    }
  }
  throw ScanLimitExceeded("least_prime_quadratic: no prime <= " + std::to_string(cap) + " for d = " +
                          std::to_string(f.param) + ", class " + std::to_string(cls));
}

inline SearchRecord least_prime_quadratic(std::int64_t d, int cls, std::uint64_t cap = kDefaultScanCap) {
  return least_prime_quadratic(quadratic_field(d), cls, cap);
}

/// Least prime p = a (mod q).
inline SearchRecord least_prime_ap(const AbelianField& f, std::int64_t a, std::uint64_t cap = kDefaultScanCap) {
  if (f.kind != FieldKind::cyclotomic) throw std::invalid_argument("least_prime_ap: not a cyclotomic field");
  const std::int64_t q = f.param;
  if (a < 1 || a >= q) throw std::invalid_argument("least_prime_ap: requires 1 <= a < q");
  const auto uq = static_cast<std::uint64_t>(q);
  for (std::uint64_t p = static_cast<std::uint64_t>(a); p <= cap; p += uq) {
    if (is_prime(p)) return detail::make_record(f, std::to_string(a), p);
  }
  throw ScanLimitExceeded("least_prime_ap: no prime <= " + std::to_string(cap) + " congruent to " +
                          std::to_string(a) + " mod " + std::to_string(q));
}

inline SearchRecord least_prime_ap(std::int64_t q, std::int64_t a, std::uint64_t cap = kDefaultScanCap) {
  return least_prime_ap(cyclotomic_field(q), a, cap);
}

/// All records of one field; a scan-limit failure marks its record instead of
/// aborting.
inline std::vector<SearchRecord> field_records(const AbelianField& f, std::uint64_t cap = kDefaultScanCap) {
  std::vector<SearchRecord> out;
  for (const auto& label : f.classes) {
    try {
      if (f.kind == FieldKind::quadratic) out.push_back(least_prime_quadratic(f, std::stoi(label), cap));
      else out.push_back(least_prime_ap(f, std::stoll(label), cap));
    } catch (const ScanLimitExceeded&) {
      SearchRecord r;
      r.field = f;
      r.class_label = label;
      r.scan_limit_exceeded = true;
      out.push_back(std::move(r));
    }
  }
  return out;
}

struct Survey {
  std::vector<SearchRecord> records;  // exponent_realized descending
  double max_exponent = 0.0;
  std::size_t scan_failures = 0;
  std::size_t field_count = 0;
};

inline Survey survey(std::uint64_t max_disc, std::uint64_t cap = kDefaultScanCap) {
  if (max_disc < 5) throw std::invalid_argument("survey: requires max_disc >= 5");
  Survey s;
  const auto limit = static_cast<std::int64_t>(max_disc);
  const double log_limit = std::log(static_cast<double>(max_disc));

  // squarefree flags for |d| <= limit
  std::vector<bool> squarefree(static_cast<std::size_t>(limit) + 1, true);
  for (std::int64_t p = 2; p * p <= limit; ++p) {
    for (std::int64_t m = p * p; m <= limit; m += p * p) squarefree[static_cast<std::size_t>(m)] = false;
  }
  for (std::int64_t m = 1; m <= limit; ++m) {
    if (!squarefree[static_cast<std::size_t>(m)]) continue;
    for (std::int64_t d : {-m, m}) {
      if (d == 1) continue;
      const std::int64_t r = ((d % 4) + 4) % 4;
      const std::int64_t dl = r == 1 ? m : 4 * m;
      if (dl > limit) continue;
      ++s.field_count;
      for (auto& rec : field_records(quadratic_field(d), cap)) s.records.push_back(std::move(rec));
    }
  }
  for (std::int64_t q = 3;; q += 2) {
    if (!is_prime(static_cast<std::uint64_t>(q))) continue;
    const double log_dl = static_cast<double>(q - 2) * std::log(static_cast<double>(q));
    if (log_dl > log_limit + 1e-12) break;
    // exact comparison guards the floating decision at the boundary
    const auto field = cyclotomic_field(q);
    if (field.dL.size() > std::to_string(max_disc).size() ||
        (field.dL.size() == std::to_string(max_disc).size() && field.dL > std::to_string(max_disc))) {
      break;
    }
    ++s.field_count;
    for (auto& rec : field_records(field, cap)) s.records.push_back(std::move(rec));
  }

  std::stable_sort(s.records.begin(), s.records.end(), [](const SearchRecord& a, const SearchRecord& b) {
    if (a.exponent_realized != b.exponent_realized) return a.exponent_realized > b.exponent_realized;
    return std::make_tuple(static_cast<int>(a.field.kind), a.field.param, a.class_label) <
           std::make_tuple(static_cast<int>(b.field.kind), b.field.param, b.class_label);
  });
  for (const auto& r : s.records) {
    if (r.scan_limit_exceeded) ++s.scan_failures;
    else s.max_exponent = std::max(s.max_exponent, r.exponent_realized);
  }
  return s;
}

}  // namespace chebcert::chebsearch

#endif  // CHEBCERT_CHEBSEARCH_HPP
