#ifndef CHEBCERT_CHECK_HPP
#define CHEBCERT_CHECK_HPP

#include <cmath>
#include <string>
#include <utility>

namespace chebcert {

/// One verified inequality: `lhs REL rhs`, with a signed margin that is
/// positive exactly when the relation holds with room to spare.
struct Check {
  std::string description;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool pass = false;
};

inline Check check_less(std::string description, double lhs, double rhs) {
  const double margin = rhs - lhs;
  return Check{std::move(description), lhs, rhs, margin, margin > 0.0};
}

inline Check check_less_equal(std::string description, double lhs, double rhs) {
  const double margin = rhs - lhs;
  return Check{std::move(description), lhs, rhs, margin, margin >= 0.0};
}

inline Check check_greater(std::string description, double lhs, double rhs) {
  const double margin = lhs - rhs;
  return Check{std::move(description), lhs, rhs, margin, margin > 0.0};
}

inline Check check_greater_equal(std::string description, double lhs, double rhs) {
  const double margin = lhs - rhs;
  return Check{std::move(description), lhs, rhs, margin, margin >= 0.0};
}

// margin = tol - |lhs - rhs|
inline Check check_close(std::string description, double lhs, double rhs, double tol) {
  const double margin = tol - std::abs(lhs - rhs);
  return Check{std::move(description), lhs, rhs, margin, margin >= 0.0};
}

}  // namespace chebcert

#endif  // CHEBCERT_CHECK_HPP
