#ifndef CHEBCERT_REPORT_HPP
#define CHEBCERT_REPORT_HPP

// JSON / CSV / text rendering of results. Numbers are rounded to 12
// significant digits so reports diff cleanly.

#include <chebcert/certifier.hpp>
#include <chebcert/chebsearch.hpp>
#include <chebcert/check.hpp>
#include <chebcert/repulsion.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

namespace chebcert::report {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

inline json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

inline std::string text_num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline json to_json(const Check& c) {
  return json{{"description", c.description}, {"lhs", num(c.lhs)}, {"rhs", num(c.rhs)},
              {"margin", num(c.margin)},       {"pass", c.pass}};
}

inline json to_json(const repulsion::DhRow& r) {
  return json{{"variant", std::string(repulsion::to_string(r.variant))},
              {"T", num(r.T)},
              {"alpha", num(r.alpha)},
              {"alpha_optimized", r.optimized_alpha},
              {"K", num(r.K)},
              {"24K", num(24.0 * r.K)},
              {"C", num(r.C)},
              {"margin", num(r.margin)},
              {"pass", r.pass}};
}

inline json to_json(const repulsion::RepulsionBound& b) {
  return json{{"variant", std::string(repulsion::to_string(b.variant))},
              {"T", num(b.T)},
              {"alpha", num(b.alpha)},
              {"K", num(b.K)},
              {"24K", num(24.0 * b.K)},
              {"C", num(b.C)},
              {"correction", num(b.correction)}};
}

inline json to_json(const certifier::CaseCertificate& cert) {
  json params = json::object();
  for (const auto& [k, v] : cert.params) params[k] = num(v);
  json ladder = json::array();
  for (const auto& r : cert.ladder) ladder.push_back(json{{"T", num(r.T)}, {"C", num(r.C)}});
  json checks = json::array();
  for (const auto& c : cert.checks) checks.push_back(to_json(c));
  return json{{"case_name", cert.case_name}, {"params", params}, {"ladder", ladder},
              {"checks", checks},            {"overall", cert.overall()}};
}

inline json to_json(const chebsearch::SearchRecord& r) {
  json out{{"kind", chebsearch::to_string(r.field.kind)},
           {"param", r.field.param},
           {"class", r.class_label},
           {"dL", r.field.dL}};
  if (r.scan_limit_exceeded) {
    out["least_prime"] = nullptr;
    out["exponent_realized"] = nullptr;
  } else {
    out["least_prime"] = r.least_prime;
    out["exponent_realized"] = num(r.exponent_realized);
  }
  out["bound_pass"] = r.bound_pass;
  out["scan_limit_exceeded"] = r.scan_limit_exceeded;
  return out;
}

inline void write_csv(std::ostream& os, const std::vector<chebsearch::SearchRecord>& records) {
  os << "kind,param,class,dL,least_prime,exponent_realized,bound_pass\n";
  for (const auto& r : records) {
    os << chebsearch::to_string(r.field.kind) << ',' << r.field.param << ',' << r.class_label << ',' << r.field.dL
       << ',';
    if (r.scan_limit_exceeded) os << "SCAN-LIMIT-EXCEEDED,,";
    else os << r.least_prime << ',' << text_num(r.exponent_realized) << ',';
    os << (r.bound_pass ? "true" : "false") << '\n';
  }
}

/// One line per check; failures are flagged so they stand out.
inline void write_checks(std::ostream& os, const std::vector<Check>& checks, const std::string& indent = "  ") {
  for (const auto& c : checks) {
    os << indent << (c.pass ? "PASS " : "FAIL!") << "  " << c.description << "  [lhs=" << text_num(c.lhs)
       << " rhs=" << text_num(c.rhs) << " margin=" << text_num(c.margin) << "]\n";
  }
}

struct Report {
  std::string command;
  json params = json::object();
  json results = json::array();
  bool overall_pass = false;
  double wallclock_ms = 0.0;

  [[nodiscard]] json to_json(bool with_timing = true) const {
    json out{{"tool_version", kToolVersion},
             {"command", command},
             {"params", params},
             {"results", results},
             {"overall_pass", overall_pass}};
    if (with_timing) out["wallclock_ms"] = num(wallclock_ms);
    return out;
  }
};

}  // namespace chebcert::report

#endif  // CHEBCERT_REPORT_HPP
