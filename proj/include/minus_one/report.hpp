#ifndef MINUS_ONE_REPORT_HPP
#define MINUS_ONE_REPORT_HPP

// Verification results and their JSON form.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "minus_one/numerics.hpp"

namespace minus_one {

enum class Status { pass, fail, inconclusive };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

struct CheckResult {
  std::string id;     // family id or "src:dst"
  std::string check;  // what was verified
  Status status = Status::fail;
  double residual = 0;
  double tolerance = 0;
  std::string anchor;
  std::string notes;
};

// Residuals may fall below double range at high precision; keep the exponent.
inline double to_report(const Real& r) {
  double d = r.to_double();
  if (d == 0 && !r.is_zero()) return 1e-300;
  return d;
}

inline Status judge(const Real& residual, const Real& tolerance) {
  return residual <= tolerance ? Status::pass : Status::fail;
}

inline CheckResult make_result(std::string id, std::string check, const Real& residual, const Real& tolerance,
                               std::string anchor, std::string notes = "") {
  return CheckResult{std::move(id),         std::move(check),   judge(residual, tolerance), to_report(residual),
                     to_report(tolerance), std::move(anchor), std::move(notes)};
}

inline Status combine(const std::vector<CheckResult>& rs) {
  bool inconclusive = false;
  for (const auto& r : rs) {
    if (r.status == Status::fail) return Status::fail;
    if (r.status == Status::inconclusive) inconclusive = true;
  }
  return inconclusive ? Status::inconclusive : Status::pass;
}

// 0 pass, 1 any failure, 2 inconclusive without failures.
inline int exit_code(Status s) {
  switch (s) {
    case Status::pass: return 0;
    case Status::fail: return 1;
    case Status::inconclusive: return 2;
  }
  return 1;
}

inline nlohmann::json to_json(const CheckResult& r) {
  return {{"id", r.id},
          {"check", r.check},
          {"status", std::string(to_string(r.status))},
          {"residual", r.residual},
          {"tolerance", r.tolerance},
          {"anchor", r.anchor},
          {"notes", r.notes}};
}

inline nlohmann::json report_json(std::string_view command, nlohmann::json config, const std::vector<CheckResult>& rs) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : rs) results.push_back(to_json(r));
  return {{"command", std::string(command)}, {"config", std::move(config)}, {"results", std::move(results)}};
}

}  // namespace minus_one

#endif
