#ifndef CNSS_REPORT_HPP
#define CNSS_REPORT_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cnss/common.hpp"

namespace cnss {

enum class AssertionStatus { Pass, Fail, NotApplicable };

inline const char* to_string(AssertionStatus s) {
  switch (s) {
    case AssertionStatus::Pass: return "pass";
    case AssertionStatus::Fail: return "fail";
    default: return "not-applicable";
  }
}

inline AssertionStatus assertion_status_from_string(const std::string& s) {
  if (s == "pass") return AssertionStatus::Pass;
  if (s == "fail") return AssertionStatus::Fail;
  if (s == "not-applicable") return AssertionStatus::NotApplicable;
  throw Error("unknown assertion status '" + s + "'");
}

struct Assertion {
  std::string claim;
  AssertionStatus status = AssertionStatus::Pass;

  friend bool operator==(const Assertion& a, const Assertion& b) {
    return a.claim == b.claim && a.status == b.status;
  }
};

/// The uniform output of every CLI command: inputs echoed back, an
/// operation-specific result payload, theorem assertions, and an optional
/// certificate (witness point, coefficient, subset, ...).
struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  std::vector<Assertion> assertions;
  std::optional<nlohmann::json> certificate;

  void add_assertion(const std::string& claim, bool pass) {
    assertions.push_back({claim, pass ? AssertionStatus::Pass : AssertionStatus::Fail});
  }
  void add_not_applicable(const std::string& claim) {
    assertions.push_back({claim, AssertionStatus::NotApplicable});
  }

  bool all_passed() const {
    for (const Assertion& a : assertions) {
      if (a.status == AssertionStatus::Fail) return false;
    }
    return true;
  }

  /// JSON form with stable (sorted) keys.
  nlohmann::json to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["result"] = result;
    j["assertions"] = nlohmann::json::array();
    for (const Assertion& a : assertions) {
      j["assertions"].push_back({{"claim", a.claim}, {"status", to_string(a.status)}});
    }
    if (certificate) j["certificate"] = *certificate;
    return j;
  }

  static Report from_json(const nlohmann::json& j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.result = j.at("result");
    for (const auto& a : j.at("assertions")) {
      r.assertions.push_back(
          {a.at("claim").get<std::string>(),
           assertion_status_from_string(a.at("status").get<std::string>())});
    }
    if (j.contains("certificate")) r.certificate = j.at("certificate");
    return r;
  }

  friend bool operator==(const Report& a, const Report& b) {
    return a.to_json() == b.to_json();
  }
};

namespace detail {

inline std::string render_json_value(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace detail

/// Deterministic serialization: JSON (sorted keys, 2-space indent) or a plain
/// text rendering with one line per input/result entry and per assertion.
inline void emit_report(const Report& r, bool json, std::ostream& out) {
  if (json) {
    out << r.to_json().dump(2) << '\n';
    return;
  }
  out << "command: " << r.command << '\n';
  if (!r.inputs.empty()) {
    out << "inputs:\n";
    for (const auto& [key, value] : r.inputs.items()) {
      out << "  " << key << ": " << detail::render_json_value(value) << '\n';
    }
  }
  if (!r.result.empty()) {
    out << "result:\n";
    for (const auto& [key, value] : r.result.items()) {
      out << "  " << key << ": " << detail::render_json_value(value) << '\n';
    }
  }
  if (!r.assertions.empty()) {
    out << "assertions:\n";
    for (const Assertion& a : r.assertions) {
      out << "  [" << to_string(a.status) << "] " << a.claim << '\n';
    }
  }
  if (r.certificate) {
    out << "certificate: " << r.certificate->dump() << '\n';
  }
}

}  // namespace cnss

#endif  // CNSS_REPORT_HPP
