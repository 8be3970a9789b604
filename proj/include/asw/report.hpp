#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "asw/catalog.hpp"
#include "asw/tower.hpp"

namespace asw {

struct CheckResult {
  std::string name;
  std::string ref;  // the identity being checked, in plain notation
  bool pass = false;
};

/// Structured outcome of one verification run. Failures are data, not
/// exceptions; the report is the single source for exit codes and JSON.
struct VerificationReport {
  GroupParams params;
  std::optional<std::string> label;
  TowerPtr tower;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;
  std::uint64_t closure_order = 0;
  std::int64_t elapsed_ms = 0;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  void add(std::string name, std::string ref, bool pass) {
    checks.push_back({std::move(name), std::move(ref), pass});
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  Json to_json() const {
    Json jparams = params.to_json();
    if (label) jparams["label"] = *label;
    Json jchecks = Json::array();
    for (const auto& c : checks) {
      jchecks.push_back(Json{{"name", c.name}, {"paper_ref", c.ref}, {"pass", c.pass}});
    }
    Json j;
    j["params"] = jparams;
    j["p"] = params.p.value();
    j["tower"] = tower ? tower->to_json() : Json(nullptr);
    j["checks"] = jchecks;
    j["closure_order"] = closure_order;
    j["elapsed_ms"] = elapsed_ms;
    j["notes"] = notes;
    j["pass"] = all_pass();
    return j;
  }

  std::string text() const {
    std::string out;
    out += "group " + (label ? *label : params.str()) + "  [p=" + std::to_string(params.p.value()) +
           ", " + params.str() + "]\n";
    for (const auto& c : checks) {
      out += std::string(c.pass ? "  pass  " : "  FAIL  ") + c.name + "  (" + c.ref + ")\n";
    }
    for (const auto& n : notes) out += "  note: " + n + "\n";
    out += "  closure order: " + std::to_string(closure_order) + "\n";
    out += std::string("  overall: ") + (all_pass() ? "pass" : "FAIL") + " (" +
           std::to_string(elapsed_ms) + " ms)\n";
    return out;
  }
};

}  // namespace asw
