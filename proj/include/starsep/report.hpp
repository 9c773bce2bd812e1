#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace starsep {

/// Outcome of one verification check. The serialized form is deterministic:
/// keys sorted, exact rationals as "p/q" strings, and no timing field (wall
/// times live only in console output so reports are byte-identical across
/// runs).
struct Report {
  std::string check;
  std::string mode;  // "trunc", "exact" or "numeric"
  std::map<std::string, std::string> params;
  bool pass = false;
  std::string witness;  // first failing coefficient or max residual
  double seconds = 0;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["check"] = check;
    j["mode"] = mode;
    j["params"] = params;
    j["status"] = pass ? "pass" : "fail";
    j["witness"] = witness;
    return j;
  }
};

struct SuiteResult {
  std::string suite;
  std::vector<Report> checks;

  bool pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["status"] = pass() ? "pass" : "fail";
    nlohmann::json arr = nlohmann::json::array();
    for (auto& c : checks) arr.push_back(c.to_json());
    j["checks"] = arr;
    return j;
  }
};

}  // namespace starsep
