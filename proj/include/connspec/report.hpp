#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace connspec {

/// Outcome of an identity check, serialized as
/// {"check": name, "pass": bool, "violations": [...], "stats": {...}}.
struct CheckReport {
  std::string check;
  bool pass = true;
  nlohmann::json violations = nlohmann::json::array();
  nlohmann::json stats = nlohmann::json::object();

  void fail(nlohmann::json violation) {
    pass = false;
    violations.push_back(std::move(violation));
  }

  nlohmann::json to_json() const;
};

/// Folds several reports into one; passes iff all pass.
CheckReport combine(std::string name, const std::vector<CheckReport>& parts);

}  // namespace connspec
