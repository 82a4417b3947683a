// Structured check reports for the command-line front end: one report per
// invocation, machine-parsable, deterministic given the inputs (timing is
// kept out of the report body).
#pragma once

#include <nlohmann/json.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace qweyl {

struct Check {
  std::string name;
  bool pass = true;
  bool informational = false; // value lines, not pass/fail gates
  std::string value;          // witness or result, Scalar-grammar strings
};

struct Report {
  std::string command;
  std::vector<Check> checks;

  Check& add(std::string name, bool pass, std::string value = "") {
    checks.push_back({std::move(name), pass, false, std::move(value)});
    return checks.back();
  }
  Check& info(std::string name, std::string value) {
    checks.push_back({std::move(name), true, true, std::move(value)});
    return checks.back();
  }
  bool all_pass() const {
    for (auto& c : checks)
      if (!c.informational && !c.pass) return false;
    return true;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    auto arr = nlohmann::ordered_json::array();
    for (auto& c : checks) {
      nlohmann::ordered_json e;
      e["name"] = c.name;
      if (!c.informational) e["pass"] = c.pass;
      if (!c.value.empty()) e["value"] = c.value;
      arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    j["pass"] = all_pass();
    return j;
  }

  void print_text(std::ostream& os) const {
    os << "# " << command << "\n";
    for (auto& c : checks) {
      if (c.informational)
        os << "  " << c.name << ": " << c.value << "\n";
      else
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name
           << (c.value.empty() ? "" : " : " + c.value) << "\n";
    }
    os << (all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
  }

  void emit(std::ostream& os, const std::string& format) const {
    if (format == "structured")
      os << to_json().dump(2) << "\n";
    else
      print_text(os);
  }
};

} // namespace qweyl
