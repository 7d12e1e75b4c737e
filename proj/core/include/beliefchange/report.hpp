#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace bc {

// Structured result of one CLI invocation. The JSON shape is stable:
// {"command", "inputs", "outputs", "timing_ms", "verdicts"}.
struct RunReport {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json outputs = nlohmann::json::object();
  double timing_ms = 0.0;
  std::vector<std::string> verdicts;

  nlohmann::json to_json() const;
  static RunReport from_json(const nlohmann::json& j);
};

}  // namespace bc
