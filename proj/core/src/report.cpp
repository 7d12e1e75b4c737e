#include "beliefchange/report.hpp"

#include "beliefchange/error.hpp"

namespace bc {

nlohmann::json RunReport::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["outputs"] = outputs;
  j["timing_ms"] = timing_ms;
  j["verdicts"] = verdicts;
  return j;
}

RunReport RunReport::from_json(const nlohmann::json& j) try {
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.outputs = j.at("outputs");
  r.timing_ms = j.at("timing_ms").get<double>();
  r.verdicts = j.at("verdicts").get<std::vector<std::string>>();
  return r;
} catch (const nlohmann::json::exception& e) {
  throw Error(ErrorKind::Input, std::string("malformed run report: ") + e.what());
}

}  // namespace bc
