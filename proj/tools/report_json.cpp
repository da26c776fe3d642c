#include "report_json.hpp"

namespace mcm::cli {

nlohmann::ordered_json to_json(const CheckReport& r, bool timing) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["n"] = nullptr;
  auto params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) {
    params[k] = v;
    if (k == "n") j["n"] = std::stoi(v);
  }
  j["params"] = params;
  j["pass"] = r.pass;
  j["elapsed_ms"] = timing ? r.elapsed_ms : 0.0;
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  auto details = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.details) details[k] = v;
  j["details"] = details;
  return j;
}

CheckReport report_from_json(const nlohmann::ordered_json& j) {
  CheckReport r(j.at("check").get<std::string>());
  for (const auto& [k, v] : j.at("params").items()) r.param(k, v.get<std::string>());
  r.pass = j.at("pass").get<bool>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  if (j.contains("counterexample")) r.counterexample = j.at("counterexample").get<std::string>();
  if (j.contains("details")) {
    for (const auto& [k, v] : j.at("details").items()) r.detail(k, v.get<std::string>());
  }
  return r;
}

}  // namespace mcm::cli
