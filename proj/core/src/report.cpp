#include "mcm/report.hpp"

namespace mcm {

CheckReport& CheckReport::param(std::string key, std::string value) {
  params.emplace_back(std::move(key), std::move(value));
  return *this;
}

CheckReport& CheckReport::detail(std::string key, std::string value) {
  details.emplace_back(std::move(key), std::move(value));
  return *this;
}

void CheckReport::fail(std::string why) {
  if (pass) {
    pass = false;
    counterexample = std::move(why);
  }
}

void CheckReport::absorb(const CheckReport& other) {
  if (!other.pass) fail(other.check + ": " + other.counterexample.value_or("failed"));
  for (const auto& [k, v] : other.details) details.emplace_back(other.check + "." + k, v);
}

}  // namespace mcm
