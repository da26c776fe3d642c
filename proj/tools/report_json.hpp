#pragma once

#include <json.hpp>

#include "mcm/report.hpp"

namespace mcm::cli {

/// {check, n, params, pass, elapsed_ms, counterexample?, details}. `n` is the integer value
/// of the "n" parameter, or null when the check has none.
nlohmann::ordered_json to_json(const CheckReport& r, bool timing = true);
CheckReport report_from_json(const nlohmann::ordered_json& j);

}  // namespace mcm::cli
