#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mcm {

/// Outcome of one verification. A failed report always names a counterexample.
struct CheckReport {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;
  bool pass = true;
  std::optional<std::string> counterexample;
  double elapsed_ms = 0;
  /// Free-form observations (factorization types, tallies, case ids...).
  std::vector<std::pair<std::string, std::string>> details;

  CheckReport() = default;
  explicit CheckReport(std::string name) : check(std::move(name)) {}

  CheckReport& param(std::string key, std::string value);
  CheckReport& detail(std::string key, std::string value);
  /// Records a failure; the first counterexample wins.
  void fail(std::string why);
  /// Folds another report in: failures propagate, details are prefixed with its name.
  void absorb(const CheckReport& other);
};

/// Measures wall time into a report when it goes out of scope.
class ReportTimer {
 public:
  explicit ReportTimer(CheckReport& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  ~ReportTimer() {
    r_.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }
  ReportTimer(const ReportTimer&) = delete;
  ReportTimer& operator=(const ReportTimer&) = delete;

 private:
  CheckReport& r_;
  std::chrono::steady_clock::time_point start_;
};

/// Deliberate corruption of the expected side of an identity, used to show that a
/// check is able to fail.
enum class Perturb { none, rhs };

}  // namespace mcm
