#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace slcomb::app {

enum class Status { Pass, Fail, Warn };

std::string to_string(Status s);

/// Where a check's target value comes from.
enum class Provenance { Reference, Property, Oracle, Regression };

std::string to_string(Provenance p);

struct Check {
  std::string name;
  Provenance provenance;
  double target;
  double computed;
  double tolerance;
  Status status;
  std::string detail;
};

/// |computed - target| <= tolerance.
Check compare_check(std::string name, Provenance prov, double target, double computed, double tolerance,
                    std::string detail = {});
/// computed < bound (target reported as 0).
Check bound_check(std::string name, Provenance prov, double computed, double bound, std::string detail = {});
/// PASS if computed is within tolerance of target, WARN otherwise.
Check advisory_check(std::string name, Provenance prov, double target, double computed, double tolerance,
                     std::string detail = {});

inline constexpr const char* kSchema = "slcomb.report/1";

struct RunReport {
  std::string command;
  unsigned long long seed = 0;
  std::vector<Check> checks;
  std::optional<nlohmann::ordered_json> invariant;
  std::optional<double> wall_time;

  /// Sorts checks by name (canonical order).
  void finalize();
  bool any_failed() const;
  /// 0 if no check failed, 1 otherwise.
  int exit_code() const;

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

}  // namespace slcomb::app
