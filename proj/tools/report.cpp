#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace slcomb::app {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Warn: return "WARN";
  }
  return "?";
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Reference: return "reference";
    case Provenance::Property: return "property";
    case Provenance::Oracle: return "oracle";
    case Provenance::Regression: return "regression";
  }
  return "?";
}

Check compare_check(std::string name, Provenance prov, double target, double computed, double tolerance,
                    std::string detail) {
  const bool ok = std::abs(computed - target) <= tolerance;
  return {std::move(name), prov, target, computed, tolerance, ok ? Status::Pass : Status::Fail, std::move(detail)};
}

Check bound_check(std::string name, Provenance prov, double computed, double bound, std::string detail) {
  const bool ok = computed < bound;
  return {std::move(name), prov, 0.0, computed, bound, ok ? Status::Pass : Status::Fail, std::move(detail)};
}

Check advisory_check(std::string name, Provenance prov, double target, double computed, double tolerance,
                     std::string detail) {
  Check c = compare_check(std::move(name), prov, target, computed, tolerance, std::move(detail));
  if (c.status == Status::Fail) c.status = Status::Warn;
  return c;
}

void RunReport::finalize() {
  std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
}

bool RunReport::any_failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Fail; });
}

int RunReport::exit_code() const { return any_failed() ? 1 : 0; }

nlohmann::ordered_json RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["seed"] = seed;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  std::size_t pass = 0, fail = 0, warn = 0;
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["provenance"] = to_string(c.provenance);
    e["target"] = c.target;
    e["computed"] = c.computed;
    e["tolerance"] = c.tolerance;
    e["status"] = to_string(c.status);
    if (!c.detail.empty()) e["detail"] = c.detail;
    arr.push_back(std::move(e));
    if (c.status == Status::Pass) ++pass;
    if (c.status == Status::Fail) ++fail;
    if (c.status == Status::Warn) ++warn;
  }
  j["checks"] = std::move(arr);
  if (invariant) j["invariant"] = *invariant;
  j["summary"] = {{"pass", pass}, {"fail", fail}, {"warn", warn}, {"ok", fail == 0}};
  if (wall_time) j["wall_time_s"] = *wall_time;
  return j;
}

std::string RunReport::to_text() const {
  std::ostringstream out;
  out << "slcomb " << command << "  (seed " << seed << ")\n";
  if (invariant) {
    const auto& inv = *invariant;
    out << "invariant " << inv.value("name", "") << ": value = " << fmt(inv["value"]["re"].get<double>()) << " + "
        << fmt(inv["value"]["im"].get<double>()) << "i, |value| = " << fmt(inv["abs"].get<double>())
        << ", degree " << inv["degree"].get<int>() << "\n";
    for (const auto& n : inv["notes"]) out << "  note: " << n.get<std::string>() << "\n";
  }
  std::size_t pass = 0, fail = 0, warn = 0;
  for (const auto& c : checks) {
    out << to_string(c.status) << "  " << c.name << "  computed=" << fmt(c.computed) << " target=" << fmt(c.target)
        << " tol=" << fmt(c.tolerance) << "  [" << to_string(c.provenance) << "]";
    if (!c.detail.empty()) out << "  " << c.detail;
    out << "\n";
    if (c.status == Status::Pass) ++pass;
    if (c.status == Status::Fail) ++fail;
    if (c.status == Status::Warn) ++warn;
  }
  out << "summary: " << pass << " pass, " << fail << " fail, " << warn << " warn\n";
  if (wall_time) out << "wall time: " << fmt(*wall_time) << " s\n";
  return out.str();
}

}  // namespace slcomb::app
