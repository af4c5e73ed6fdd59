#include "state_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "slcomb/errors.hpp"

namespace slcomb::app {

PureState parse_state(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw StateFileError(std::string("state file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw StateFileError("state file: top level must be an object");
  for (const char* key : {"local_dim", "parties", "amplitudes"})
    if (!j.contains(key)) throw StateFileError(std::string("state file: missing field '") + key + "'");
  if (!j["local_dim"].is_number_integer() || !j["parties"].is_number_integer())
    throw StateFileError("state file: local_dim and parties must be integers");

  const long long d = j["local_dim"].get<long long>();
  const long long p = j["parties"].get<long long>();
  if (d < 2 || d > 16) throw StateFileError("state file: local_dim must lie in 2..16");
  if (p < 1 || p > 8) throw StateFileError("state file: parties must lie in 1..8");

  std::size_t expected = 1;
  for (long long k = 0; k < p; ++k) expected *= static_cast<std::size_t>(d);

  const auto& amps = j["amplitudes"];
  if (!amps.is_array()) throw StateFileError("state file: amplitudes must be an array of [re, im] pairs");
  if (amps.size() != expected)
    throw StateFileError("state file: shape mismatch, " + std::to_string(amps.size()) +
                         " amplitudes for local_dim=" + std::to_string(d) + ", parties=" + std::to_string(p) +
                         " (expected " + std::to_string(expected) + ")");

  std::vector<Complex> values;
  values.reserve(expected);
  for (std::size_t k = 0; k < amps.size(); ++k) {
    const auto& a = amps[k];
    if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number())
      throw StateFileError("state file: amplitude " + std::to_string(k) + " is not a [re, im] pair");
    const double re = a[0].get<double>(), im = a[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw StateFileError("state file: amplitude " + std::to_string(k) + " is not finite");
    values.emplace_back(re, im);
  }
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw StateFileError("state file: label must be a string");
    label = j["label"].get<std::string>();
  }
  return PureState(static_cast<int>(d), static_cast<std::size_t>(p), std::move(values), std::move(label));
}

PureState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StateFileError("cannot read state file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state(buf.str());
}

std::string state_to_json(const PureState& psi) {
  nlohmann::ordered_json j;
  j["local_dim"] = psi.local_dim();
  j["parties"] = psi.parties();
  nlohmann::ordered_json amps = nlohmann::ordered_json::array();
  for (const auto& z : psi.amplitudes()) amps.push_back({z.real(), z.imag()});
  j["amplitudes"] = std::move(amps);
  if (!psi.label().empty()) j["label"] = psi.label();
  return j.dump(2) + "\n";
}

}  // namespace slcomb::app
