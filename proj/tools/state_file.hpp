#pragma once

#include <stdexcept>
#include <string>

#include "slcomb/pure_state.hpp"

namespace slcomb::app {

/// Unreadable or malformed state file.
class StateFileError : public std::runtime_error {
 public:
  explicit StateFileError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses {"local_dim": d, "parties": p, "amplitudes": [[re, im], ...], "label": "..."}.
/// Amplitudes are row-major with party 1 slowest; the count must be d^p and
/// every number finite.
PureState parse_state(const std::string& text);
PureState load_state_file(const std::string& path);

std::string state_to_json(const PureState& psi);

}  // namespace slcomb::app
