#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slcomb/operator_expression.hpp"

#include "report.hpp"

namespace slcomb::app {

struct VerifyOptions {
  std::string spin = "all";  ///< "1/2", "1", "3/2" or "all"
  std::size_t trials = 500;
  double tol = 1e-10;
  std::uint64_t seed = 0;
};

/// Runs the identity checks of one spin sector (or all of them).
/// Throws std::invalid_argument for an unknown sector.
RunReport run_verify(const VerifyOptions& opt);

struct InvariantOptions {
  std::string spec_name;
  std::string state_path;
  bool check_sl = false;
  std::size_t trials = 100;
  double tol = 1e-8;
  std::uint64_t seed = 0;
};

/// Evaluates a named invariant on a state file. Throws StateFileError,
/// ShapeMismatch or std::invalid_argument on bad input.
RunReport run_invariant(const InvariantOptions& opt);

struct NamedExpression {
  std::string name;
  OperatorExpression expr;
};

/// Every fixed expression whose dense form fits kMaxDenseDim, plus one random
/// multi-party expression.
std::vector<NamedExpression> oracle_panel();

struct SelfcheckOptions {
  std::size_t trials = 50;
  std::uint64_t seed = 0;
  std::optional<std::string> state_path;
};

/// Engine-vs-oracle equivalence, homogeneity and determinism checks.
RunReport run_selfcheck(const SelfcheckOptions& opt);

}  // namespace slcomb::app
