#pragma once

#include <cstddef>

#include "slcomb/operator_expression.hpp"
#include "slcomb/pure_state.hpp"

namespace slcomb {

/// Result of a factored expectation evaluation with its bookkeeping.
struct ExpectationDetail {
  Complex value;
  /// sum over terms of |coefficient| * prod_c |B_c|; the scale against which
  /// cancellation in `value` is judged.
  double magnitude = 0.0;
  std::size_t terms = 0;
  std::size_t distinct_forms = 0;  ///< per-copy bilinear forms actually computed
  std::size_t form_lookups = 0;    ///< per-copy forms requested (terms x copies)
};

/// <<expr>> = sum_t c_t prod_c B_c with B_c = sum_{a,b} psi_a (F_c1 (x) ... (x) F_cp)_{ab} psi_b.
///
/// Bilinear in the amplitudes (no conjugation). Party operators are applied
/// axis by axis, never as a Kronecker product, and each distinct party tuple
/// is evaluated once per call. Throws ShapeMismatch if (d, p) differ.
ExpectationDetail antilinear_expectation_detail(const OperatorExpression& expr, const PureState& psi);

Complex antilinear_expectation(const OperatorExpression& expr, const PureState& psi);

/// psi^T (A_1 (x) ... (x) A_p) psi for a single copy.
Complex bilinear_form(std::span<const ComplexMatrix* const> party_ops, const PureState& psi);

}  // namespace slcomb
