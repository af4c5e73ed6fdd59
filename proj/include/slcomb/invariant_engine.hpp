#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "slcomb/expectation.hpp"
#include "slcomb/operator_expression.hpp"
#include "slcomb/pure_state.hpp"

namespace slcomb {

inline constexpr std::string_view kConventionNote =
    "bilinear convention <psi*|M|psi> = sum psi_a M_ab psi_b (no conjugation); values are "
    "convention-dependent up to an overall phase, |value| is convention-free";

inline constexpr std::string_view kEpsilonReadingNote =
    "the third epsilon factor of the qutrit three-tangle contraction is read as eps_{i2 j2 k2}";

/// Invariant value together with the scale used to judge cancellation.
struct InvariantValue {
  Complex value;
  /// Sum of the moduli of all contributions; 0 only for a vanishing input.
  double magnitude = 0.0;
  std::size_t terms = 0;
  std::size_t distinct_forms = 0;
  std::size_t form_lookups = 0;
};

/// A named polynomial invariant.
struct InvariantSpec {
  std::string name;
  int local_dim;
  std::size_t parties;
  int degree;
  std::size_t copies;  ///< copy slots of the contraction, 0 for a direct determinant
  Complex prefactor;
  std::string recipe;
  std::function<InvariantValue(const PureState&)> evaluate;
};

struct InvariantReport {
  std::string spec_name;
  Complex value;
  double abs_value = 0.0;
  int degree = 0;
  std::size_t terms = 0;
  std::size_t distinct_forms = 0;
  std::size_t form_lookups = 0;
  double cache_hit_rate = 0.0;
  double seconds = 0.0;
  bool zero_input = false;
  std::vector<std::string> notes;
};

/// Shared result shape of the randomized checks.
struct VerificationReport {
  std::string name;
  std::size_t trials = 0;
  double tolerance = 0.0;
  double max_deviation = 0.0;
  std::size_t worst_trial = 0;
  bool passed = false;
  std::vector<std::string> notes;
};

/// |a - b| / |b|, falling back to |a - b| / scale when |b| <= 1e-8 * scale.
double relative_deviation(Complex a, Complex b, double scale);

/// Determinant of the amplitude matrix of a two-party state.
Complex det_invariant(const PureState& psi);

/// Two-party lift of three spin-1 letters with the -1/48 prefactor included.
/// 3 copies, d = 3, 36 terms.
const OperatorExpression& t2_spin1_expression();
Complex t2_spin1(const PureState& psi);

/// Two-party lift of the spin-3/2 order-2 comb with the 1/24 prefactor included.
const OperatorExpression& det_spin32_expression();
Complex det_spin32_from_combs(const PureState& psi);

/// Qutrit three-tangle analogue, degree 12.
///
/// Evaluated through pair-contracted weights
///   W[i1 i2 l1 l2 i l] = sum_mu B(t_i1, t_i2, xi_il;mu) B(t_l1, t_l2, xi_il^mu)
/// and the sign-weighted sum over the six epsilon symbols.
InvariantValue t3_spin1_detail(const PureState& psi);
Complex t3_spin1(const PureState& psi);
/// The same contraction written as a 6-copy, 3-party expression (46656 * 64 terms).
OperatorExpression t3_spin1_expression();

/// Spin-3/2 three-tangle analogue, degree 8, prefactor 1/8.
InvariantValue t3_spin32_detail(const PureState& psi);
Complex t3_spin32(const PureState& psi);
/// The same contraction as a 4-copy, 3-party expression.
OperatorExpression t3_spin32_expression();

/// Names accepted by invariant_spec.
std::vector<std::string> invariant_names();

/// Spec for det, t2_spin1, det32_combs, t3_spin1, t3_spin32.
/// `det` takes its dimension from local_dim (2..6); the others have fixed
/// (d, p) and reject a conflicting nonzero local_dim with ShapeMismatch.
InvariantSpec invariant_spec(std::string_view name, int local_dim = 0);

/// Throws ShapeMismatch naming the expected (d, p) if psi does not fit.
void require_shape(const InvariantSpec& spec, const PureState& psi);

InvariantReport evaluate_invariant(const InvariantSpec& spec, const PureState& psi);

/// Max relative deviation between spec(psi) and spec((A_1 (x) ... (x) A_p) psi)
/// over random unit-determinant A_a with condition number <= cond_cap.
VerificationReport sl_invariance_check(const InvariantSpec& spec, const PureState& psi, std::size_t trials,
                                       double tol, std::uint64_t seed, double cond_cap = 50.0);

/// Same with local special unitaries.
VerificationReport su_invariance_check(const InvariantSpec& spec, const PureState& psi, std::size_t trials,
                                       double tol, std::uint64_t seed);

/// Per-class maxima of |spec| on random fully-product and bi-product states.
struct FilterReport {
  VerificationReport overall;
  double full_product = 0.0;
  double split_a = 0.0;  ///< party 1 | parties 2, 3
  double split_b = 0.0;  ///< party 2 | parties 1, 3
  double split_c = 0.0;  ///< party 3 | parties 1, 2
};

/// `trials` draws per class. Requires spec.parties == 3.
FilterReport product_state_filter_check(const InvariantSpec& spec, std::size_t trials, double tol,
                                        std::uint64_t seed);

/// Product state of a two-party state on `pair` and a one-party state on `single`,
/// with parties interleaved so that `single` sits at position `single_position`.
PureState bipartite_product(const PureState& pair, const PureState& single, std::size_t single_position);

/// spec(c psi) = c^degree spec(psi) for random complex c.
VerificationReport homogeneity_check(const InvariantSpec& spec, std::size_t trials, double tol, std::uint64_t seed);

/// Equality surrogate: expectations agree on a fixed panel of 64 pseudo-random states.
bool value_equal(const OperatorExpression& a, const OperatorExpression& b, double tol = 1e-10);

}  // namespace slcomb
