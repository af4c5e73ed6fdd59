#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "slcomb/complex_matrix.hpp"
#include "slcomb/operator_expression.hpp"
#include "slcomb/tensor_algebra.hpp"

namespace slcomb {

/// A single-party operator expression on `order` copies that satisfies the
/// comb condition: its antilinear expectation vanishes on every state.
struct Comb {
  int local_dim;
  std::size_t order;
  OperatorExpression expression;
  std::string label;
};

/// (-1)^min(i, 7-i) for i = 1..6.
int alternating_sign(int i);

/// Antisymmetric generators used as comb letters.
/// d = 3: (l2, l5, l7). d = 4: l_{2i} for i = 1..6. Zero-based in the returned vector.
std::vector<ComplexMatrix> comb_letters(int d);

/// Qubit combs: order 1 = sigma_y; order 2 = sum_mu g_mu sigma_mu . sigma_mu with
/// g = (-1, 1, 0, 1); order 3 = eps_ijk t_i . t_j . t_k with t = (sigma_0, sigma_x, sigma_z).
Comb comb_qubit(int order);

/// i eps_ijk t_i . t_j . t_k with t = (l2, l5, l7).
Comb comb_spin1_order3();

/// -eps_ijk eps_lmn O_il . O_jm . O_kn; O_xy occupies copy slots (c, c+3).
Comb comb_spin1_order6();

/// sum_i s_i t_i . t_{7-i}.
Comb comb_spin32_order2();

/// sum_ij s_i s_j O_ij . O_{7-i,7-j}; O_ij on slots (0, 2), O_{7-i,7-j} on (1, 3).
Comb comb_spin32_order4();

/// a on the first copies, b on the last ones.
Comb circ_product(const Comb& a, const Comb& b);

/// The operators O_ij = (t_i (x) t_j) P_d with their Schmidt pairs.
struct OFamily {
  int local_dim;
  std::size_t range;  ///< 3 for d = 3, 6 for d = 4
  std::vector<ComplexMatrix> operators;
  std::vector<std::vector<SchmidtPair>> schmidt_pairs;

  /// Zero-based (i, j).
  const ComplexMatrix& at(std::size_t i, std::size_t j) const { return operators.at(i * range + j); }
  const std::vector<SchmidtPair>& pairs(std::size_t i, std::size_t j) const { return schmidt_pairs.at(i * range + j); }
};

/// Built once per dimension and cached. Throws UnsupportedDimension unless d in {3, 4}.
const OFamily& o_family(int d);

/// tr(A B) of the two copy-space operators (factored).
Complex comb_trace_pairing(const Comb& a, const Comb& b);

/// tr(A B) / tr(B B); throws DegeneratePivot if |tr(B B)| <= pivot_tol.
Complex orthogonalization_coefficient(const Comb& a, const Comb& b, double pivot_tol = 1e-14);

/// A - coefficient * B.
Comb orthogonalize(const Comb& a, const Comb& b, double pivot_tol = 1e-14);

/// P_left A P_right with copy permutation operators. The twisted operator is
/// re-expressed in matrix units from its dense form (dimension d^n <= 4096).
Comb sn_twist(const Comb& a, std::span<const std::size_t> left, std::span<const std::size_t> right);

struct CombVerification {
  std::string label;
  std::size_t trials = 0;
  double tolerance = 0.0;
  double max_abs_value = 0.0;
  std::size_t worst_trial = 0;
  bool passed = false;
};

/// Evaluates the order-n expectation on `trials` Haar-random single-qudit
/// states; trial k draws from RngStream(seed).split(k).
CombVerification verify_comb(const Comb& a, std::size_t trials, double tol, std::uint64_t seed);

/// Entry where a tabulated O_ij decomposition differs from the computed product.
struct TabulationEntry {
  std::size_t i;  ///< one-based
  std::size_t j;  ///< one-based
  double max_abs_diff;
};

/// Tabulated generator-expansion forms of O_ij, where available.
/// d = 3: all nine entries. d = 4: entries with i <= j. Indices one-based.
/// Returns false if no tabulated form exists.
bool tabulated_o_operator(int d, std::size_t i, std::size_t j, ComplexMatrix& out);

/// Compares every tabulated O_ij with o_family(d); returns one entry per tabulated operator.
std::vector<TabulationEntry> compare_with_tabulation(int d);

}  // namespace slcomb
