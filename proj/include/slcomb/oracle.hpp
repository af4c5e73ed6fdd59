#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "slcomb/complex_matrix.hpp"
#include "slcomb/operator_expression.hpp"
#include "slcomb/pure_state.hpp"

namespace slcomb {

/// Reproducible random stream.
///
/// Raw bits come from std::mt19937_64, whose output sequence is fixed by the
/// C++ standard. Uniforms take the top 53 bits; normals use Box-Muller.
class RngStream {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64/u53/box-muller/splitmix64-split";

  explicit RngStream(std::uint64_t seed);

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  /// Standard normal.
  double normal();
  /// Standard complex Gaussian, E|z|^2 = 1.
  Complex complex_normal();

  /// Independent child stream; depends only on (seed, index).
  RngStream split(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Uniformly random permutation of 0..n-1 (Fisher-Yates).
std::vector<std::size_t> random_permutation(std::size_t n, RngStream& rng);

/// Haar-random normalized state: i.i.d. complex Gaussian amplitudes, normalized.
PureState random_pure_state(int d, std::size_t parties, RngStream& rng);

/// Random matrix with unit determinant and condition number <= cond_cap.
/// Gaussian entries rescaled by det^(-1/d); rejected and redrawn above the cap.
/// Throws SamplerExhausted after max_retries rejections.
ComplexMatrix random_sl(std::size_t d, RngStream& rng, double cond_cap = 50.0, std::size_t max_retries = 10000);

/// Haar-random unitary rescaled to unit determinant.
ComplexMatrix random_su(std::size_t d, RngStream& rng);

/// 2-norm condition number.
double condition_number(const ComplexMatrix& m);

/// Dense copy-space operator built by explicit Kronecker products, no interning.
/// Throws SizeCapExceeded above kMaxDenseDim.
ComplexMatrix brute_force_operator(const OperatorExpression& expr);

/// sum_{a,b} Psi_a M_ab Psi_b on the m-fold copy state Psi = psi (x) ... (x) psi.
Complex brute_force_bilinear(const ComplexMatrix& dense, const PureState& psi, std::size_t copies);

/// brute_force_bilinear(brute_force_operator(expr), psi, expr.copies()).
Complex brute_force_expectation(const OperatorExpression& expr, const PureState& psi);

/// Laplace cofactor expansion along the first row; dim <= 6.
Complex determinant_oracle(const ComplexMatrix& m);

}  // namespace slcomb
