#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "slcomb/complex_matrix.hpp"

namespace slcomb {

/// Tolerances shared by the identity checks.
struct Tolerances {
  double exact = 1e-14;        ///< identities with integer / half-integer entries
  double contraction = 1e-10;  ///< floating contractions and Monte-Carlo checks
};

/// The identity plus the d^2 - 1 traceless generators of sl(d), unnormalized.
///
/// For d = 3 the last generator is diag(1, 1, -2) and for d = 4 the three
/// diagonal generators are diag(1,-1,0,0), diag(0,0,1,-1), diag(1,1,-1,-1).
/// Off-diagonal generators are the symmetric / antisymmetric pairs
/// (E_kl + E_lk, -i E_kl + i E_lk) for k < l.
class GeneratorBasis {
 public:
  GeneratorBasis(int local_dim, std::vector<ComplexMatrix> matrices);

  int local_dim() const noexcept { return local_dim_; }
  std::size_t size() const noexcept { return matrices_.size(); }
  const ComplexMatrix& operator[](std::size_t index) const { return matrices_.at(index); }

  auto begin() const noexcept { return matrices_.begin(); }
  auto end() const noexcept { return matrices_.end(); }

 private:
  int local_dim_;
  std::vector<ComplexMatrix> matrices_;
};

/// Generator set for d in {2, 3, 4}; d = 2 yields the Pauli matrices
/// (identity, sigma_x, sigma_y, sigma_z). Throws UnsupportedDimension otherwise.
GeneratorBasis generator_basis(int d);

/// Swap S on C^d (x) C^d: S (x (x) y) = y (x) x.
ComplexMatrix swap_operator(std::size_t d);

/// Swap operator rebuilt from the generator expansion
///   d = 3: 1/3 id + 1/2 sum_{i=1..7} l_i(x)l_i + 1/6 l_8(x)l_8
///   d = 4: 1/4 id + 1/2 sum_{i=1..14} l_i(x)l_i + 1/4 l_15(x)l_15.
ComplexMatrix permutation_from_generators(int d);

/// Permutation operator on n copies of C^d moving slot k to slot perm[k]:
/// |x_0 ... x_{n-1}> -> |y> with y[perm[k]] = x[k].
ComplexMatrix copy_permutation_operator(std::size_t d, std::span<const std::size_t> perm);

/// Levi-Civita symbol on three indices drawn from {1, 2, 3}.
int levi_civita(std::span<const int> indices);

/// One nonvanishing Levi-Civita entry, zero-based indices.
struct EpsilonEntry {
  std::array<int, 3> index;
  int sign;
};

/// The six nonvanishing entries of the rank-3 Levi-Civita symbol.
std::span<const EpsilonEntry> levi_civita_entries();

/// One term A (x) B of an operator-Schmidt expansion.
struct SchmidtPair {
  ComplexMatrix first;
  ComplexMatrix second;
  double singular_value;
};

/// Realignment R[(i1 j1),(i2 j2)] = M[(i1 i2),(j1 j2)] of an operator on C^d (x) C^d.
ComplexMatrix reshuffle(const ComplexMatrix& m, std::size_t d);

/// Operator-Schmidt decomposition M = sum_mu A_mu (x) B_mu.
///
/// Singular values of the reshuffled matrix above `tol` are kept and split
/// evenly between the two factors. Pairs are ordered by descending singular
/// value, ties broken by the lowest row-major index of the first nonzero
/// entry of A_mu; that entry is made real and positive.
std::vector<SchmidtPair> operator_schmidt_decompose(const ComplexMatrix& m, std::size_t d,
                                                    double tol = kDefaultMatrixTolerance);

}  // namespace slcomb
