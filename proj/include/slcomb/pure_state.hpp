#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "slcomb/complex_matrix.hpp"

namespace slcomb {

/// Pure state of p parties of local dimension d.
///
/// Amplitudes are flattened row-major with party 1 as the slowest index.
/// Normalization is not enforced.
class PureState {
 public:
  PureState(int local_dim, std::size_t parties, std::vector<Complex> amplitudes, std::string label = {});

  int local_dim() const noexcept { return local_dim_; }
  std::size_t parties() const noexcept { return parties_; }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t size() const noexcept { return amplitudes_.size(); }

  Complex operator[](std::size_t index) const { return amplitudes_.at(index); }

  double norm() const;
  PureState normalized() const;
  PureState scaled(Complex s) const;

  /// (I (x) ... (x) A (x) ... (x) I) psi with A on `party` (zero-based).
  PureState apply_local(std::size_t party, const ComplexMatrix& a) const;
  /// (A_1 (x) ... (x) A_p) psi.
  PureState apply_local_all(std::span<const ComplexMatrix> ops) const;

  /// Amplitude matrix M[i][j] = psi_ij (row = party 1); requires p = 2.
  ComplexMatrix amplitude_matrix() const;

  /// Tensor product state a (x) b; the parties of a come first.
  static PureState product(const PureState& a, const PureState& b);

 private:
  int local_dim_;
  std::size_t parties_;
  std::vector<Complex> amplitudes_;
  std::string label_;
};

/// Applies a d x d matrix to one axis of a row-major tensor of `parties` axes.
void apply_on_axis(std::span<const Complex> in, std::span<Complex> out, std::size_t d, std::size_t parties,
                   std::size_t axis, const ComplexMatrix& a);

}  // namespace slcomb
