#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace slcomb {

using Complex = std::complex<double>;

inline constexpr double kDefaultMatrixTolerance = 1e-12;

/// Dense square complex matrix, row-major.
///
/// This is the carrier for generators, permutation operators and small
/// materialized combs. The dimension is always at least one.
class ComplexMatrix {
 public:
  /// 1x1 zero matrix.
  ComplexMatrix();
  /// dim x dim zero matrix; throws std::invalid_argument for dim == 0.
  explicit ComplexMatrix(std::size_t dim);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::initializer_list<Complex> entries);
  /// Builds from nested rows; throws ShapeMismatch unless the rows form a square.
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  /// Builds from row-major entries; entries.size() must be a perfect square.
  static ComplexMatrix from_row_major(std::span<const Complex> entries);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }

  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix adjoint() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) { return lhs *= scale; }
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) { return rhs *= scale; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

  /// Largest entrywise |a - b|; throws ShapeMismatch on differing dimensions.
  double max_abs_diff(const ComplexMatrix& other) const;
  /// Entrywise absolute comparison.
  bool approx_equal(const ComplexMatrix& other, double tol = kDefaultMatrixTolerance) const;
  double max_abs() const;
  std::size_t count_nonzero(double tol = 0.0) const;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

/// Kronecker product A (x) B.
///
/// Index convention used throughout the library: the first factor owns the
/// slower-varying index, so entry ((i1 i2),(j1 j2)) = A[i1,j1] * B[i2,j2]
/// with composite index i1 * dim(B) + i2.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Unconjugated trace pairing tr(A B).
Complex trace_pairing(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace slcomb
