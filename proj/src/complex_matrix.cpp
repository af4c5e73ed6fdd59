#include "slcomb/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "slcomb/errors.hpp"

namespace slcomb {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw ShapeMismatch(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) +
                        " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix() : dim_(1), entries_(1) {}

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw std::invalid_argument("ComplexMatrix: dimension must be >= 1");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> entries) {
  ComplexMatrix m(entries.size());
  std::size_t i = 0;
  for (const auto& e : entries) {
    m(i, i) = e;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  ComplexMatrix m(rows.size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw ShapeMismatch("from_rows: matrix is not square");
    std::copy(row.begin(), row.end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(r * m.dim_));
    ++r;
  }
  return m;
}

ComplexMatrix ComplexMatrix::from_row_major(std::span<const Complex> entries) {
  const auto dim = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(entries.size()))));
  if (dim * dim != entries.size() || dim == 0) {
    throw ShapeMismatch("from_row_major: entry count " + std::to_string(entries.size()) +
                        " is not a positive perfect square");
  }
  ComplexMatrix m(dim);
  std::copy(entries.begin(), entries.end(), m.entries_.begin());
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix t(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix t(*this);
  for (auto& e : t.entries_) e = std::conj(e);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const { return transpose().conjugate(); }

Complex ComplexMatrix::trace() const {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) sum += (*this)(i, i);
  return sum;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator+");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator-");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& e : entries_) e *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs, "operator*");
  const std::size_t n = lhs.dim();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(r, k);
      if (a == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  require_same_dim(*this, other, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t k = 0; k < entries_.size(); ++k)
    worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
  return worst;
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& other, double tol) const {
  return dim_ == other.dim_ && max_abs_diff(other) <= tol;
}

double ComplexMatrix::max_abs() const {
  double worst = 0.0;
  for (const auto& e : entries_) worst = std::max(worst, std::abs(e));
  return worst;
}

std::size_t ComplexMatrix::count_nonzero(double tol) const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [tol](Complex e) { return std::abs(e) > tol; }));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i1 = 0; i1 < na; ++i1) {
    for (std::size_t j1 = 0; j1 < na; ++j1) {
      const Complex x = a(i1, j1);
      if (x == Complex{}) continue;
      for (std::size_t i2 = 0; i2 < nb; ++i2)
        for (std::size_t j2 = 0; j2 < nb; ++j2) out(i1 * nb + i2, j1 * nb + j2) = x * b(i2, j2);
    }
  }
  return out;
}

Complex trace_pairing(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "trace_pairing");
  const std::size_t n = a.dim();
  Complex sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sum += a(i, j) * b(j, i);
  return sum;
}

}  // namespace slcomb
