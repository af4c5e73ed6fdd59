#include "slcomb/oracle.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "slcomb/errors.hpp"

namespace slcomb {

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      out(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  return out;
}

ComplexMatrix from_eigen(const Eigen::MatrixXcd& m) {
  ComplexMatrix out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = m(r, c);
  return out;
}

ComplexMatrix gaussian_matrix(std::size_t d, RngStream& rng) {
  ComplexMatrix m(d);
  for (auto& z : m.entries()) z = rng.complex_normal();
  return m;
}

// Rescale so that det = 1, using the principal d-th root.
ComplexMatrix unit_determinant(ComplexMatrix m) {
  const Complex det = to_eigen(m).determinant();
  const Complex root = std::pow(det, 1.0 / static_cast<double>(m.dim()));
  m *= 1.0 / root;
  return m;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::uint64_t RngStream::next_u64() { return engine_(); }

double RngStream::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double RngStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  has_spare_ = true;
  return r * std::cos(phi);
}

Complex RngStream::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

RngStream RngStream::split(std::uint64_t index) const { return RngStream(splitmix64(seed_ ^ splitmix64(index + 1))); }

std::vector<std::size_t> random_permutation(std::size_t n, RngStream& rng) {
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[k] = k;
  for (std::size_t k = n; k-- > 1;) {
    const auto j = static_cast<std::size_t>(rng.next_u64() % (k + 1));
    std::swap(perm[k], perm[j]);
  }
  return perm;
}

PureState random_pure_state(int d, std::size_t parties, RngStream& rng) {
  if (d < 2) throw UnsupportedDimension("random_pure_state: d must be >= 2");
  if (parties == 0) throw ShapeMismatch("random_pure_state: parties must be >= 1");
  std::size_t n = 1;
  for (std::size_t k = 0; k < parties; ++k) n *= static_cast<std::size_t>(d);
  std::vector<Complex> amps(n);
  double norm2 = 0.0;
  for (auto& z : amps) {
    z = rng.complex_normal();
    norm2 += std::norm(z);
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& z : amps) z *= scale;
  return PureState(d, parties, std::move(amps));
}

double condition_number(const ComplexMatrix& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
  const auto& s = svd.singularValues();
  const double smin = s(s.size() - 1);
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

ComplexMatrix random_sl(std::size_t d, RngStream& rng, double cond_cap, std::size_t max_retries) {
  if (d < 2) throw UnsupportedDimension("random_sl: d must be >= 2");
  if (!(cond_cap > 1.0)) throw std::invalid_argument("random_sl: cond_cap must exceed 1");
  for (std::size_t attempt = 0; attempt <= max_retries; ++attempt) {
    ComplexMatrix m = gaussian_matrix(d, rng);
    if (condition_number(m) > cond_cap) continue;
    return unit_determinant(std::move(m));
  }
  throw SamplerExhausted("random_sl: no matrix with condition number <= " + std::to_string(cond_cap) + " after " +
                         std::to_string(max_retries) + " retries");
}

ComplexMatrix random_su(std::size_t d, RngStream& rng) {
  if (d < 2) throw UnsupportedDimension("random_su: d must be >= 2");
  const Eigen::MatrixXcd g = to_eigen(gaussian_matrix(d, rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const Complex diag = r(k, k);
    if (std::abs(diag) > 0.0) q.col(k) *= diag / std::abs(diag);
  }
  return unit_determinant(from_eigen(q));
}

ComplexMatrix brute_force_operator(const OperatorExpression& expr) {
  const std::size_t dim = expr.dense_dim();
  if (dim > kMaxDenseDim)
    throw SizeCapExceeded("brute_force_operator: dense dimension " + std::to_string(dim) + " exceeds cap " +
                          std::to_string(kMaxDenseDim));
  const std::size_t d = static_cast<std::size_t>(expr.local_dim());
  ComplexMatrix out(dim);

  for (std::size_t t = 0; t < expr.term_count(); ++t) {
    const FactoredTerm term = expr.term(t);
    // Left-to-right Kronecker chain over all copy and party slots.
    std::vector<Complex> acc{term.coefficient};
    std::size_t acc_dim = 1;
    for (const ComplexMatrix& f : term.factors) {
      const std::size_t nd = acc_dim * d;
      std::vector<Complex> next(nd * nd);
      for (std::size_t i1 = 0; i1 < acc_dim; ++i1) {
        for (std::size_t j1 = 0; j1 < acc_dim; ++j1) {
          const Complex x = acc[i1 * acc_dim + j1];
          if (x == Complex{}) continue;
          for (std::size_t i2 = 0; i2 < d; ++i2)
            for (std::size_t j2 = 0; j2 < d; ++j2) next[(i1 * d + i2) * nd + (j1 * d + j2)] = x * f(i2, j2);
        }
      }
      acc = std::move(next);
      acc_dim = nd;
    }
    for (std::size_t k = 0; k < acc.size(); ++k) out.entries()[k] += acc[k];
  }
  return out;
}

Complex brute_force_bilinear(const ComplexMatrix& dense, const PureState& psi, std::size_t copies) {
  std::size_t dim = 1;
  for (std::size_t c = 0; c < copies; ++c) dim *= psi.size();
  if (dense.dim() != dim) throw ShapeMismatch("brute_force_bilinear: operator does not act on the copy space");

  std::vector<Complex> big(dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    Complex v = 1.0;
    std::size_t rest = idx;
    for (std::size_t c = 0; c < copies; ++c) {
      v *= psi[rest % psi.size()];
      rest /= psi.size();
    }
    big[idx] = v;
  }

  Complex sum = 0.0;
  for (std::size_t a = 0; a < dim; ++a) {
    if (big[a] == Complex{}) continue;
    Complex row = 0.0;
    for (std::size_t b = 0; b < dim; ++b) row += dense(a, b) * big[b];
    sum += big[a] * row;
  }
  return sum;
}

Complex brute_force_expectation(const OperatorExpression& expr, const PureState& psi) {
  if (psi.local_dim() != expr.local_dim() || psi.parties() != expr.parties())
    throw ShapeMismatch("brute_force_expectation: state shape does not match expression");
  return brute_force_bilinear(brute_force_operator(expr), psi, expr.copies());
}

Complex determinant_oracle(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  if (n > 6) throw SizeCapExceeded("determinant_oracle: dimension " + std::to_string(n) + " exceeds 6");
  if (n == 1) return m(0, 0);
  Complex sum = 0.0;
  for (std::size_t col = 0; col < n; ++col) {
    if (m(0, col) == Complex{}) continue;
    ComplexMatrix minor(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == col) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    const double sign = (col % 2 == 0) ? 1.0 : -1.0;
    sum += sign * m(0, col) * determinant_oracle(minor);
  }
  return sum;
}

}  // namespace slcomb
