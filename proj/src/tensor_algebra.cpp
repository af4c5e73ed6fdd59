#include "slcomb/tensor_algebra.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "slcomb/errors.hpp"

namespace slcomb {

namespace {

constexpr Complex kI{0.0, 1.0};

ComplexMatrix unit(std::size_t d, std::size_t r, std::size_t c) {
  ComplexMatrix m(d);
  m(r, c) = 1.0;
  return m;
}

// (E_kl + E_lk, -i E_kl + i E_lk)
std::pair<ComplexMatrix, ComplexMatrix> embedded_xy(std::size_t d, std::size_t k, std::size_t l) {
  ComplexMatrix x = unit(d, k, l) + unit(d, l, k);
  ComplexMatrix y(d);
  y(k, l) = -kI;
  y(l, k) = kI;
  return {std::move(x), std::move(y)};
}

std::vector<ComplexMatrix> pauli_set() {
  return {
      ComplexMatrix::identity(2),
      ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}),
      ComplexMatrix::from_rows({{0.0, -kI}, {kI, 0.0}}),
      ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}),
  };
}

std::vector<ComplexMatrix> qutrit_set() {
  std::vector<ComplexMatrix> out;
  out.push_back(ComplexMatrix::identity(3));
  auto [x01, y01] = embedded_xy(3, 0, 1);
  auto [x02, y02] = embedded_xy(3, 0, 2);
  auto [x12, y12] = embedded_xy(3, 1, 2);
  out.push_back(x01);
  out.push_back(y01);
  out.push_back(ComplexMatrix::diagonal({1.0, -1.0, 0.0}));
  out.push_back(x02);
  out.push_back(y02);
  out.push_back(x12);
  out.push_back(y12);
  out.push_back(ComplexMatrix::diagonal({1.0, 1.0, -2.0}));
  return out;
}

std::vector<ComplexMatrix> ququart_set() {
  std::vector<ComplexMatrix> out;
  out.push_back(ComplexMatrix::identity(4));
  constexpr std::array<std::pair<std::size_t, std::size_t>, 6> kPairs{
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  for (auto [k, l] : kPairs) {
    auto [x, y] = embedded_xy(4, k, l);
    out.push_back(std::move(x));
    out.push_back(std::move(y));
  }
  out.push_back(ComplexMatrix::diagonal({1.0, -1.0, 0.0, 0.0}));
  out.push_back(ComplexMatrix::diagonal({0.0, 0.0, 1.0, -1.0}));
  out.push_back(ComplexMatrix::diagonal({1.0, 1.0, -1.0, -1.0}));
  return out;
}

}  // namespace

GeneratorBasis::GeneratorBasis(int local_dim, std::vector<ComplexMatrix> matrices)
    : local_dim_(local_dim), matrices_(std::move(matrices)) {
  if (matrices_.size() != static_cast<std::size_t>(local_dim_ * local_dim_))
    throw ShapeMismatch("GeneratorBasis: expected d^2 matrices");
  for (const auto& m : matrices_)
    if (m.dim() != static_cast<std::size_t>(local_dim_)) throw ShapeMismatch("GeneratorBasis: wrong matrix size");
}

GeneratorBasis generator_basis(int d) {
  switch (d) {
    case 2: return GeneratorBasis(2, pauli_set());
    case 3: return GeneratorBasis(3, qutrit_set());
    case 4: return GeneratorBasis(4, ququart_set());
    default: throw UnsupportedDimension("generator_basis: d = " + std::to_string(d) + " not in {2,3,4}");
  }
}

ComplexMatrix swap_operator(std::size_t d) {
  if (d < 2) throw std::invalid_argument("swap_operator: d must be >= 2");
  ComplexMatrix s(d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) s(y * d + x, x * d + y) = 1.0;
  return s;
}

ComplexMatrix permutation_from_generators(int d) {
  if (d != 3 && d != 4)
    throw UnsupportedDimension("permutation_from_generators: d = " + std::to_string(d) + " not in {3,4}");
  const GeneratorBasis basis = generator_basis(d);
  const std::size_t last = basis.size() - 1;
  const double identity_weight = 1.0 / d;
  const double last_weight = d == 3 ? 1.0 / 6.0 : 1.0 / 4.0;

  ComplexMatrix p = kron(basis[0], basis[0]) * identity_weight;
  for (std::size_t i = 1; i < last; ++i) p += kron(basis[i], basis[i]) * 0.5;
  p += kron(basis[last], basis[last]) * last_weight;
  return p;
}

ComplexMatrix copy_permutation_operator(std::size_t d, std::span<const std::size_t> perm) {
  const std::size_t n = perm.size();
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw std::invalid_argument("copy_permutation_operator: not a permutation");
    seen[p] = true;
  }
  std::size_t dim = 1;
  for (std::size_t k = 0; k < n; ++k) dim *= d;

  std::vector<std::size_t> stride(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t s = 1;
    for (std::size_t j = k + 1; j < n; ++j) s *= d;
    stride[k] = s;
  }

  ComplexMatrix out(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t row = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t digit = (col / stride[k]) % d;
      row += digit * stride[perm[k]];
    }
    out(row, col) = 1.0;
  }
  return out;
}

int levi_civita(std::span<const int> indices) {
  if (indices.size() != 3) throw std::invalid_argument("levi_civita: exactly three indices expected");
  for (int v : indices)
    if (v < 1 || v > 3) throw std::invalid_argument("levi_civita: indices must lie in {1,2,3}");
  const int a = indices[0], b = indices[1], c = indices[2];
  return (b - a) * (c - a) * (c - b) / 2;
}

std::span<const EpsilonEntry> levi_civita_entries() {
  static constexpr std::array<EpsilonEntry, 6> kEntries{{
      {{0, 1, 2}, 1},
      {{1, 2, 0}, 1},
      {{2, 0, 1}, 1},
      {{0, 2, 1}, -1},
      {{2, 1, 0}, -1},
      {{1, 0, 2}, -1},
  }};
  return kEntries;
}

ComplexMatrix reshuffle(const ComplexMatrix& m, std::size_t d) {
  if (m.dim() != d * d)
    throw ShapeMismatch("reshuffle: matrix dimension " + std::to_string(m.dim()) + " is not d^2 for d = " +
                        std::to_string(d));
  ComplexMatrix r(d * d);
  for (std::size_t i1 = 0; i1 < d; ++i1)
    for (std::size_t i2 = 0; i2 < d; ++i2)
      for (std::size_t j1 = 0; j1 < d; ++j1)
        for (std::size_t j2 = 0; j2 < d; ++j2) r(i1 * d + j1, i2 * d + j2) = m(i1 * d + i2, j1 * d + j2);
  return r;
}

std::vector<SchmidtPair> operator_schmidt_decompose(const ComplexMatrix& m, std::size_t d, double tol) {
  const ComplexMatrix r = reshuffle(m, d);
  const std::size_t n = d * d;

  Eigen::MatrixXcd dense(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dense(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = r(i, j);

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(dense, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const auto& u = svd.matrixU();
  const auto& v = svd.matrixV();

  struct Candidate {
    SchmidtPair pair;
    std::size_t lead_index;
  };
  std::vector<Candidate> candidates;

  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    const double s = sv(k);
    if (s <= tol) continue;
    const double root = std::sqrt(s);
    ComplexMatrix a(d), b(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const auto row = static_cast<Eigen::Index>(i * d + j);
        a(i, j) = root * u(row, k);
        b(i, j) = root * std::conj(v(row, k));
      }
    }
    const double cutoff = 1e-10 * a.max_abs();
    std::size_t lead = 0;
    while (lead + 1 < n && std::abs(a.entries()[lead]) <= cutoff) ++lead;
    const Complex phase = a.entries()[lead] / std::abs(a.entries()[lead]);
    a *= std::conj(phase);
    b *= phase;
    a.entries()[lead] = std::abs(a.entries()[lead]);
    candidates.push_back({SchmidtPair{std::move(a), std::move(b), s}, lead});
  }

  std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
    const double sx = x.pair.singular_value, sy = y.pair.singular_value;
    if (std::abs(sx - sy) > 1e-9 * std::max(sx, sy)) return sx > sy;
    return x.lead_index < y.lead_index;
  });

  std::vector<SchmidtPair> out;
  out.reserve(candidates.size());
  for (auto& c : candidates) out.push_back(std::move(c.pair));
  return out;
}

}  // namespace slcomb
