#include "slcomb/operator_expression.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>

#include "slcomb/errors.hpp"

namespace slcomb {

namespace {

std::size_t mix(std::size_t h, std::uint64_t v) {
  return h ^ (static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t hash_matrix(const ComplexMatrix& m) {
  std::size_t h = m.dim();
  for (const Complex& z : m.entries()) {
    h = mix(h, std::bit_cast<std::uint64_t>(z.real() + 0.0));
    h = mix(h, std::bit_cast<std::uint64_t>(z.imag() + 0.0));
  }
  return h;
}

bool same_entries(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) return false;
  auto x = a.entries();
  auto y = b.entries();
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] != y[k]) return false;
  return true;
}

void require_same_shape(const OperatorExpression& a, const OperatorExpression& b, const char* op) {
  if (a.local_dim() != b.local_dim() || a.parties() != b.parties() || a.copies() != b.copies()) {
    throw ShapeMismatch(std::string(op) + ": expressions differ in (d, parties, copies)");
  }
}

struct SparseEntry {
  std::size_t row;
  std::size_t col;
  Complex value;
};

}  // namespace

std::size_t OperatorExpression::VectorHash::operator()(const std::vector<FactorId>& v) const noexcept {
  std::size_t h = v.size();
  for (FactorId id : v) h = mix(h, id);
  return h;
}

OperatorExpression::OperatorExpression(int local_dim, std::size_t parties, std::size_t copies)
    : local_dim_(local_dim), parties_(parties), copies_(copies) {
  if (local_dim < 2) throw UnsupportedDimension("OperatorExpression: local dimension must be >= 2");
  if (parties == 0 || copies == 0) throw ShapeMismatch("OperatorExpression: parties and copies must be >= 1");
}

std::size_t OperatorExpression::dense_dim() const noexcept {
  std::size_t dim = 1;
  const auto d = static_cast<std::size_t>(local_dim_);
  for (std::size_t k = 0; k < parties_ * copies_; ++k) {
    if (dim > std::numeric_limits<std::size_t>::max() / d) return std::numeric_limits<std::size_t>::max();
    dim *= d;
  }
  return dim;
}

FactorId OperatorExpression::add_factor(const ComplexMatrix& m) {
  if (m.dim() != static_cast<std::size_t>(local_dim_))
    throw ShapeMismatch("add_factor: factor of dimension " + std::to_string(m.dim()) + ", expected " +
                        std::to_string(local_dim_));
  const std::size_t h = hash_matrix(m);
  auto [lo, hi] = factor_index_.equal_range(h);
  for (auto it = lo; it != hi; ++it)
    if (same_entries(factors_[it->second], m)) return it->second;
  const auto id = static_cast<FactorId>(factors_.size());
  factors_.push_back(m);
  factor_index_.emplace(h, id);
  return id;
}

TupleId OperatorExpression::add_tuple(std::span<const FactorId> party_factors) {
  if (party_factors.size() != parties_) throw ShapeMismatch("add_tuple: expected one factor per party");
  for (FactorId f : party_factors)
    if (f >= factors_.size()) throw std::out_of_range("add_tuple: unknown factor id");
  std::vector<FactorId> key(party_factors.begin(), party_factors.end());
  auto it = tuple_index_.find(key);
  if (it != tuple_index_.end()) return it->second;
  const auto id = static_cast<TupleId>(tuple_count_++);
  tuple_factors_.insert(tuple_factors_.end(), key.begin(), key.end());
  tuple_index_.emplace(std::move(key), id);
  return id;
}

void OperatorExpression::add_term_tuples(Complex coefficient, std::span<const TupleId> copy_tuples) {
  if (copy_tuples.size() != copies_) throw ShapeMismatch("add_term: expected one tuple per copy");
  for (TupleId t : copy_tuples)
    if (t >= tuple_count_) throw std::out_of_range("add_term: unknown tuple id");
  coefficients_.push_back(coefficient);
  term_tuples_.insert(term_tuples_.end(), copy_tuples.begin(), copy_tuples.end());
}

void OperatorExpression::add_term(Complex coefficient, std::span<const FactorId> grid) {
  if (grid.size() != copies_ * parties_) throw ShapeMismatch("add_term: grid must hold copies * parties factors");
  std::vector<TupleId> tuples(copies_);
  for (std::size_t c = 0; c < copies_; ++c) tuples[c] = add_tuple(grid.subspan(c * parties_, parties_));
  add_term_tuples(coefficient, tuples);
}

void OperatorExpression::add_term(const FactoredTerm& term) {
  if (term.factors.size() != copies_ * parties_)
    throw ShapeMismatch("add_term: grid must hold copies * parties factors");
  std::vector<FactorId> grid;
  grid.reserve(term.factors.size());
  for (const auto& f : term.factors) grid.push_back(add_factor(f));
  add_term(term.coefficient, grid);
}

std::span<const TupleId> OperatorExpression::copy_tuples(std::size_t term) const {
  if (term >= coefficients_.size()) throw std::out_of_range("copy_tuples: term index");
  return std::span<const TupleId>(term_tuples_).subspan(term * copies_, copies_);
}

std::span<const FactorId> OperatorExpression::tuple(TupleId id) const {
  if (id >= tuple_count_) throw std::out_of_range("tuple: id");
  return std::span<const FactorId>(tuple_factors_).subspan(static_cast<std::size_t>(id) * parties_, parties_);
}

FactoredTerm OperatorExpression::term(std::size_t index) const {
  FactoredTerm out{coefficient(index), {}};
  out.factors.reserve(copies_ * parties_);
  for (TupleId t : copy_tuples(index))
    for (FactorId f : tuple(t)) out.factors.push_back(factors_[f]);
  return out;
}

OperatorExpression OperatorExpression::scaled(Complex s) const {
  OperatorExpression out(*this);
  for (auto& c : out.coefficients_) c *= s;
  return out;
}

void OperatorExpression::append(const OperatorExpression& other, Complex s) {
  require_same_shape(*this, other, "append");
  std::vector<FactorId> factor_map(other.factors_.size());
  for (std::size_t f = 0; f < other.factors_.size(); ++f) factor_map[f] = add_factor(other.factors_[f]);
  std::vector<TupleId> tuple_map(other.tuple_count_);
  std::vector<FactorId> key(parties_);
  for (TupleId t = 0; t < other.tuple_count_; ++t) {
    auto src = other.tuple(t);
    for (std::size_t a = 0; a < parties_; ++a) key[a] = factor_map[src[a]];
    tuple_map[t] = add_tuple(key);
  }
  std::vector<TupleId> tuples(copies_);
  for (std::size_t k = 0; k < other.term_count(); ++k) {
    auto src = other.copy_tuples(k);
    for (std::size_t c = 0; c < copies_; ++c) tuples[c] = tuple_map[src[c]];
    add_term_tuples(other.coefficients_[k] * s, tuples);
  }
}

OperatorExpression operator+(const OperatorExpression& a, const OperatorExpression& b) {
  OperatorExpression out(a);
  out.append(b, 1.0);
  return out;
}

OperatorExpression operator-(const OperatorExpression& a, const OperatorExpression& b) {
  OperatorExpression out(a);
  out.append(b, -1.0);
  return out;
}

OperatorExpression OperatorExpression::tensor_copies(const OperatorExpression& a, const OperatorExpression& b) {
  if (a.local_dim_ != b.local_dim_ || a.parties_ != b.parties_)
    throw ShapeMismatch("tensor_copies: expressions differ in (d, parties)");
  OperatorExpression out(a.local_dim_, a.parties_, a.copies_ + b.copies_);

  auto import = [&out](const OperatorExpression& src) {
    std::vector<FactorId> factor_map(src.factors_.size());
    for (std::size_t f = 0; f < src.factors_.size(); ++f) factor_map[f] = out.add_factor(src.factors_[f]);
    std::vector<TupleId> tuple_map(src.tuple_count_);
    std::vector<FactorId> key(src.parties_);
    for (TupleId t = 0; t < src.tuple_count_; ++t) {
      auto ids = src.tuple(t);
      for (std::size_t k = 0; k < key.size(); ++k) key[k] = factor_map[ids[k]];
      tuple_map[t] = out.add_tuple(key);
    }
    return tuple_map;
  };
  const auto map_a = import(a);
  const auto map_b = import(b);

  std::vector<TupleId> tuples(out.copies_);
  for (std::size_t i = 0; i < a.term_count(); ++i) {
    auto ta = a.copy_tuples(i);
    for (std::size_t c = 0; c < a.copies_; ++c) tuples[c] = map_a[ta[c]];
    for (std::size_t j = 0; j < b.term_count(); ++j) {
      auto tb = b.copy_tuples(j);
      for (std::size_t c = 0; c < b.copies_; ++c) tuples[a.copies_ + c] = map_b[tb[c]];
      out.add_term_tuples(a.coefficients_[i] * b.coefficients_[j], tuples);
    }
  }
  return out;
}

OperatorExpression OperatorExpression::with_copies_permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != copies_) throw ShapeMismatch("with_copies_permuted: permutation length != copies");
  std::vector<bool> seen(copies_, false);
  for (auto p : perm) {
    if (p >= copies_ || seen[p]) throw std::invalid_argument("with_copies_permuted: not a permutation");
    seen[p] = true;
  }
  OperatorExpression out(*this);
  for (std::size_t t = 0; t < term_count(); ++t) {
    auto src = copy_tuples(t);
    for (std::size_t c = 0; c < copies_; ++c) out.term_tuples_[t * copies_ + perm[c]] = src[c];
  }
  return out;
}

ComplexMatrix OperatorExpression::materialize() const {
  const std::size_t dim = dense_dim();
  if (dim > kMaxDenseDim)
    throw SizeCapExceeded("materialize: dense dimension " + std::to_string(dim) + " exceeds cap " +
                          std::to_string(kMaxDenseDim));
  const auto d = static_cast<std::size_t>(local_dim_);

  std::vector<std::vector<SparseEntry>> nonzeros(factors_.size());
  for (std::size_t f = 0; f < factors_.size(); ++f)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        if (factors_[f](r, c) != Complex{}) nonzeros[f].push_back({r, c, factors_[f](r, c)});

  ComplexMatrix out(dim);
  std::vector<SparseEntry> current, next;
  for (std::size_t t = 0; t < term_count(); ++t) {
    if (coefficients_[t] == Complex{}) continue;
    current.assign(1, {0, 0, coefficients_[t]});
    for (TupleId tid : copy_tuples(t)) {
      for (FactorId f : tuple(tid)) {
        next.clear();
        for (const auto& e : current)
          for (const auto& z : nonzeros[f]) next.push_back({e.row * d + z.row, e.col * d + z.col, e.value * z.value});
        std::swap(current, next);
        if (current.empty()) break;
      }
      if (current.empty()) break;
    }
    for (const auto& e : current) out(e.row, e.col) += e.value;
  }
  return out;
}

OperatorExpression expression_from_dense(const ComplexMatrix& m, int local_dim, std::size_t parties,
                                         std::size_t copies, double tol) {
  OperatorExpression out(local_dim, parties, copies);
  if (m.dim() != out.dense_dim())
    throw ShapeMismatch("expression_from_dense: matrix dimension " + std::to_string(m.dim()) + " != d^(p*m)");
  const auto d = static_cast<std::size_t>(local_dim);
  const std::size_t slots = parties * copies;

  std::vector<FactorId> units(d * d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      ComplexMatrix e(d);
      e(r, c) = 1.0;
      units[r * d + c] = out.add_factor(e);
    }
  }

  std::vector<FactorId> grid(slots);
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      const Complex v = m(r, c);
      if (std::abs(v) <= tol) continue;
      std::size_t rr = r, cc = c;
      for (std::size_t k = slots; k-- > 0;) {
        grid[k] = units[(rr % d) * d + (cc % d)];
        rr /= d;
        cc /= d;
      }
      out.add_term(v, grid);
    }
  }
  return out;
}

Complex trace_pairing(const OperatorExpression& a, const OperatorExpression& b) {
  if (a.local_dim() != b.local_dim() || a.parties() != b.parties() || a.copies() != b.copies())
    throw ShapeMismatch("trace_pairing: expressions differ in (d, parties, copies)");

  // Per-slot traces between tuples, cached.
  std::unordered_map<std::uint64_t, Complex> tuple_trace;
  auto pair_trace = [&](TupleId ta, TupleId tb) {
    const std::uint64_t key = (static_cast<std::uint64_t>(ta) << 32) | tb;
    auto it = tuple_trace.find(key);
    if (it != tuple_trace.end()) return it->second;
    Complex v = 1.0;
    auto fa = a.tuple(ta);
    auto fb = b.tuple(tb);
    for (std::size_t k = 0; k < fa.size(); ++k) v *= trace_pairing(a.factor(fa[k]), b.factor(fb[k]));
    tuple_trace.emplace(key, v);
    return v;
  };

  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.term_count(); ++i) {
    auto ti = a.copy_tuples(i);
    for (std::size_t j = 0; j < b.term_count(); ++j) {
      auto tj = b.copy_tuples(j);
      Complex v = a.coefficient(i) * b.coefficient(j);
      for (std::size_t c = 0; c < ti.size() && v != Complex{}; ++c) v *= pair_trace(ti[c], tj[c]);
      sum += v;
    }
  }
  return sum;
}

}  // namespace slcomb
