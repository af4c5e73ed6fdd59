#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "slcomb/complex_matrix.hpp"

namespace slcomb {

/// Largest dense copy-space dimension d^(p*m) that may be materialized.
inline constexpr std::size_t kMaxDenseDim = 4096;

using FactorId = std::uint32_t;
using TupleId = std::uint32_t;

/// One term written out explicitly: coefficient and its (copy, party) grid of
/// single-qudit factors, copy-major (factors[c * parties + a]).
struct FactoredTerm {
  Complex coefficient;
  std::vector<ComplexMatrix> factors;
};

/// Sum of coefficient-weighted Kronecker-factored terms over copies x parties.
///
/// Each term has m copy slots; every slot carries a p-party product
/// F_1 (x) ... (x) F_p of d x d factors. Factor matrices and per-copy party
/// tuples are interned, so identical slots share one id and the expectation
/// engine can memoize per tuple. The dense layout is copy-major with party 1
/// slowest inside each copy.
class OperatorExpression {
 public:
  OperatorExpression(int local_dim, std::size_t parties, std::size_t copies);

  int local_dim() const noexcept { return local_dim_; }
  std::size_t parties() const noexcept { return parties_; }
  std::size_t copies() const noexcept { return copies_; }
  std::size_t term_count() const noexcept { return coefficients_.size(); }
  std::size_t factor_count() const noexcept { return factors_.size(); }
  std::size_t tuple_count() const noexcept { return tuple_count_; }

  /// d^(p*m); saturates at SIZE_MAX.
  std::size_t dense_dim() const noexcept;

  /// Interns a factor matrix (exact entrywise match); throws ShapeMismatch if not d x d.
  FactorId add_factor(const ComplexMatrix& m);
  /// Interns a p-party tuple of factor ids.
  TupleId add_tuple(std::span<const FactorId> party_factors);

  /// Appends a term from m tuple ids.
  void add_term_tuples(Complex coefficient, std::span<const TupleId> copy_tuples);
  /// Appends a term from an m*p copy-major grid of factor ids.
  void add_term(Complex coefficient, std::span<const FactorId> grid);
  /// Appends a term from explicit matrices, copy-major.
  void add_term(const FactoredTerm& term);

  Complex coefficient(std::size_t term) const { return coefficients_.at(term); }
  std::span<const TupleId> copy_tuples(std::size_t term) const;
  std::span<const FactorId> tuple(TupleId id) const;
  const ComplexMatrix& factor(FactorId id) const { return factors_.at(id); }

  FactoredTerm term(std::size_t index) const;

  OperatorExpression scaled(Complex s) const;
  /// Appends all terms of `other` scaled by s; shapes must agree.
  void append(const OperatorExpression& other, Complex s = 1.0);

  friend OperatorExpression operator+(const OperatorExpression& a, const OperatorExpression& b);
  friend OperatorExpression operator-(const OperatorExpression& a, const OperatorExpression& b);

  /// Copy-slot product: a occupies the first copies, b the remaining ones.
  static OperatorExpression tensor_copies(const OperatorExpression& a, const OperatorExpression& b);

  /// Moves copy slot k of every term to slot perm[k].
  OperatorExpression with_copies_permuted(std::span<const std::size_t> perm) const;

  /// Dense copy-space operator; throws SizeCapExceeded above kMaxDenseDim.
  ComplexMatrix materialize() const;

 private:
  struct VectorHash {
    std::size_t operator()(const std::vector<FactorId>& v) const noexcept;
  };

  int local_dim_;
  std::size_t parties_;
  std::size_t copies_;

  std::vector<ComplexMatrix> factors_;
  std::unordered_multimap<std::size_t, FactorId> factor_index_;

  std::vector<FactorId> tuple_factors_;
  std::size_t tuple_count_ = 0;
  std::unordered_map<std::vector<FactorId>, TupleId, VectorHash> tuple_index_;

  std::vector<Complex> coefficients_;
  std::vector<TupleId> term_tuples_;
};

/// Dense expression from a d^(p*m) operator: one term per nonzero entry,
/// each a product of matrix units.
OperatorExpression expression_from_dense(const ComplexMatrix& m, int local_dim, std::size_t parties,
                                         std::size_t copies, double tol = 0.0);

/// tr(A B) evaluated term by term as products of single-factor traces.
Complex trace_pairing(const OperatorExpression& a, const OperatorExpression& b);

}  // namespace slcomb
