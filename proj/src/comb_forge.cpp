#include "slcomb/comb_forge.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <string>

#include "slcomb/errors.hpp"
#include "slcomb/expectation.hpp"
#include "slcomb/oracle.hpp"

namespace slcomb {

namespace {

constexpr Complex kI{0.0, 1.0};

OperatorExpression single_party(int d, std::size_t copies) { return OperatorExpression(d, 1, copies); }

// Index map of copy_permutation_operator: basis vector x goes to map[x].
std::vector<std::size_t> copy_index_map(std::size_t d, std::span<const std::size_t> perm) {
  const std::size_t n = perm.size();
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t k = n; k-- > 1;) stride[k - 1] = stride[k] * d;
  const std::size_t dim = n == 0 ? 1 : stride[0] * d;
  std::vector<std::size_t> map(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t y = 0;
    for (std::size_t k = 0; k < n; ++k) y += ((x / stride[k]) % d) * stride[perm[k]];
    map[x] = y;
  }
  return map;
}

void check_permutation(std::span<const std::size_t> perm, std::size_t n, const char* what) {
  if (perm.size() != n) throw ShapeMismatch(std::string("sn_twist: ") + what + " permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw std::invalid_argument(std::string("sn_twist: ") + what + " is not a permutation");
    seen[p] = true;
  }
}

OFamily build_o_family(int d) {
  const auto letters = comb_letters(d);
  const ComplexMatrix swap = swap_operator(static_cast<std::size_t>(d));
  OFamily fam{d, letters.size(), {}, {}};
  for (std::size_t i = 0; i < fam.range; ++i) {
    for (std::size_t j = 0; j < fam.range; ++j) {
      ComplexMatrix o = kron(letters[i], letters[j]) * swap;
      fam.schmidt_pairs.push_back(operator_schmidt_decompose(o, static_cast<std::size_t>(d)));
      fam.operators.push_back(std::move(o));
    }
  }
  return fam;
}

}  // namespace

int alternating_sign(int i) {
  if (i < 1 || i > 6) throw std::invalid_argument("alternating_sign: index must lie in 1..6");
  return (std::min(i, 7 - i) % 2 == 0) ? 1 : -1;
}

std::vector<ComplexMatrix> comb_letters(int d) {
  const GeneratorBasis basis = generator_basis(d);
  switch (d) {
    case 3: return {basis[2], basis[5], basis[7]};
    case 4: {
      std::vector<ComplexMatrix> out;
      for (std::size_t i = 1; i <= 6; ++i) out.push_back(basis[2 * i]);
      return out;
    }
    default: throw UnsupportedDimension("comb_letters: d = " + std::to_string(d) + " not in {3,4}");
  }
}

Comb comb_qubit(int order) {
  const GeneratorBasis s = generator_basis(2);
  switch (order) {
    case 1: {
      OperatorExpression e = single_party(2, 1);
      const FactorId y = e.add_factor(s[2]);
      e.add_term(1.0, std::array{y});
      return {2, 1, std::move(e), "sigma_y"};
    }
    case 2: {
      OperatorExpression e = single_party(2, 2);
      constexpr std::array<double, 4> g{-1.0, 1.0, 0.0, 1.0};
      for (std::size_t mu = 0; mu < 4; ++mu) {
        if (g[mu] == 0.0) continue;
        const FactorId f = e.add_factor(s[mu]);
        e.add_term(g[mu], std::array{f, f});
      }
      return {2, 2, std::move(e), "L2_qubit"};
    }
    case 3: {
      OperatorExpression e = single_party(2, 3);
      const std::array<FactorId, 3> t{e.add_factor(s[0]), e.add_factor(s[1]), e.add_factor(s[3])};
      for (const auto& eps : levi_civita_entries())
        e.add_term(static_cast<double>(eps.sign), std::array{t[eps.index[0]], t[eps.index[1]], t[eps.index[2]]});
      return {2, 3, std::move(e), "L3_qubit"};
    }
    default: throw std::invalid_argument("comb_qubit: order must be 1, 2 or 3");
  }
}

Comb comb_spin1_order3() {
  const auto tau = comb_letters(3);
  OperatorExpression e = single_party(3, 3);
  const std::array<FactorId, 3> t{e.add_factor(tau[0]), e.add_factor(tau[1]), e.add_factor(tau[2])};
  for (const auto& eps : levi_civita_entries())
    e.add_term(kI * static_cast<double>(eps.sign), std::array{t[eps.index[0]], t[eps.index[1]], t[eps.index[2]]});
  return {3, 3, std::move(e), "L3_spin1"};
}

Comb comb_spin1_order6() {
  const OFamily& fam = o_family(3);
  OperatorExpression e = single_party(3, 6);
  std::array<FactorId, 6> grid{};
  for (const auto& e1 : levi_civita_entries()) {
    for (const auto& e2 : levi_civita_entries()) {
      const double sign = -static_cast<double>(e1.sign * e2.sign);
      const auto& p0 = fam.pairs(e1.index[0], e2.index[0]);
      const auto& p1 = fam.pairs(e1.index[1], e2.index[1]);
      const auto& p2 = fam.pairs(e1.index[2], e2.index[2]);
      for (const auto& a : p0) {
        for (const auto& b : p1) {
          for (const auto& c : p2) {
            grid = {e.add_factor(a.first),  e.add_factor(b.first),  e.add_factor(c.first),
                    e.add_factor(a.second), e.add_factor(b.second), e.add_factor(c.second)};
            e.add_term(sign, grid);
          }
        }
      }
    }
  }
  return {3, 6, std::move(e), "L6_spin1"};
}

Comb comb_spin32_order2() {
  const auto tau = comb_letters(4);
  OperatorExpression e = single_party(4, 2);
  for (int i = 1; i <= 6; ++i) {
    const FactorId a = e.add_factor(tau[static_cast<std::size_t>(i - 1)]);
    const FactorId b = e.add_factor(tau[static_cast<std::size_t>(6 - i)]);
    e.add_term(static_cast<double>(alternating_sign(i)), std::array{a, b});
  }
  return {4, 2, std::move(e), "L2_spin32"};
}

Comb comb_spin32_order4() {
  const OFamily& fam = o_family(4);
  OperatorExpression e = single_party(4, 4);
  for (int i = 1; i <= 6; ++i) {
    for (int j = 1; j <= 6; ++j) {
      const double sign = static_cast<double>(alternating_sign(i) * alternating_sign(j));
      const auto& front = fam.pairs(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
      const auto& back = fam.pairs(static_cast<std::size_t>(6 - i), static_cast<std::size_t>(6 - j));
      for (const auto& a : front) {
        for (const auto& b : back) {
          const std::array grid{e.add_factor(a.first), e.add_factor(b.first), e.add_factor(a.second),
                                e.add_factor(b.second)};
          e.add_term(sign, grid);
        }
      }
    }
  }
  return {4, 4, std::move(e), "L4_spin32"};
}

Comb circ_product(const Comb& a, const Comb& b) {
  if (a.local_dim != b.local_dim) throw ShapeMismatch("circ_product: local dimensions differ");
  return {a.local_dim, a.order + b.order, OperatorExpression::tensor_copies(a.expression, b.expression),
          "(" + a.label + ")o(" + b.label + ")"};
}

const OFamily& o_family(int d) {
  if (d != 3 && d != 4) throw UnsupportedDimension("o_family: d = " + std::to_string(d) + " not in {3,4}");
  static std::once_flag once3, once4;
  static OFamily fam3, fam4;
  if (d == 3) {
    std::call_once(once3, [] { fam3 = build_o_family(3); });
    return fam3;
  }
  std::call_once(once4, [] { fam4 = build_o_family(4); });
  return fam4;
}

Complex comb_trace_pairing(const Comb& a, const Comb& b) { return trace_pairing(a.expression, b.expression); }

Complex orthogonalization_coefficient(const Comb& a, const Comb& b, double pivot_tol) {
  if (a.local_dim != b.local_dim || a.order != b.order)
    throw ShapeMismatch("orthogonalize: combs differ in local dimension or order");
  const Complex bb = comb_trace_pairing(b, b);
  if (std::abs(bb) <= pivot_tol)
    throw DegeneratePivot("orthogonalize: tr(B B) of " + b.label + " vanishes");
  return comb_trace_pairing(a, b) / bb;
}

Comb orthogonalize(const Comb& a, const Comb& b, double pivot_tol) {
  const Complex coef = orthogonalization_coefficient(a, b, pivot_tol);
  OperatorExpression e(a.expression);
  e.append(b.expression, -coef);
  return {a.local_dim, a.order, std::move(e), a.label + " - c " + b.label};
}

Comb sn_twist(const Comb& a, std::span<const std::size_t> left, std::span<const std::size_t> right) {
  check_permutation(left, a.order, "left");
  check_permutation(right, a.order, "right");
  const auto d = static_cast<std::size_t>(a.local_dim);
  const ComplexMatrix dense = a.expression.materialize();
  const auto lmap = copy_index_map(d, left);
  const auto rmap = copy_index_map(d, right);
  ComplexMatrix twisted(dense.dim());
  // (P_l A P_r)[l(x), y] = A[x, r(y)]
  for (std::size_t x = 0; x < dense.dim(); ++x)
    for (std::size_t y = 0; y < dense.dim(); ++y) twisted(lmap[x], y) = dense(x, rmap[y]);
  return {a.local_dim, a.order, expression_from_dense(twisted, a.local_dim, 1, a.order), "twist(" + a.label + ")"};
}

CombVerification verify_comb(const Comb& a, std::size_t trials, double tol, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("verify_comb: trials must be >= 1");
  CombVerification out{a.label, trials, tol, 0.0, 0, false};
  const RngStream master(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    RngStream rng = master.split(k);
    const PureState psi = random_pure_state(a.local_dim, 1, rng);
    const double v = std::abs(antilinear_expectation(a.expression, psi));
    if (k == 0 || v > out.max_abs_value) {
      out.max_abs_value = v;
      out.worst_trial = k;
    }
  }
  out.passed = out.max_abs_value < tol;
  return out;
}

}  // namespace slcomb
