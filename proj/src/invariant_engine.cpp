#include "slcomb/invariant_engine.hpp"

#include <Eigen/Dense>

#include <array>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <string>

#include "slcomb/comb_forge.hpp"
#include "slcomb/errors.hpp"
#include "slcomb/oracle.hpp"
#include "slcomb/tensor_algebra.hpp"

namespace slcomb {

namespace {

constexpr std::uint64_t kPanelSeed = 0x9a4e1c0ffee5eedULL;

// sum over permutations of prod |m_{k, sigma(k)}|
double abs_permanent(const std::vector<double>& a, std::size_t n, std::size_t row, std::vector<bool>& used) {
  if (row == n) return 1.0;
  double sum = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    if (used[c] || a[row * n + c] == 0.0) continue;
    used[c] = true;
    sum += a[row * n + c] * abs_permanent(a, n, row + 1, used);
    used[c] = false;
  }
  return sum;
}

const ComplexMatrix* ptr(const ComplexMatrix& m) { return &m; }

Complex form3(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c, const PureState& psi) {
  const std::array<const ComplexMatrix*, 3> ops{ptr(a), ptr(b), ptr(c)};
  return bilinear_form(ops, psi);
}

void require_dims(const PureState& psi, int d, std::size_t p, const char* who) {
  if (psi.local_dim() != d || psi.parties() != p)
    throw ShapeMismatch(std::string(who) + ": expected (d=" + std::to_string(d) + ", p=" + std::to_string(p) +
                        "), got (d=" + std::to_string(psi.local_dim()) + ", p=" + std::to_string(psi.parties()) +
                        ")");
}

InvariantValue from_detail(const ExpectationDetail& e) {
  return {e.value, e.magnitude, e.terms, e.distinct_forms, e.form_lookups};
}

// Tuple id of (t_a, t_b, xi) inside an expression, memoized by factor ids.
struct TupleCache {
  OperatorExpression& expr;
  std::vector<FactorId> letters;
  std::unordered_map<std::uint64_t, TupleId> ids;

  TupleId get(std::size_t a, std::size_t b, FactorId xi) {
    const std::uint64_t key = (static_cast<std::uint64_t>(xi) << 16) | (a << 8) | b;
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    const std::array<FactorId, 3> t{letters[a], letters[b], xi};
    const TupleId id = expr.add_tuple(t);
    ids.emplace(key, id);
    return id;
  }
};

}  // namespace

double relative_deviation(Complex a, Complex b, double scale) {
  const double diff = std::abs(a - b);
  if (std::abs(b) > 1e-8 * scale) return diff / std::abs(b);
  if (scale > 0.0) return diff / scale;
  return diff;
}

Complex det_invariant(const PureState& psi) {
  if (psi.parties() != 2) throw ShapeMismatch("det_invariant: two-party state required");
  const auto d = static_cast<Eigen::Index>(psi.local_dim());
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) m(r, c) = psi[static_cast<std::size_t>(r * d + c)];
  return m.partialPivLu().determinant();
}

const OperatorExpression& t2_spin1_expression() {
  static const OperatorExpression expr = [] {
    const auto tau = comb_letters(3);
    OperatorExpression e(3, 2, 3);
    std::array<FactorId, 3> t{};
    for (std::size_t k = 0; k < 3; ++k) t[k] = e.add_factor(tau[k]);
    for (const auto& e1 : levi_civita_entries()) {
      for (const auto& e2 : levi_civita_entries()) {
        const std::array grid{t[e1.index[0]], t[e2.index[0]], t[e1.index[1]],
                              t[e2.index[1]], t[e1.index[2]], t[e2.index[2]]};
        e.add_term(-static_cast<double>(e1.sign * e2.sign) / 48.0, grid);
      }
    }
    return e;
  }();
  return expr;
}

Complex t2_spin1(const PureState& psi) {
  require_dims(psi, 3, 2, "t2_spin1");
  return antilinear_expectation(t2_spin1_expression(), psi);
}

const OperatorExpression& det_spin32_expression() {
  static const OperatorExpression expr = [] {
    const auto tau = comb_letters(4);
    OperatorExpression e(4, 2, 2);
    std::array<FactorId, 6> t{};
    for (std::size_t k = 0; k < 6; ++k) t[k] = e.add_factor(tau[k]);
    for (int i = 1; i <= 6; ++i) {
      for (int j = 1; j <= 6; ++j) {
        const auto ui = static_cast<std::size_t>(i - 1), uj = static_cast<std::size_t>(j - 1);
        const std::array grid{t[ui], t[uj], t[5 - ui], t[5 - uj]};
        e.add_term(static_cast<double>(alternating_sign(i) * alternating_sign(j)) / 24.0, grid);
      }
    }
    return e;
  }();
  return expr;
}

Complex det_spin32_from_combs(const PureState& psi) {
  require_dims(psi, 4, 2, "det_spin32_from_combs");
  return antilinear_expectation(det_spin32_expression(), psi);
}

InvariantValue t3_spin1_detail(const PureState& psi) {
  require_dims(psi, 3, 3, "t3_spin1");
  const auto tau = comb_letters(3);
  const OFamily& fam = o_family(3);

  // W[i1 i2 l1 l2 i l] and its modulus bound, flattened in that order.
  constexpr std::size_t n = 3;
  std::vector<Complex> w(729);
  std::vector<double> wmag(729);
  std::size_t forms = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      const auto& pairs = fam.pairs(i, l);
      std::vector<Complex> first(9 * pairs.size()), second(9 * pairs.size());
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t mu = 0; mu < pairs.size(); ++mu) {
            first[(a * n + b) * pairs.size() + mu] = form3(tau[a], tau[b], pairs[mu].first, psi);
            second[(a * n + b) * pairs.size() + mu] = form3(tau[a], tau[b], pairs[mu].second, psi);
            forms += 2;
          }
        }
      }
      for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t i2 = 0; i2 < n; ++i2)
          for (std::size_t l1 = 0; l1 < n; ++l1)
            for (std::size_t l2 = 0; l2 < n; ++l2) {
              Complex s = 0.0;
              double m = 0.0;
              for (std::size_t mu = 0; mu < pairs.size(); ++mu) {
                const Complex x = first[(i1 * n + i2) * pairs.size() + mu];
                const Complex y = second[(l1 * n + l2) * pairs.size() + mu];
                s += x * y;
                m += std::abs(x) * std::abs(y);
              }
              const std::size_t idx = ((((i1 * n + i2) * n + l1) * n + l2) * n + i) * n + l;
              w[idx] = s;
              wmag[idx] = m;
            }
    }
  }
  auto at = [](std::size_t i1, std::size_t i2, std::size_t l1, std::size_t l2, std::size_t i, std::size_t l) {
    return ((((i1 * 3 + i2) * 3 + l1) * 3 + l2) * 3 + i) * 3 + l;
  };

  const auto eps = levi_civita_entries();
  Complex sum = 0.0;
  double mag = 0.0;
  for (const auto& e1 : eps)            // i1 j1 k1
    for (const auto& e2 : eps)          // l1 m1 n1
      for (const auto& e3 : eps)        // i2 j2 k2
        for (const auto& e4 : eps)      // l2 m2 n2
          for (const auto& e5 : eps)    // i j k
            for (const auto& e6 : eps) {  // l m n
              const int sign = e1.sign * e2.sign * e3.sign * e4.sign * e5.sign * e6.sign;
              Complex v = static_cast<double>(sign);
              double m = 1.0;
              for (std::size_t c = 0; c < 3; ++c) {
                const std::size_t idx = at(static_cast<std::size_t>(e1.index[c]), static_cast<std::size_t>(e3.index[c]),
                                           static_cast<std::size_t>(e2.index[c]), static_cast<std::size_t>(e4.index[c]),
                                           static_cast<std::size_t>(e5.index[c]), static_cast<std::size_t>(e6.index[c]));
                v *= w[idx];
                m *= wmag[idx];
              }
              sum += v;
              mag += m;
            }
  return {sum, mag, 46656 * 64, forms, 46656 * 64 * 6};
}

Complex t3_spin1(const PureState& psi) { return t3_spin1_detail(psi).value; }

OperatorExpression t3_spin1_expression() {
  const auto tau = comb_letters(3);
  const OFamily& fam = o_family(3);
  OperatorExpression e(3, 3, 6);
  TupleCache cache{e, {}, {}};
  for (const auto& t : tau) cache.letters.push_back(e.add_factor(t));

  // xi ids per (i, l, mu)
  std::vector<std::vector<std::pair<FactorId, FactorId>>> xi(9);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t l = 0; l < 3; ++l)
      for (const auto& p : fam.pairs(i, l)) xi[i * 3 + l].push_back({e.add_factor(p.first), e.add_factor(p.second)});

  const auto eps = levi_civita_entries();
  std::array<TupleId, 6> tuples{};
  for (const auto& e1 : eps)
    for (const auto& e2 : eps)
      for (const auto& e3 : eps)
        for (const auto& e4 : eps)
          for (const auto& e5 : eps)
            for (const auto& e6 : eps) {
              const double sign = static_cast<double>(e1.sign * e2.sign * e3.sign * e4.sign * e5.sign * e6.sign);
              const auto& x0 = xi[static_cast<std::size_t>(e5.index[0] * 3 + e6.index[0])];
              const auto& x1 = xi[static_cast<std::size_t>(e5.index[1] * 3 + e6.index[1])];
              const auto& x2 = xi[static_cast<std::size_t>(e5.index[2] * 3 + e6.index[2])];
              auto slot = [&](std::size_t c, FactorId f, bool back) {
                const auto& ea = back ? e2 : e1;
                const auto& eb = back ? e4 : e3;
                return cache.get(static_cast<std::size_t>(ea.index[c]), static_cast<std::size_t>(eb.index[c]), f);
              };
              for (const auto& [a0, b0] : x0)
                for (const auto& [a1, b1] : x1)
                  for (const auto& [a2, b2] : x2) {
                    tuples = {slot(0, a0, false), slot(1, a1, false), slot(2, a2, false),
                              slot(0, b0, true),  slot(1, b1, true),  slot(2, b2, true)};
                    e.add_term_tuples(sign, tuples);
                  }
            }
  return e;
}

InvariantValue t3_spin32_detail(const PureState& psi) {
  require_dims(psi, 4, 3, "t3_spin32");
  const auto tau = comb_letters(4);
  const OFamily& fam = o_family(4);
  constexpr std::size_t n = 6;

  // W[i j k l m n], flattened in that order.
  std::vector<Complex> w(46656);
  std::vector<double> wmag(46656);
  std::size_t forms = 0;
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t nn = 0; nn < n; ++nn) {
      const auto& pairs = fam.pairs(m, nn);
      const std::size_t r = pairs.size();
      std::vector<Complex> first(36 * r), second(36 * r);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t mu = 0; mu < r; ++mu) {
            first[(a * n + b) * r + mu] = form3(tau[a], tau[b], pairs[mu].first, psi);
            second[(a * n + b) * r + mu] = form3(tau[a], tau[b], pairs[mu].second, psi);
            forms += 2;
          }
      for (std::size_t ab = 0; ab < 36; ++ab)
        for (std::size_t kl = 0; kl < 36; ++kl) {
          Complex s = 0.0;
          double mg = 0.0;
          for (std::size_t mu = 0; mu < r; ++mu) {
            const Complex x = first[ab * r + mu];
            const Complex y = second[kl * r + mu];
            s += x * y;
            mg += std::abs(x) * std::abs(y);
          }
          const std::size_t idx = ((ab * 36 + kl) * n + m) * n + nn;
          w[idx] = s;
          wmag[idx] = mg;
        }
    }
  }

  std::array<double, 6> s{};
  for (int k = 1; k <= 6; ++k) s[static_cast<std::size_t>(k - 1)] = alternating_sign(k);

  Complex sum = 0.0;
  double mag = 0.0;
  for (std::size_t idx = 0; idx < 46656; ++idx) {
    std::array<std::size_t, 6> digit{};
    std::size_t rest = idx;
    for (std::size_t k = 6; k-- > 0;) {
      digit[k] = rest % n;
      rest /= n;
    }
    double sign = 1.0;
    std::size_t mirror = 0;
    for (std::size_t k = 0; k < 6; ++k) {
      sign *= s[digit[k]];
      mirror = mirror * n + (5 - digit[k]);
    }
    sum += sign * w[idx] * w[mirror];
    mag += wmag[idx] * wmag[mirror];
  }
  return {sum / 8.0, mag / 8.0, 46656 * 16, forms, 46656 * 16 * 4};
}

Complex t3_spin32(const PureState& psi) { return t3_spin32_detail(psi).value; }

OperatorExpression t3_spin32_expression() {
  const auto tau = comb_letters(4);
  const OFamily& fam = o_family(4);
  OperatorExpression e(4, 3, 4);
  TupleCache cache{e, {}, {}};
  for (const auto& t : tau) cache.letters.push_back(e.add_factor(t));

  std::vector<std::vector<std::pair<FactorId, FactorId>>> xi(36);
  for (std::size_t m = 0; m < 6; ++m)
    for (std::size_t n = 0; n < 6; ++n)
      for (const auto& p : fam.pairs(m, n)) xi[m * 6 + n].push_back({e.add_factor(p.first), e.add_factor(p.second)});

  std::array<TupleId, 4> tuples{};
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      for (std::size_t k = 0; k < 6; ++k)
        for (std::size_t l = 0; l < 6; ++l)
          for (std::size_t m = 0; m < 6; ++m)
            for (std::size_t n = 0; n < 6; ++n) {
              double sign = 1.0 / 8.0;
              for (std::size_t x : {i, j, k, l, m, n}) sign *= alternating_sign(static_cast<int>(x) + 1);
              for (const auto& [a0, b0] : xi[m * 6 + n])
                for (const auto& [a1, b1] : xi[(5 - m) * 6 + (5 - n)]) {
                  tuples = {cache.get(i, j, a0), cache.get(5 - i, 5 - j, a1), cache.get(k, l, b0),
                            cache.get(5 - k, 5 - l, b1)};
                  e.add_term_tuples(sign, tuples);
                }
            }
  return e;
}

std::vector<std::string> invariant_names() { return {"det", "det32_combs", "t2_spin1", "t3_spin1", "t3_spin32"}; }

InvariantSpec invariant_spec(std::string_view name, int local_dim) {
  auto fixed = [&](int d, std::size_t p) {
    if (local_dim != 0 && local_dim != d)
      throw ShapeMismatch(std::string(name) + ": expected (d=" + std::to_string(d) + ", p=" + std::to_string(p) +
                          "), got d=" + std::to_string(local_dim));
  };
  if (name == "det") {
    const int d = local_dim == 0 ? 3 : local_dim;
    if (d < 2 || d > 6) throw UnsupportedDimension("det: local dimension must lie in 2..6");
    return {"det", d, 2, d, 0, 1.0, "determinant of the d x d amplitude matrix",
            [](const PureState& psi) {
              const auto n = static_cast<std::size_t>(psi.local_dim());
              std::vector<double> a(n * n);
              for (std::size_t k = 0; k < a.size(); ++k) a[k] = std::abs(psi[k]);
              std::vector<bool> used(n, false);
              return InvariantValue{det_invariant(psi), abs_permanent(a, n, 0, used), 1, 0, 0};
            }};
  }
  if (name == "t2_spin1") {
    fixed(3, 2);
    return {"t2_spin1", 3, 2, 6, 3, -1.0 / 48.0,
            "-1/48 eps_{i1j1k1} eps_{i2j2k2} <<(t_i1 (x) t_i2) . (t_j1 (x) t_j2) . (t_k1 (x) t_k2)>>",
            [](const PureState& psi) {
              return from_detail(antilinear_expectation_detail(t2_spin1_expression(), psi));
            }};
  }
  if (name == "det32_combs") {
    fixed(4, 2);
    return {"det32_combs", 4, 2, 4, 2, 1.0 / 24.0,
            "1/24 sum_ij s_i s_j <<(t_i (x) t_j) . (t_{7-i} (x) t_{7-j})>>",
            [](const PureState& psi) {
              return from_detail(antilinear_expectation_detail(det_spin32_expression(), psi));
            }};
  }
  if (name == "t3_spin1") {
    fixed(3, 3);
    return {"t3_spin1", 3, 3, 12, 6, 1.0,
            "six epsilons; party 3 carries xi_{il;mu} on copy c and xi_il^mu on copy c+3",
            [](const PureState& psi) { return t3_spin1_detail(psi); }};
  }
  if (name == "t3_spin32") {
    fixed(4, 3);
    return {"t3_spin32", 4, 3, 8, 4, 1.0 / 8.0,
            "1/8 sum s_i..s_n; party 3 carries the xi pairs of O_mn (copies 1,3) and O_{7-m,7-n} (copies 2,4)",
            [](const PureState& psi) { return t3_spin32_detail(psi); }};
  }
  throw std::invalid_argument("unknown invariant '" + std::string(name) + "'");
}

void require_shape(const InvariantSpec& spec, const PureState& psi) {
  if (psi.local_dim() != spec.local_dim || psi.parties() != spec.parties)
    throw ShapeMismatch(spec.name + ": expected (d=" + std::to_string(spec.local_dim) + ", p=" +
                        std::to_string(spec.parties) + "), got (d=" + std::to_string(psi.local_dim()) + ", p=" +
                        std::to_string(psi.parties()) + ")");
}

InvariantReport evaluate_invariant(const InvariantSpec& spec, const PureState& psi) {
  require_shape(spec, psi);
  InvariantReport r;
  r.spec_name = spec.name;
  r.degree = spec.degree;
  r.notes.emplace_back(kConventionNote);
  if (spec.name == "t3_spin1") r.notes.emplace_back(kEpsilonReadingNote);

  const auto start = std::chrono::steady_clock::now();
  const InvariantValue v = spec.evaluate(psi);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  r.value = v.value;
  r.abs_value = std::abs(v.value);
  r.terms = v.terms;
  r.distinct_forms = v.distinct_forms;
  r.form_lookups = v.form_lookups;
  if (v.form_lookups > 0)
    r.cache_hit_rate = 1.0 - static_cast<double>(v.distinct_forms) / static_cast<double>(v.form_lookups);
  if (psi.norm() == 0.0) {
    r.zero_input = true;
    r.notes.emplace_back("zero input: the invariant vanishes by homogeneity");
  } else if (v.magnitude > 0.0 && r.abs_value <= 1e-12 * v.magnitude) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "value cancels to rounding: |value| / sum of term moduli = %.3g", r.abs_value / v.magnitude);
    r.notes.emplace_back(buf);
  }
  return r;
}

namespace {

template <class Sampler>
VerificationReport local_invariance(const InvariantSpec& spec, const PureState& psi, std::size_t trials, double tol,
                                    std::uint64_t seed, const std::string& name, Sampler sample) {
  require_shape(spec, psi);
  if (trials == 0) throw std::invalid_argument(name + ": trials must be >= 1");
  VerificationReport r{name, trials, tol, 0.0, 0, false, {}};
  const InvariantValue base = spec.evaluate(psi);
  const RngStream master(seed);
  bool vanishing = false;
  for (std::size_t k = 0; k < trials; ++k) {
    RngStream rng = master.split(k);
    std::vector<ComplexMatrix> ops;
    for (std::size_t a = 0; a < spec.parties; ++a) ops.push_back(sample(rng));
    const InvariantValue moved = spec.evaluate(psi.apply_local_all(ops));
    const double scale = std::max(base.magnitude, moved.magnitude);
    const double dev = relative_deviation(moved.value, base.value, scale);
    if (std::max(std::abs(moved.value), std::abs(base.value)) <= 1e-12 * scale) vanishing = true;
    if (k == 0 || dev > r.max_deviation) {
      r.max_deviation = dev;
      r.worst_trial = k;
    }
  }
  if (vanishing) r.notes.emplace_back("invariant vanishes on this state; deviation measured against the term scale");
  r.passed = r.max_deviation < tol;
  return r;
}

}  // namespace

VerificationReport sl_invariance_check(const InvariantSpec& spec, const PureState& psi, std::size_t trials,
                                       double tol, std::uint64_t seed, double cond_cap) {
  const auto d = static_cast<std::size_t>(spec.local_dim);
  return local_invariance(spec, psi, trials, tol, seed, "sl_invariance(" + spec.name + ")",
                          [d, cond_cap](RngStream& rng) { return random_sl(d, rng, cond_cap); });
}

VerificationReport su_invariance_check(const InvariantSpec& spec, const PureState& psi, std::size_t trials,
                                       double tol, std::uint64_t seed) {
  const auto d = static_cast<std::size_t>(spec.local_dim);
  return local_invariance(spec, psi, trials, tol, seed, "su_invariance(" + spec.name + ")",
                          [d](RngStream& rng) { return random_su(d, rng); });
}

PureState bipartite_product(const PureState& pair, const PureState& single, std::size_t single_position) {
  if (pair.parties() != 2 || single.parties() != 1 || pair.local_dim() != single.local_dim())
    throw ShapeMismatch("bipartite_product: need a two-party and a one-party state of equal d");
  if (single_position == 0) return PureState::product(single, pair);
  if (single_position == 2) return PureState::product(pair, single);
  if (single_position != 1) throw std::invalid_argument("bipartite_product: position must be 0, 1 or 2");
  const auto d = static_cast<std::size_t>(pair.local_dim());
  std::vector<Complex> amps(d * d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) amps[(a * d + b) * d + c] = pair[a * d + c] * single[b];
  return PureState(pair.local_dim(), 3, std::move(amps));
}

FilterReport product_state_filter_check(const InvariantSpec& spec, std::size_t trials, double tol,
                                        std::uint64_t seed) {
  if (spec.parties != 3) throw ShapeMismatch("product_state_filter_check: three-party spec required");
  if (trials == 0) throw std::invalid_argument("product_state_filter_check: trials must be >= 1");
  const int d = spec.local_dim;
  FilterReport out;
  out.overall = {"filter(" + spec.name + ")", trials, tol, 0.0, 0, false, {}};
  const RngStream master(seed);

  std::array<double*, 4> slots{&out.full_product, &out.split_a, &out.split_b, &out.split_c};
  for (std::size_t cls = 0; cls < 4; ++cls) {
    const RngStream class_rng = master.split(cls);
    for (std::size_t k = 0; k < trials; ++k) {
      RngStream rng = class_rng.split(k);
      PureState psi = [&] {
        if (cls == 0) {
          const PureState a = random_pure_state(d, 1, rng);
          const PureState b = random_pure_state(d, 1, rng);
          const PureState c = random_pure_state(d, 1, rng);
          return PureState::product(PureState::product(a, b), c);
        }
        const PureState pair = random_pure_state(d, 2, rng);
        const PureState single = random_pure_state(d, 1, rng);
        return bipartite_product(pair, single, cls - 1);
      }();
      const double v = std::abs(spec.evaluate(psi).value);
      *slots[cls] = std::max(*slots[cls], v);
      if (v > out.overall.max_deviation) {
        out.overall.max_deviation = v;
        out.overall.worst_trial = cls * trials + k;
      }
    }
  }
  out.overall.trials = 4 * trials;
  out.overall.passed = out.overall.max_deviation < tol;
  return out;
}

VerificationReport homogeneity_check(const InvariantSpec& spec, std::size_t trials, double tol, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("homogeneity_check: trials must be >= 1");
  VerificationReport r{"homogeneity(" + spec.name + ")", trials, tol, 0.0, 0, false, {}};
  const RngStream master(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    RngStream rng = master.split(k);
    const PureState psi = random_pure_state(spec.local_dim, spec.parties, rng);
    const Complex c = rng.complex_normal() + 0.5;
    const InvariantValue base = spec.evaluate(psi);
    const InvariantValue scaled = spec.evaluate(psi.scaled(c));
    const Complex expected = std::pow(c, spec.degree) * base.value;
    const double scale = std::pow(std::abs(c), spec.degree) * base.magnitude;
    const double dev = relative_deviation(scaled.value, expected, std::max(scale, scaled.magnitude));
    if (k == 0 || dev > r.max_deviation) {
      r.max_deviation = dev;
      r.worst_trial = k;
    }
  }
  r.passed = r.max_deviation < tol;
  return r;
}

bool value_equal(const OperatorExpression& a, const OperatorExpression& b, double tol) {
  if (a.local_dim() != b.local_dim() || a.parties() != b.parties() || a.copies() != b.copies()) return false;
  const RngStream master(kPanelSeed);
  for (std::size_t k = 0; k < 64; ++k) {
    RngStream rng = master.split(k);
    const PureState psi = random_pure_state(a.local_dim(), a.parties(), rng);
    const ExpectationDetail x = antilinear_expectation_detail(a, psi);
    const ExpectationDetail y = antilinear_expectation_detail(b, psi);
    if (relative_deviation(x.value, y.value, std::max(x.magnitude, y.magnitude)) > tol) return false;
  }
  return true;
}

}  // namespace slcomb
