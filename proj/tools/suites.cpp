#include "suites.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "slcomb/comb_forge.hpp"
#include "slcomb/errors.hpp"
#include "slcomb/expectation.hpp"
#include "slcomb/invariant_engine.hpp"
#include "slcomb/oracle.hpp"
#include "slcomb/tensor_algebra.hpp"
#include "state_file.hpp"

namespace slcomb::app {

namespace {

constexpr double kExact = 1e-14;
constexpr std::size_t kTwistPairs = 20;

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(12);
  s << v;
  return s.str();
}

double trace_tolerance(double target) { return 1e-9 * std::abs(target); }

double frobenius(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& z : m.entries()) s += std::norm(z);
  return std::sqrt(s);
}

void add_generator_checks(RunReport& r, int d) {
  const GeneratorBasis basis = generator_basis(d);
  double worst = 0.0;
  for (std::size_t i = 1; i < basis.size(); ++i)
    for (std::size_t j = 1; j < basis.size(); ++j)
      if (i != j) worst = std::max(worst, std::abs(trace_pairing(basis[i], basis[j])));
  r.checks.push_back(bound_check("generators d=" + std::to_string(d) + ": tr(l_i l_j) = 0 for i != j",
                                 Provenance::Property, worst, kExact));
  if (d == 3 || d == 4) {
    const double diff = permutation_from_generators(d).max_abs_diff(swap_operator(static_cast<std::size_t>(d)));
    r.checks.push_back(bound_check("P" + std::to_string(d) + " generator expansion = swap", Provenance::Reference,
                                   diff, kExact, "max |entry difference|"));
  }
}

void add_comb_check(RunReport& r, const Comb& c, const VerifyOptions& opt, std::uint64_t salt) {
  const CombVerification v = verify_comb(c, opt.trials, opt.tol, opt.seed ^ salt);
  r.checks.push_back(bound_check("comb " + c.label + " (order " + std::to_string(c.order) + ") Monte Carlo",
                                 Provenance::Property, v.max_abs_value, opt.tol,
                                 "max |<<L>>| over " + std::to_string(v.trials) + " Haar-random states"));
}

void add_twist_check(RunReport& r, const Comb& c, const VerifyOptions& opt, std::uint64_t salt) {
  RngStream rng = RngStream(opt.seed).split(salt);
  const std::size_t states = std::min<std::size_t>(opt.trials, 100);
  double worst = 0.0;
  for (std::size_t k = 0; k < kTwistPairs; ++k) {
    const auto left = random_permutation(c.order, rng);
    const auto right = random_permutation(c.order, rng);
    const Comb t = sn_twist(c, left, right);
    worst = std::max(worst, verify_comb(t, states, opt.tol, rng.next_u64()).max_abs_value);
  }
  r.checks.push_back(bound_check("twists of " + c.label + " keep the comb condition", Provenance::Property, worst,
                                 opt.tol,
                                 std::to_string(kTwistPairs) + " random (left, right) permutation pairs, " +
                                     std::to_string(states) + " states each"));
}

void add_o_family_checks(RunReport& r, int d) {
  const OFamily& fam = o_family(d);
  const std::string tag = " (d=" + std::to_string(d) + ")";
  std::size_t bad_structure = 0, bad_rank = 0;
  double transpose_diff = 0.0, reconstruction = 0.0;
  for (std::size_t i = 0; i < fam.range; ++i) {
    for (std::size_t j = 0; j < fam.range; ++j) {
      const ComplexMatrix& o = fam.at(i, j);
      std::size_t plus = 0, minus = 0, other = 0;
      for (const auto& z : o.entries()) {
        if (z == Complex{}) continue;
        if (z == Complex{1.0, 0.0}) ++plus;
        else if (z == Complex{-1.0, 0.0}) ++minus;
        else ++other;
      }
      if (plus != 2 || minus != 2 || other != 0) ++bad_structure;
      transpose_diff = std::max(transpose_diff, fam.at(j, i).max_abs_diff(o.transpose()));
      const auto& pairs = fam.pairs(i, j);
      if (pairs.size() != 4) ++bad_rank;
      ComplexMatrix sum(o.dim());
      for (const auto& p : pairs) sum += kron(p.first, p.second);
      reconstruction = std::max(reconstruction, sum.max_abs_diff(o));
    }
  }
  const double count = static_cast<double>(fam.range * fam.range);
  r.checks.push_back(compare_check("O-family" + tag + ": entries {+1,+1,-1,-1}", Provenance::Reference, 0.0,
                                   static_cast<double>(bad_structure), 0.0,
                                   "operators violating the four-entry structure, of " + fmt(count)));
  r.checks.push_back(bound_check("O-family" + tag + ": O_ji = O_ij^T", Provenance::Reference, transpose_diff,
                                 kExact));
  r.checks.push_back(compare_check("O-family" + tag + ": Schmidt rank 4", Provenance::Reference, 0.0,
                                   static_cast<double>(bad_rank), 0.0, "operators with rank != 4"));
  r.checks.push_back(bound_check("O-family" + tag + ": Schmidt pairs reconstruct O_ij", Provenance::Property,
                                 reconstruction, 1e-12));
  for (const auto& e : compare_with_tabulation(d)) {
    r.checks.push_back(advisory_check(
        "tabulated O_" + std::to_string(e.i) + std::to_string(e.j) + tag + " vs (t_i⊗t_j)·P" + std::to_string(d),
        Provenance::Regression, 0.0, e.max_abs_diff, kExact,
        e.max_abs_diff <= kExact ? "" : "tabulated form differs from the defining product; computed value is used"));
  }
}

void add_trace_checks(RunReport& r, const Comb& base, const Comb& high, const std::string& base_name,
                      const std::string& high_name, double self_target, double cross_target,
                      const std::string& self_label, const std::string& cross_label, const std::string& coef_label,
                      double coef_target) {
  const Comb circ = circ_product(base, base);
  const ComplexMatrix dc = circ.expression.materialize();
  const ComplexMatrix dh = high.expression.materialize();
  const double self = trace_pairing(dc, dc).real();
  const double cross = trace_pairing(dh, dc).real();
  const double bound = frobenius(dh) * frobenius(dc);

  r.checks.push_back(compare_check(self_label, Provenance::Reference, self_target, self,
                                   trace_tolerance(self_target),
                                   "dense " + std::to_string(dc.dim()) + "x" + std::to_string(dc.dim()) + " trace"));
  r.checks.push_back(compare_check(
      cross_label, Provenance::Reference, cross_target, cross, trace_tolerance(cross_target),
      "dense trace; |tr(AB)| <= ||A||_F ||B||_F = " + fmt(bound) + "; target/computed = " + fmt(cross_target / cross)));

  const double factored_diff = std::abs(comb_trace_pairing(high, circ) - Complex(cross)) +
                               std::abs(comb_trace_pairing(circ, circ) - Complex(self));
  r.checks.push_back(bound_check("factored traces agree with dense (" + high_name + ", " + base_name + ")",
                                 Provenance::Property, factored_diff, 1e-9));

  const Complex coef = orthogonalization_coefficient(high, circ);
  r.checks.push_back(compare_check(coef_label, Provenance::Reference, coef_target, coef.real(),
                                   1e-9 * std::abs(coef_target),
                                   "tr(A B) / tr(B B); ratio of the reference traces: " + fmt(cross_target / self_target)));

  const Comb orth = orthogonalize(high, circ);
  r.checks.push_back(bound_check("orthogonalized " + high_name + " is orthogonal to " + base_name + "∘" + base_name,
                                 Provenance::Property, std::abs(comb_trace_pairing(orth, circ)), 1e-12));
}

RunReport verify_qubit(const VerifyOptions& opt) {
  RunReport r;
  add_generator_checks(r, 2);
  for (int order = 1; order <= 3; ++order) {
    const Comb c = comb_qubit(order);
    add_comb_check(r, c, opt, 0x100 + static_cast<std::uint64_t>(order));
    add_twist_check(r, c, opt, 0x200 + static_cast<std::uint64_t>(order));
  }

  const Comb y = comb_qubit(1);
  const Comb l2 = comb_qubit(2);
  const Comb yy = circ_product(y, y);
  r.checks.push_back(compare_check("tr(L2_qubit·(sigma_y∘sigma_y)) = 0", Provenance::Property, 0.0,
                                   std::abs(comb_trace_pairing(l2, yy)), kExact));
  r.checks.push_back(compare_check("tr(L2_qubit·L2_qubit) = 12", Provenance::Property, 12.0,
                                   comb_trace_pairing(l2, l2).real(), kExact));

  const std::array<std::size_t, 2> id{0, 1}, tr{1, 0};
  const Comb twisted = sn_twist(yy, id, tr);
  const ComplexMatrix expected = (l2.expression.materialize() - yy.expression.materialize()) * Complex(-0.5);
  r.checks.push_back(bound_check("(sigma_y∘sigma_y)·P2 = -1/2(L2_qubit - sigma_y∘sigma_y)",
                                 Provenance::Reference, twisted.expression.materialize().max_abs_diff(expected),
                                 kExact));

  // Products of Pauli letters with an odd number of sigma_y.
  RngStream rng = RngStream(opt.seed).split(0x300);
  const GeneratorBasis s = generator_basis(2);
  double worst = 0.0;
  for (std::size_t k = 0; k < 20; ++k) {
    const std::size_t order = 1 + static_cast<std::size_t>(rng.next_u64() % 4);
    std::vector<std::size_t> letters(order);
    std::size_t ys = 0;
    for (auto& l : letters) {
      l = static_cast<std::size_t>(rng.next_u64() % 4);
      if (l == 2) ++ys;
    }
    if (ys % 2 == 0) letters[0] = letters[0] == 2 ? 0 : 2;
    OperatorExpression e(2, 1, order);
    std::vector<FactorId> grid;
    for (auto l : letters) grid.push_back(e.add_factor(s[l]));
    e.add_term(1.0, grid);
    for (std::size_t t = 0; t < 100; ++t) {
      const PureState psi = random_pure_state(2, 1, rng);
      worst = std::max(worst, std::abs(antilinear_expectation(e, psi)));
    }
  }
  r.checks.push_back(bound_check("products with an odd number of sigma_y vanish", Provenance::Property, worst, 1e-12,
                                 "20 random products, 100 states each"));
  return r;
}

RunReport verify_spin1(const VerifyOptions& opt) {
  RunReport r;
  add_generator_checks(r, 3);
  add_o_family_checks(r, 3);
  const Comb l3 = comb_spin1_order3();
  const Comb l6 = comb_spin1_order6();
  add_comb_check(r, l3, opt, 0x1300);
  add_comb_check(r, l6, opt, 0x1600);
  add_twist_check(r, l3, opt, 0x2300);
  add_twist_check(r, l6, opt, 0x2600);
  add_trace_checks(r, l3, l6, "L3", "L6", 2304.0, 31104.0, "tr(L3∘L3) = 2304", "tr((L3∘L3)·L6) = 31104",
                   "orthogonalization coefficient 27/2", 13.5);
  add_comb_check(r, orthogonalize(l6, circ_product(l3, l3)), opt, 0x1700);

  RngStream rng = RngStream(opt.seed).split(0x1800);
  double worst = 0.0;
  for (std::size_t k = 0; k < 100; ++k) {
    const PureState psi = random_pure_state(3, 2, rng);
    const Complex det = determinant_oracle(psi.amplitude_matrix());
    worst = std::max(worst, std::abs(t2_spin1(psi) - det * det) / std::abs(det * det));
  }
  r.checks.push_back(bound_check("t2_spin1 = det^2 on 100 random states", Provenance::Oracle, worst, 1e-10,
                                 "max relative deviation from the Laplace determinant squared"));

  std::vector<Complex> ghz(9);
  for (std::size_t i = 0; i < 3; ++i) ghz[i * 4] = 1.0 / std::sqrt(3.0);
  const PureState g(3, 2, ghz);
  r.checks.push_back(compare_check("t2_spin1 on (|00>+|11>+|22>)/sqrt3 = 1/27", Provenance::Oracle, 1.0 / 27.0,
                                   std::abs(t2_spin1(g)), 1e-12));
  return r;
}

RunReport verify_spin32(const VerifyOptions& opt) {
  RunReport r;
  add_generator_checks(r, 4);
  add_o_family_checks(r, 4);
  const Comb l2 = comb_spin32_order2();
  const Comb l4 = comb_spin32_order4();
  add_comb_check(r, l2, opt, 0x3200);
  add_comb_check(r, l4, opt, 0x3400);
  add_twist_check(r, l2, opt, 0x4200);
  add_twist_check(r, l4, opt, 0x4400);
  add_trace_checks(r, l2, l4, "L2", "L4", 9.0, 1.5, "tr(L2∘L2) = 9", "tr(L4·(L2∘L2)) = 3/2",
                   "orthogonalization coefficient 1/6", 1.0 / 6.0);
  add_comb_check(r, orthogonalize(l4, circ_product(l2, l2)), opt, 0x3500);

  const std::array<int, 6> signs{alternating_sign(1), alternating_sign(2), alternating_sign(3),
                                 alternating_sign(4), alternating_sign(5), alternating_sign(6)};
  const std::array<int, 6> expected{-1, 1, -1, -1, 1, -1};
  r.checks.push_back(compare_check("sign sequence (-1)^min(i,7-i) = (-1,+1,-1,-1,+1,-1)", Provenance::Reference,
                                   0.0, signs == expected ? 0.0 : 1.0, 0.0));

  RngStream rng = RngStream(opt.seed).split(0x3800);
  double worst = 0.0;
  for (std::size_t k = 0; k < 100; ++k) {
    const PureState psi = random_pure_state(4, 2, rng);
    const Complex det = determinant_oracle(psi.amplitude_matrix());
    worst = std::max(worst, std::abs(det_spin32_from_combs(psi) - det) / std::abs(det));
  }
  r.checks.push_back(bound_check("det32_combs = det on 100 random states", Provenance::Oracle, worst, 1e-10,
                                 "max relative deviation from the Laplace determinant"));

  std::vector<Complex> bell(16);
  for (std::size_t i = 0; i < 4; ++i) bell[i * 5] = 0.5;
  const PureState b(4, 2, bell);
  r.checks.push_back(compare_check("det32_combs on (1/2) sum |ii> = 1/16", Provenance::Oracle, 1.0 / 16.0,
                                   std::abs(det_spin32_from_combs(b)), 1e-12));
  return r;
}

void merge(RunReport& into, RunReport&& part, const std::string& prefix) {
  for (auto& c : part.checks) {
    c.name = prefix + c.name;
    into.checks.push_back(std::move(c));
  }
}

std::string verify_command(const VerifyOptions& opt) {
  return "verify --spin " + opt.spin + " --trials " + std::to_string(opt.trials) + " --tol " + fmt(opt.tol) +
         " --seed " + std::to_string(opt.seed);
}

}  // namespace

RunReport run_verify(const VerifyOptions& opt) {
  if (opt.trials == 0) throw std::invalid_argument("--trials must be >= 1");
  RunReport r;
  r.command = verify_command(opt);
  r.seed = opt.seed;
  if (opt.spin == "1/2") {
    merge(r, verify_qubit(opt), "");
  } else if (opt.spin == "1") {
    merge(r, verify_spin1(opt), "");
  } else if (opt.spin == "3/2") {
    merge(r, verify_spin32(opt), "");
  } else if (opt.spin == "all") {
    merge(r, verify_qubit(opt), "[1/2] ");
    merge(r, verify_spin1(opt), "[1] ");
    merge(r, verify_spin32(opt), "[3/2] ");
  } else {
    throw std::invalid_argument("unknown spin sector '" + opt.spin + "' (expected 1/2, 1, 3/2 or all)");
  }
  r.finalize();
  return r;
}

RunReport run_invariant(const InvariantOptions& opt) {
  const PureState psi = load_state_file(opt.state_path);
  const InvariantSpec spec = invariant_spec(opt.spec_name, opt.spec_name == "det" ? psi.local_dim() : 0);
  require_shape(spec, psi);

  RunReport r;
  r.command = "invariant " + opt.spec_name + " " + opt.state_path + (opt.check_sl ? " --check-sl" : "") +
              " --trials " + std::to_string(opt.trials) + " --seed " + std::to_string(opt.seed);
  r.seed = opt.seed;

  const InvariantReport rep = evaluate_invariant(spec, psi);
  nlohmann::ordered_json inv;
  inv["name"] = spec.name;
  inv["state_label"] = psi.label();
  inv["local_dim"] = spec.local_dim;
  inv["parties"] = spec.parties;
  inv["degree"] = rep.degree;
  inv["prefactor"] = {{"re", spec.prefactor.real()}, {"im", spec.prefactor.imag()}};
  inv["value"] = {{"re", rep.value.real()}, {"im", rep.value.imag()}};
  inv["abs"] = rep.abs_value;
  inv["recipe"] = spec.recipe;
  inv["diagnostics"] = {{"terms", rep.terms},
                        {"distinct_forms", rep.distinct_forms},
                        {"form_lookups", rep.form_lookups},
                        {"cache_hit_rate", rep.cache_hit_rate},
                        {"zero_input", rep.zero_input}};
  inv["notes"] = rep.notes;
  r.invariant = std::move(inv);

  if (opt.check_sl) {
    const VerificationReport sl = sl_invariance_check(spec, psi, opt.trials, opt.tol, opt.seed);
    std::string detail = std::to_string(sl.trials) + " random local SL transformations, condition number <= 50";
    for (const auto& n : sl.notes) detail += "; " + n;
    r.checks.push_back(bound_check(sl.name, Provenance::Property, sl.max_deviation, opt.tol, detail));
  }
  r.finalize();
  return r;
}

std::vector<NamedExpression> oracle_panel() {
  std::vector<NamedExpression> out;
  for (int order = 1; order <= 3; ++order) {
    Comb c = comb_qubit(order);
    out.push_back({c.label, c.expression});
  }
  const Comb l3 = comb_spin1_order3(), l6 = comb_spin1_order6();
  const Comb l2 = comb_spin32_order2(), l4 = comb_spin32_order4();
  const Comb b3 = circ_product(l3, l3), b2 = circ_product(l2, l2);
  out.push_back({l3.label, l3.expression});
  out.push_back({l6.label, l6.expression});
  out.push_back({l2.label, l2.expression});
  out.push_back({l4.label, l4.expression});
  out.push_back({"L3_spin1∘L3_spin1", b3.expression});
  out.push_back({"L2_spin32∘L2_spin32", b2.expression});
  out.push_back({"orthogonalized L6_spin1", orthogonalize(l6, b3).expression});
  out.push_back({"orthogonalized L4_spin32", orthogonalize(l4, b2).expression});
  const std::array<std::size_t, 3> cyc{1, 2, 0}, rev{2, 1, 0};
  const std::array<std::size_t, 4> rot{3, 0, 1, 2}, swp{1, 0, 3, 2};
  const std::array<std::size_t, 6> six{5, 3, 4, 0, 2, 1}, id6{0, 1, 2, 3, 4, 5};
  out.push_back({"twisted L3_spin1", sn_twist(l3, cyc, rev).expression});
  out.push_back({"twisted L6_spin1", sn_twist(l6, six, id6).expression});
  out.push_back({"twisted L4_spin32", sn_twist(l4, rot, swp).expression});
  out.push_back({"t2_spin1 lift", t2_spin1_expression()});
  out.push_back({"det32 lift", det_spin32_expression()});

  // Generic dense three-party expression with random factors.
  RngStream rng(0xd1ce);
  OperatorExpression mixed(2, 3, 2);
  for (std::size_t t = 0; t < 5; ++t) {
    FactoredTerm term{rng.complex_normal(), {}};
    for (std::size_t k = 0; k < 6; ++k) {
      ComplexMatrix f(2);
      for (auto& z : f.entries()) z = rng.complex_normal();
      term.factors.push_back(f);
    }
    mixed.add_term(term);
  }
  out.push_back({"random 3-party 2-copy expression", std::move(mixed)});
  return out;
}

RunReport run_selfcheck(const SelfcheckOptions& opt) {
  if (opt.trials == 0) throw std::invalid_argument("--trials must be >= 1");
  std::optional<PureState> user_state;
  if (opt.state_path) user_state = load_state_file(*opt.state_path);

  RunReport r;
  r.command = "selfcheck --trials " + std::to_string(opt.trials) + " --seed " + std::to_string(opt.seed) +
              (opt.state_path ? " --state " + *opt.state_path : "");
  r.seed = opt.seed;
  const RngStream master(opt.seed);

  const std::vector<NamedExpression> panel = oracle_panel();
  std::uint64_t salt = 1;
  for (const auto& [name, expr] : panel) {
    const ComplexMatrix dense = brute_force_operator(expr);
    const double bound = frobenius(dense);
    RngStream rng = master.split(salt++);
    double worst = 0.0;
    for (std::size_t k = 0; k < opt.trials; ++k) {
      const PureState psi = random_pure_state(expr.local_dim(), expr.parties(), rng);
      const ExpectationDetail fast = antilinear_expectation_detail(expr, psi);
      const Complex slow = brute_force_bilinear(dense, psi, expr.copies());
      worst = std::max(worst, relative_deviation(fast.value, slow, std::max(fast.magnitude, bound)));
    }
    r.checks.push_back(bound_check("oracle equivalence: " + name, Provenance::Oracle, worst, 1e-12,
                                   std::to_string(opt.trials) + " states, dense dim " + std::to_string(dense.dim()) +
                                       "; relative to |oracle| or max(magnitude, ||M||_F)"));
  }

  for (std::size_t d : {3u, 4u}) {
    RngStream rng = master.split(salt++);
    double worst = 0.0;
    for (std::size_t k = 0; k < 100; ++k) {
      const PureState psi = random_pure_state(static_cast<int>(d), 2, rng);
      const Complex lap = determinant_oracle(psi.amplitude_matrix());
      worst = std::max(worst, std::abs(det_invariant(psi) - lap) / std::abs(lap));
    }
    r.checks.push_back(bound_check("determinant oracle vs det_invariant (d=" + std::to_string(d) + ")",
                                   Provenance::Oracle, worst, 1e-12, "100 random amplitude matrices"));
  }

  std::vector<InvariantSpec> specs{invariant_spec("det", 3), invariant_spec("det", 4), invariant_spec("t2_spin1"),
                                   invariant_spec("det32_combs"), invariant_spec("t3_spin1"),
                                   invariant_spec("t3_spin32")};
  for (const auto& spec : specs) {
    const VerificationReport h = homogeneity_check(spec, std::min<std::size_t>(opt.trials, 20), 1e-10,
                                                   master.split(salt++).seed());
    r.checks.push_back(bound_check(h.name + (spec.name == "det" ? " d=" + std::to_string(spec.local_dim) : ""),
                                   Provenance::Property, h.max_deviation, 1e-10,
                                   "degree " + std::to_string(spec.degree)));
  }

  {
    RngStream a(opt.seed), b(opt.seed);
    std::size_t mismatches = 0;
    for (std::size_t k = 0; k < 1000; ++k) mismatches += a.next_u64() != b.next_u64();
    RngStream s1 = master.split(salt), s2 = master.split(salt);
    ++salt;
    const PureState p1 = random_pure_state(3, 3, s1), p2 = random_pure_state(3, 3, s2);
    const Complex v1 = t3_spin1(p1), v2 = t3_spin1(p2);
    if (v1 != v2) ++mismatches;
    const Complex g1 = antilinear_expectation(comb_spin1_order6().expression, random_pure_state(3, 1, s1));
    const Complex g2 = antilinear_expectation(comb_spin1_order6().expression, random_pure_state(3, 1, s2));
    if (g1 != g2) ++mismatches;
    r.checks.push_back(compare_check("determinism: identical seeds give bit-identical values", Provenance::Property,
                                     0.0, static_cast<double>(mismatches), 0.0));
  }

  if (user_state) {
    const PureState& psi = *user_state;
    const std::string tag = psi.label().empty() ? std::string("state file") : "state '" + psi.label() + "'";
    for (const auto& [name, expr] : panel) {
      if (expr.local_dim() != psi.local_dim() || expr.parties() != psi.parties()) continue;
      const ExpectationDetail fast = antilinear_expectation_detail(expr, psi);
      const ComplexMatrix dense = brute_force_operator(expr);
      const Complex slow = brute_force_bilinear(dense, psi, expr.copies());
      const double scale = std::max(fast.magnitude, frobenius(dense) * std::pow(psi.norm(), 2.0 * expr.copies()));
      r.checks.push_back(bound_check("oracle equivalence on " + tag + ": " + name, Provenance::Oracle,
                                     relative_deviation(fast.value, slow, scale), 1e-12));
    }
    if (psi.parties() == 2 && psi.local_dim() <= 6) {
      const Complex lap = determinant_oracle(psi.amplitude_matrix());
      const Complex det = det_invariant(psi);
      const double scale = std::max(std::abs(lap), 1e-300);
      r.checks.push_back(bound_check("determinant oracle vs det_invariant on " + tag, Provenance::Oracle,
                                     std::abs(det - lap) / scale, 1e-12));
    }
  }

  r.finalize();
  return r;
}

}  // namespace slcomb::app
