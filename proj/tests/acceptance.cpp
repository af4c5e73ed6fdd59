// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "slcomb/comb_forge.hpp"
#include "slcomb/expectation.hpp"
#include "slcomb/invariant_engine.hpp"
#include "slcomb/oracle.hpp"
#include "slcomb/tensor_algebra.hpp"
#include "suites.hpp"

using namespace slcomb;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

int failures = 0;

void criterion(int id, const std::string& title, double runtime_limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o = body();
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::string runtime = "runtime " + num(s) + " s";
  if (runtime_limit_s > 0.0) {
    runtime += " (limit " + num(runtime_limit_s) + " s)";
    if (s >= runtime_limit_s) o.passed = false;
  }
  if (!o.passed) ++failures;
  std::printf("[%s] criterion %2d  %s: %s; %s\n", o.passed ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(),
              runtime.c_str());
  std::fflush(stdout);
}

bool within(double computed, double target, double rel) { return std::abs(computed - target) <= rel * std::abs(target); }

double max_frobenius_gap(const ComplexMatrix& a, const ComplexMatrix& b) { return a.max_abs_diff(b); }

}  // namespace

int main() {
  criterion(1, "permutation identities", 0.010, [] {
    const double d3 = max_frobenius_gap(permutation_from_generators(3), swap_operator(3));
    const double d4 = max_frobenius_gap(permutation_from_generators(4), swap_operator(4));
    return Outcome{d3 < 1e-14 && d4 < 1e-14, "max|P3 - S3| = " + num(d3) + ", max|P4 - S4| = " + num(d4)};
  });

  const Comb l3 = comb_spin1_order3(), l6 = comb_spin1_order6();
  const Comb l2 = comb_spin32_order2(), l4 = comb_spin32_order4();

  criterion(2, "trace constants (rel 1e-9)", 5.0, [&] {
    const ComplexMatrix b3 = circ_product(l3, l3).expression.materialize();
    const ComplexMatrix b2 = circ_product(l2, l2).expression.materialize();
    const double t1 = trace_pairing(b3, b3).real();
    const double t2 = trace_pairing(b3, l6.expression.materialize()).real();
    const double t3 = trace_pairing(b2, b2).real();
    const double t4 = trace_pairing(l4.expression.materialize(), b2).real();
    const bool ok = within(t1, 2304, 1e-9) && within(t2, 31104, 1e-9) && within(t3, 9, 1e-9) && within(t4, 1.5, 1e-9);
    return Outcome{ok, "tr(L3oL3)=" + num(t1) + " [2304], tr((L3oL3)L6)=" + num(t2) + " [31104], tr(L2oL2)=" +
                           num(t3) + " [9], tr(L4(L2oL2))=" + num(t4) + " [3/2]"};
  });

  criterion(3, "orthogonalization coefficients", 0.0, [&] {
    const Comb b3 = circ_product(l3, l3), b2 = circ_product(l2, l2);
    const Complex c3 = orthogonalization_coefficient(l6, b3);
    const Complex c2 = orthogonalization_coefficient(l4, b2);
    const double r3 = std::abs(comb_trace_pairing(orthogonalize(l6, b3), b3));
    const double r2 = std::abs(comb_trace_pairing(orthogonalize(l4, b2), b2));
    const bool ok = within(c3.real(), 13.5, 1e-9) && std::abs(c3.imag()) < 1e-12 && within(c2.real(), 1.0 / 6.0, 1e-9) &&
                    std::abs(c2.imag()) < 1e-12 && r3 < 1e-12 && r2 < 1e-12;
    return Outcome{ok, "spin-1 coefficient " + num(c3.real()) + " [27/2], spin-3/2 coefficient " + num(c2.real()) +
                           " [1/6], residual traces " + num(r3) + ", " + num(r2)};
  });

  criterion(4, "O-family structure", 1.0, [] {
    std::size_t checked = 0, bad = 0;
    for (int d : {3, 4}) {
      const OFamily& f = o_family(d);
      for (std::size_t i = 0; i < f.range; ++i) {
        for (std::size_t j = 0; j < f.range; ++j) {
          std::size_t plus = 0, minus = 0, other = 0;
          for (const auto& z : f.at(i, j).entries()) {
            if (z == Complex{}) continue;
            (z == Complex(1.0) ? plus : z == Complex(-1.0) ? minus : other) += 1;
          }
          const bool ok = plus == 2 && minus == 2 && other == 0 &&
                          f.at(j, i).max_abs_diff(f.at(i, j).transpose()) == 0.0;
          bad += ok ? 0 : 1;
          ++checked;
        }
      }
    }
    return Outcome{checked == 45 && bad == 0, num(static_cast<double>(checked)) + " operators, " +
                                                  num(static_cast<double>(bad)) + " violating"};
  });

  const std::vector<Comb> combs{comb_qubit(1), comb_qubit(2), comb_qubit(3), l3, l6, l2, l4};

  criterion(5, "comb conditions (500 states, < 1e-10)", 30.0, [&] {
    double worst = 0.0;
    std::string failing;
    for (const auto& c : combs) {
      const auto v = verify_comb(c, 500, 1e-10, 2024);
      worst = std::max(worst, v.max_abs_value);
      if (!v.passed) failing += " " + c.label;
    }
    return Outcome{failing.empty(), "7 combs, max |<<L>>| = " + num(worst) + (failing.empty() ? "" : ", failing:" + failing)};
  });

  criterion(6, "determinant identities (100 states, rel < 1e-10)", 10.0, [] {
    RngStream rng(6);
    double w3 = 0.0, w4 = 0.0;
    for (int k = 0; k < 100; ++k) {
      const PureState a = random_pure_state(3, 2, rng);
      const Complex d3 = determinant_oracle(a.amplitude_matrix());
      w3 = std::max(w3, std::abs(t2_spin1(a) - d3 * d3) / std::abs(d3 * d3));
      const PureState b = random_pure_state(4, 2, rng);
      const Complex d4 = determinant_oracle(b.amplitude_matrix());
      w4 = std::max(w4, std::abs(det_spin32_from_combs(b) - d4) / std::abs(d4));
    }
    return Outcome{w3 < 1e-10 && w4 < 1e-10, "t2_spin1 vs det^2: " + num(w3) + ", det32_combs vs det: " + num(w4)};
  });

  criterion(7, "filter property (50 states per class, < 1e-10)", 300.0, [] {
    std::string detail;
    bool ok = true;
    for (const char* name : {"t3_spin1", "t3_spin32"}) {
      const auto f = product_state_filter_check(invariant_spec(name), 50, 1e-10, 7);
      ok = ok && f.overall.passed;
      detail += std::string(detail.empty() ? "" : "; ") + name + " max over product/A|BC/B|AC/C|AB = " +
                num(f.full_product) + "/" + num(f.split_a) + "/" + num(f.split_b) + "/" + num(f.split_c);
    }
    return Outcome{ok, detail};
  });

  criterion(8, "SL invariance (100 transformations, rel < 1e-8, cond <= 50)", 600.0, [] {
    RngStream rng(8);
    std::string detail;
    bool ok = true;
    const std::vector<std::pair<std::string, int>> specs{{"det", 3}, {"t2_spin1", 0}, {"t3_spin1", 0}, {"t3_spin32", 0}};
    for (const auto& [name, d] : specs) {
      const InvariantSpec spec = invariant_spec(name, d);
      const PureState psi = random_pure_state(spec.local_dim, spec.parties, rng);
      const auto r = sl_invariance_check(spec, psi, 100, 1e-8, 88);
      ok = ok && r.passed;
      detail += (detail.empty() ? "" : ", ") + name + " " + num(r.max_deviation);
    }
    return Outcome{ok, detail};
  });

  criterion(9, "oracle equivalence (50 states, rel < 1e-12)", 60.0, [] {
    const auto panel = slcomb::app::oracle_panel();
    RngStream master(9);
    double worst = 0.0;
    std::string worst_name;
    std::uint64_t salt = 0;
    for (const auto& [name, expr] : panel) {
      const ComplexMatrix dense = brute_force_operator(expr);
      double frob = 0.0;
      for (const auto& z : dense.entries()) frob += std::norm(z);
      frob = std::sqrt(frob);
      RngStream rng = master.split(salt++);
      for (int k = 0; k < 50; ++k) {
        const PureState psi = random_pure_state(expr.local_dim(), expr.parties(), rng);
        const auto fast = antilinear_expectation_detail(expr, psi);
        const double dev = relative_deviation(fast.value, brute_force_bilinear(dense, psi, expr.copies()),
                                              std::max(fast.magnitude, frob));
        if (dev > worst) {
          worst = dev;
          worst_name = name;
        }
      }
    }
    return Outcome{worst < 1e-12, num(static_cast<double>(panel.size())) + " expressions, max deviation " + num(worst) +
                                      (worst_name.empty() ? "" : " (" + worst_name + ")")};
  });

  criterion(10, "S_n transitivity (20 permutation pairs per comb, < 1e-10)", 0.0, [&] {
    RngStream rng(10);
    double worst = 0.0;
    std::size_t twisted = 0;
    for (const auto& c : combs) {
      for (int k = 0; k < 20; ++k) {
        const auto l = random_permutation(c.order, rng), r = random_permutation(c.order, rng);
        worst = std::max(worst, verify_comb(sn_twist(c, l, r), 500, 1e-10, rng.next_u64()).max_abs_value);
        ++twisted;
      }
    }
    return Outcome{worst < 1e-10, num(static_cast<double>(twisted)) + " twisted combs, max |<<L>>| = " + num(worst)};
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
