#include <gtest/gtest.h>

#include "slcomb/errors.hpp"
#include "slcomb/invariant_engine.hpp"
#include "slcomb/oracle.hpp"
#include "test_helpers.hpp"

using namespace slcomb;
using slcomb::testing::ghz;

TEST(RelativeDeviation, FallsBackToScale) {
  EXPECT_NEAR(relative_deviation(1.1, 1.0, 1.0), 0.1, 1e-15);
  EXPECT_DOUBLE_EQ(relative_deviation(1e-12, 0.0, 2.0), 5e-13);
}

TEST(Det, MatchesOracle) {
  RngStream rng(21);
  for (int d = 2; d <= 4; ++d) {
    const PureState psi = random_pure_state(d, 2, rng);
    const Complex ref = determinant_oracle(psi.amplitude_matrix());
    EXPECT_LT(relative_deviation(det_invariant(psi), ref, 1.0), 1e-12);
  }
}

TEST(T2Spin1, EqualsDeterminantSquared) {
  RngStream rng(22);
  for (int k = 0; k < 20; ++k) {
    const PureState psi = random_pure_state(3, 2, rng);
    const Complex det = determinant_oracle(psi.amplitude_matrix());
    EXPECT_LT(relative_deviation(t2_spin1(psi), det * det, 1.0), 1e-10);
  }
  EXPECT_NEAR(std::abs(t2_spin1(ghz(3, 2))), 1.0 / 27.0, 1e-13);
}

TEST(T2Spin1, ExpressionShape) {
  const auto& e = t2_spin1_expression();
  EXPECT_EQ(e.copies(), 3u);
  EXPECT_EQ(e.parties(), 2u);
  EXPECT_EQ(e.term_count(), 36u);
}

TEST(DetSpin32, EqualsDeterminant) {
  RngStream rng(23);
  for (int k = 0; k < 20; ++k) {
    const PureState psi = random_pure_state(4, 2, rng);
    EXPECT_LT(relative_deviation(det_spin32_from_combs(psi), determinant_oracle(psi.amplitude_matrix()), 1.0), 1e-10);
  }
  EXPECT_NEAR(std::abs(det_spin32_from_combs(ghz(4, 2))), 1.0 / 16.0, 1e-13);
}

TEST(T3Spin1, GhzValue) {
  const auto v = t3_spin1_detail(ghz(3, 3));
  EXPECT_NEAR(v.value.real(), 16.0 / 243.0, 1e-13);
  EXPECT_NEAR(v.value.imag(), 0.0, 1e-13);
  EXPECT_GT(v.magnitude, 0.0);
}

TEST(T3Spin1, FastPathMatchesGenericExpression) {
  const OperatorExpression e = t3_spin1_expression();
  EXPECT_EQ(e.copies(), 6u);
  EXPECT_EQ(e.parties(), 3u);
  RngStream rng(24);
  for (int k = 0; k < 2; ++k) {
    const PureState psi = random_pure_state(3, 3, rng);
    const auto fast = t3_spin1_detail(psi);
    EXPECT_LT(relative_deviation(fast.value, antilinear_expectation(e, psi), fast.magnitude), 1e-11);
  }
}

TEST(T3Spin32, FastPathMatchesGenericExpression) {
  const OperatorExpression e = t3_spin32_expression();
  EXPECT_EQ(e.copies(), 4u);
  RngStream rng(25);
  const PureState psi = random_pure_state(4, 3, rng);
  const auto fast = t3_spin32_detail(psi);
  EXPECT_LT(std::abs(fast.value - antilinear_expectation(e, psi)), 1e-12 * std::max(1.0, fast.magnitude));
}

TEST(T3Spin32, VanishesOnGhzAndRandomStates) {
  // The contraction cancels identically in this convention.
  RngStream rng(26);
  EXPECT_LT(std::abs(t3_spin32(ghz(4, 3))), 1e-14);
  const auto v = t3_spin32_detail(random_pure_state(4, 3, rng));
  EXPECT_LT(std::abs(v.value), 1e-12 * v.magnitude);
}

TEST(Specs, NamesAndShapes) {
  const auto names = invariant_names();
  EXPECT_EQ(names.size(), 5u);
  for (const auto& n : names) {
    const InvariantSpec s = invariant_spec(n);
    EXPECT_EQ(s.name, n);
    if (n != "det") EXPECT_EQ(static_cast<std::size_t>(s.degree), 2 * s.copies) << n;
  }
  EXPECT_EQ(invariant_spec("t3_spin1").degree, 12);
  EXPECT_EQ(invariant_spec("t3_spin32").degree, 8);
  EXPECT_EQ(invariant_spec("det", 5).degree, 5);
  EXPECT_THROW(invariant_spec("det", 7), std::invalid_argument);
  EXPECT_THROW(invariant_spec("t3_spin1", 4), ShapeMismatch);
  EXPECT_THROW(invariant_spec("unknown"), std::invalid_argument);
}

TEST(Specs, RequireShape) {
  EXPECT_THROW(require_shape(invariant_spec("t3_spin1"), ghz(3, 2)), ShapeMismatch);
  EXPECT_NO_THROW(require_shape(invariant_spec("t3_spin1"), ghz(3, 3)));
}

TEST(Evaluate, ReportsDiagnosticsAndZeroInput) {
  const auto spec = invariant_spec("t2_spin1");
  const auto r = evaluate_invariant(spec, ghz(3, 2));
  EXPECT_EQ(r.degree, 6);
  EXPECT_NEAR(r.abs_value, 1.0 / 27.0, 1e-13);
  EXPECT_FALSE(r.notes.empty());
  EXPECT_FALSE(r.zero_input);
  const auto z = evaluate_invariant(spec, PureState(3, 2, std::vector<Complex>(9)));
  EXPECT_TRUE(z.zero_input);
  EXPECT_EQ(z.abs_value, 0.0);
}

TEST(Invariance, SlAndSuOnTwoPartySpecs) {
  RngStream rng(27);
  for (const char* name : {"det", "t2_spin1", "det32_combs"}) {
    const auto spec = invariant_spec(name, std::string(name) == "det32_combs" ? 4 : 3);
    const PureState psi = random_pure_state(spec.local_dim, spec.parties, rng);
    EXPECT_TRUE(sl_invariance_check(spec, psi, 20, 1e-8, 3).passed) << name;
    EXPECT_TRUE(su_invariance_check(spec, psi, 20, 1e-8, 3).passed) << name;
  }
}

TEST(Invariance, NonInvariantIsDetected) {
  InvariantSpec fake = invariant_spec("det", 3);
  fake.name = "first_amplitude";
  fake.evaluate = [](const PureState& p) { return InvariantValue{p[0], std::abs(p[0]), 1, 0, 0}; };
  RngStream rng(28);
  EXPECT_FALSE(sl_invariance_check(fake, random_pure_state(3, 2, rng), 10, 1e-8, 1).passed);
}

TEST(Filter, T3Spin1VanishesOnProductClasses) {
  const auto f = product_state_filter_check(invariant_spec("t3_spin1"), 3, 1e-10, 5);
  EXPECT_TRUE(f.overall.passed);
  EXPECT_LT(std::max({f.full_product, f.split_a, f.split_b, f.split_c}), 1e-10);
}

TEST(Filter, BipartiteProductPlacement) {
  const PureState pair(2, 2, {0.0, 1.0, 0.0, 0.0});  // |01>
  const PureState one(2, 1, {0.0, 1.0});              // |1>
  EXPECT_EQ(bipartite_product(pair, one, 0)[0b101], Complex(1.0));
  EXPECT_EQ(bipartite_product(pair, one, 1)[0b011], Complex(1.0));
  EXPECT_EQ(bipartite_product(pair, one, 2)[0b011], Complex(1.0));
}

TEST(Homogeneity, AllSpecs) {
  for (const auto& n : invariant_names()) {
    if (n == "t3_spin1") continue;
    EXPECT_TRUE(homogeneity_check(invariant_spec(n), 5, 1e-10, 2).passed) << n;
  }
}

TEST(ValueEqual, DistinguishesExpressions) {
  EXPECT_TRUE(value_equal(t2_spin1_expression(), t2_spin1_expression()));
  EXPECT_FALSE(value_equal(t2_spin1_expression(), t2_spin1_expression().scaled(2.0)));
}
