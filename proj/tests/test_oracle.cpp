#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "slcomb/errors.hpp"
#include "slcomb/oracle.hpp"

using namespace slcomb;

TEST(Rng, Reproducible) {
  RngStream a(42), b(42);
  for (int k = 0; k < 100; ++k) EXPECT_EQ(a.next_u64(), b.next_u64());
  RngStream c(42);
  EXPECT_EQ(c.split(3).next_u64(), RngStream(42).split(3).next_u64());
  EXPECT_NE(c.split(3).next_u64(), c.split(4).next_u64());
}

TEST(Rng, ComplexNormalHasUnitVariance) {
  RngStream r(1);
  double s = 0.0;
  Complex mean{};
  const int n = 20000;
  for (int k = 0; k < n; ++k) {
    const Complex z = r.complex_normal();
    s += std::norm(z);
    mean += z;
  }
  EXPECT_NEAR(s / n, 1.0, 0.03);
  EXPECT_LT(std::abs(mean) / n, 0.02);
}

TEST(Rng, UniformRange) {
  RngStream r(2);
  for (int k = 0; k < 1000; ++k) {
    const double u = r.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Rng, PermutationsAreBijections) {
  RngStream r(3);
  std::set<std::vector<std::size_t>> seen;
  for (int k = 0; k < 200; ++k) {
    auto p = random_permutation(4, r);
    seen.insert(p);
    std::sort(p.begin(), p.end());
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(p[i], i);
  }
  EXPECT_EQ(seen.size(), 24u);
}

TEST(Sampler, PureStatesAreNormalized) {
  RngStream r(4);
  for (int d : {2, 3, 4}) EXPECT_NEAR(random_pure_state(d, 3, r).norm(), 1.0, 1e-13);
}

TEST(Sampler, SlHasUnitDeterminantAndBoundedCondition) {
  RngStream r(5);
  for (std::size_t d : {2u, 3u, 4u}) {
    for (int k = 0; k < 50; ++k) {
      const ComplexMatrix a = random_sl(d, r, 50.0);
      EXPECT_LT(std::abs(determinant_oracle(a) - Complex(1.0)), 1e-12);
      EXPECT_LE(condition_number(a), 50.0);
    }
  }
}

TEST(Sampler, SlRejectsImpossibleCap) {
  RngStream r(6);
  EXPECT_THROW(random_sl(3, r, 1.0 + 1e-12, 5), SamplerExhausted);
}

TEST(Sampler, SuIsUnitaryWithUnitDeterminant) {
  RngStream r(7);
  for (std::size_t d : {2u, 3u, 4u}) {
    const ComplexMatrix u = random_su(d, r);
    EXPECT_LT((u.adjoint() * u).max_abs_diff(ComplexMatrix::identity(d)), 1e-12);
    EXPECT_LT(std::abs(determinant_oracle(u) - Complex(1.0)), 1e-12);
  }
}

TEST(DeterminantOracle, KnownValues) {
  EXPECT_EQ(determinant_oracle(ComplexMatrix::from_rows({{1.0, 2.0}, {3.0, 4.0}})), Complex(-2.0));
  EXPECT_EQ(determinant_oracle(ComplexMatrix::diagonal({2.0, 3.0, Complex(0.0, 1.0)})), Complex(0.0, 6.0));
  EXPECT_THROW(determinant_oracle(ComplexMatrix::identity(7)), SizeCapExceeded);
}

TEST(BruteForce, BilinearOnCopies) {
  const PureState psi(2, 1, {0.6, Complex(0.0, 0.8)});
  // psi^T psi = 0.36 - 0.64
  EXPECT_NEAR(std::abs(brute_force_bilinear(ComplexMatrix::identity(2), psi, 1) - Complex(-0.28)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(brute_force_bilinear(ComplexMatrix::identity(4), psi, 2) - Complex(0.0784)), 0.0, 1e-15);
}
