#include <gtest/gtest.h>

#include <array>
#include <set>

#include "slcomb/comb_forge.hpp"
#include "slcomb/errors.hpp"
#include "slcomb/expectation.hpp"
#include "slcomb/oracle.hpp"

using namespace slcomb;

namespace {

std::vector<Comb> all_combs() {
  return {comb_qubit(1),         comb_qubit(2),          comb_qubit(3),         comb_spin1_order3(),
          comb_spin1_order6(),   comb_spin32_order2(),   comb_spin32_order4()};
}

}  // namespace

TEST(Combs, ShapesAndLabels) {
  const auto combs = all_combs();
  const std::array<std::size_t, 7> orders{1, 2, 3, 3, 6, 2, 4};
  const std::array<int, 7> dims{2, 2, 2, 3, 3, 4, 4};
  std::set<std::string> labels;
  for (std::size_t k = 0; k < combs.size(); ++k) {
    EXPECT_EQ(combs[k].order, orders[k]);
    EXPECT_EQ(combs[k].local_dim, dims[k]);
    EXPECT_EQ(combs[k].expression.copies(), orders[k]);
    EXPECT_EQ(combs[k].expression.parties(), 1u);
    labels.insert(combs[k].label);
  }
  EXPECT_EQ(labels.size(), combs.size());
  EXPECT_THROW(comb_qubit(4), std::invalid_argument);
}

TEST(Combs, VanishOnRandomStates) {
  for (const auto& c : all_combs()) {
    const auto v = verify_comb(c, 200, 1e-10, 3);
    EXPECT_TRUE(v.passed) << c.label << " max " << v.max_abs_value;
    EXPECT_EQ(v.trials, 200u);
  }
}

TEST(Combs, NonCombIsDetected) {
  Comb fake{2, 1, OperatorExpression(2, 1, 1), "identity"};
  const std::array<FactorId, 1> g{fake.expression.add_factor(ComplexMatrix::identity(2))};
  fake.expression.add_term(1.0, g);
  const auto v = verify_comb(fake, 20, 1e-10, 1);
  EXPECT_FALSE(v.passed);
  EXPECT_GT(v.max_abs_value, 1e-3);
}

TEST(Combs, VerificationIsReproducible) {
  const Comb c = comb_spin32_order4();
  const auto a = verify_comb(c, 30, 1e-10, 77), b = verify_comb(c, 30, 1e-10, 77);
  EXPECT_EQ(a.max_abs_value, b.max_abs_value);
  EXPECT_EQ(a.worst_trial, b.worst_trial);
}

TEST(Combs, LettersAreAntisymmetric) {
  for (int d : {3, 4}) {
    const auto letters = comb_letters(d);
    EXPECT_EQ(letters.size(), d == 3 ? 3u : 6u);
    for (const auto& l : letters) EXPECT_TRUE(l.transpose().approx_equal(l * Complex(-1.0), 0.0));
  }
}

TEST(Combs, AlternatingSigns) {
  const std::array<int, 6> expected{-1, 1, -1, -1, 1, -1};
  for (int i = 1; i <= 6; ++i) EXPECT_EQ(alternating_sign(i), expected[static_cast<std::size_t>(i - 1)]);
}

TEST(Combs, Spin1OrderSixTermCount) {
  const Comb l6 = comb_spin1_order6();
  EXPECT_EQ(l6.expression.materialize().count_nonzero(1e-12), 2304u);
}

TEST(Combs, QubitTraceIdentities) {
  const Comb y = comb_qubit(1), l2 = comb_qubit(2);
  const Comb yy = circ_product(y, y);
  EXPECT_LT(std::abs(comb_trace_pairing(l2, yy)), 1e-14);
  EXPECT_NEAR(comb_trace_pairing(l2, l2).real(), 12.0, 1e-14);
}

TEST(Combs, QubitTwistIdentity) {
  const Comb y = comb_qubit(1);
  const Comb yy = circ_product(y, y);
  const std::array<std::size_t, 2> id{0, 1}, tr{1, 0};
  const ComplexMatrix lhs = sn_twist(yy, id, tr).expression.materialize();
  const ComplexMatrix rhs = (comb_qubit(2).expression.materialize() - yy.expression.materialize()) * Complex(-0.5);
  EXPECT_LT(lhs.max_abs_diff(rhs), 1e-14);
}

TEST(Combs, TwistMatchesDenseConjugation) {
  const Comb c = comb_spin1_order3();
  const std::array<std::size_t, 3> l{1, 2, 0}, r{0, 2, 1};
  const ComplexMatrix expected =
      copy_permutation_operator(3, l) * c.expression.materialize() * copy_permutation_operator(3, r);
  EXPECT_LT(sn_twist(c, l, r).expression.materialize().max_abs_diff(expected), 1e-14);
}

TEST(Combs, TwistsStayCombs) {
  RngStream rng(8);
  for (const auto& c : all_combs()) {
    for (int k = 0; k < 3; ++k) {
      const auto l = random_permutation(c.order, rng), r = random_permutation(c.order, rng);
      EXPECT_TRUE(verify_comb(sn_twist(c, l, r), 50, 1e-10, 5).passed) << c.label;
    }
  }
}

TEST(Combs, CircProductPlacesCopies) {
  const Comb a = comb_spin1_order3();
  const Comb b = circ_product(a, a);
  EXPECT_EQ(b.order, 6u);
  EXPECT_EQ(b.label, "(L3_spin1)o(L3_spin1)");
  EXPECT_THROW(circ_product(a, comb_qubit(1)), ShapeMismatch);
}

TEST(Orthogonalize, ResultIsOrthogonalAndStillAComb) {
  for (auto [high, low] : {std::pair{comb_spin1_order6(), comb_spin1_order3()},
                           std::pair{comb_spin32_order4(), comb_spin32_order2()}}) {
    const Comb b = circ_product(low, low);
    const Comb o = orthogonalize(high, b);
    EXPECT_LT(std::abs(comb_trace_pairing(o, b)), 1e-12);
    EXPECT_TRUE(verify_comb(o, 50, 1e-10, 9).passed);
  }
}

TEST(Orthogonalize, DegeneratePivotThrows) {
  const Comb c = comb_qubit(1);
  Comb zero{2, 1, OperatorExpression(2, 1, 1), "zero"};
  EXPECT_THROW(orthogonalization_coefficient(c, zero), DegeneratePivot);
}

TEST(OFamily, StructureAndTranspose) {
  for (int d : {3, 4}) {
    const OFamily& f = o_family(d);
    EXPECT_EQ(f.range, d == 3 ? 3u : 6u);
    for (std::size_t i = 0; i < f.range; ++i) {
      for (std::size_t j = 0; j < f.range; ++j) {
        std::multiset<double> nonzero;
        for (const auto& z : f.at(i, j).entries()) {
          if (z == Complex{}) continue;
          EXPECT_EQ(z.imag(), 0.0);
          nonzero.insert(z.real());
        }
        EXPECT_EQ(nonzero, (std::multiset<double>{-1.0, -1.0, 1.0, 1.0})) << d << ": " << i << j;
        EXPECT_TRUE(f.at(j, i).approx_equal(f.at(i, j).transpose(), 0.0));
        EXPECT_EQ(f.pairs(i, j).size(), 4u);
      }
    }
  }
  EXPECT_THROW(o_family(2), UnsupportedDimension);
}

TEST(OFamily, DefinedAsLettersTimesSwap) {
  const auto t = comb_letters(3);
  const OFamily& f = o_family(3);
  EXPECT_TRUE(f.at(0, 2).approx_equal(kron(t[0], t[2]) * swap_operator(3), 1e-15));
}

TEST(OFamily, TabulationDeviationsAreExactlyTheKnownMisprints) {
  auto bad = [](int d) {
    std::set<std::pair<std::size_t, std::size_t>> out;
    for (const auto& e : compare_with_tabulation(d))
      if (e.max_abs_diff > 1e-14) out.insert({e.i, e.j});
    return out;
  };
  using S = std::set<std::pair<std::size_t, std::size_t>>;
  EXPECT_EQ(bad(3), (S{{3, 2}}));
  EXPECT_EQ(bad(4), (S{{1, 3}, {2, 2}, {2, 6}, {4, 6}}));
  EXPECT_EQ(compare_with_tabulation(3).size(), 9u);
  EXPECT_EQ(compare_with_tabulation(4).size(), 21u);
}
