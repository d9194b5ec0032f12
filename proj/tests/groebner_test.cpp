#include "sarx/groebner.hpp"

#include <gtest/gtest.h>

#include <random>

namespace sarx {
namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kZeta{"z1", "z2"};

MultiPoly var(const std::vector<std::string>& vars, std::size_t i) { return MultiPoly::variable(vars, i); }
MultiPoly cst(const std::vector<std::string>& vars, long v) { return MultiPoly::constant(vars, v); }

TEST(BuchbergerTest, LinearGenerators) {
  const auto basis = buchberger({var(kXY, 0) - var(kXY, 1), var(kXY, 1)}, MonomialOrder::lex(2));
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_EQ(basis[0], var(kXY, 1));
  EXPECT_EQ(basis[1], var(kXY, 0));
}

TEST(BuchbergerTest, ZeroAndUnitIdeals) {
  EXPECT_TRUE(buchberger({MultiPoly(kXY)}, MonomialOrder::grevlex(2)).empty());
  const auto unit = buchberger({var(kXY, 0), var(kXY, 0) + cst(kXY, 1)}, MonomialOrder::grevlex(2));
  ASSERT_EQ(unit.size(), 1u);
  EXPECT_EQ(unit[0], cst(kXY, 1));
}

TEST(BuchbergerTest, CircleAndLine) {
  const MultiPoly x = var(kXY, 0), y = var(kXY, 1);
  const Ideal ideal(kXY, {x * x + y * y - cst(kXY, 1), x - y}, MonomialOrder::lex(2));
  EXPECT_TRUE(ideal.contains(Rational(2) * y * y - cst(kXY, 1)));
  EXPECT_FALSE(ideal.contains(y));
  // Substituting x = y leaves 2y^2 - 1, so the reduced lex basis is {y^2 - 1/2, x - y}.
  ASSERT_EQ(ideal.basis().size(), 2u);
  EXPECT_EQ(ideal.basis()[0], y * y - MultiPoly::constant(kXY, Rational(1, 2)));
  EXPECT_EQ(ideal.basis()[1], x - y);
}

TEST(BuchbergerTest, ProductOfLinearAndCubicSum) {
  const MultiPoly s = var(kZeta, 0) + var(kZeta, 1);
  const Ideal a(kZeta, {s});
  const Ideal b(kZeta, {s.pow(3)});
  const Ideal prod = idealProduct(a, b);
  ASSERT_EQ(prod.basis().size(), 1u);
  EXPECT_EQ(prod.basis()[0], s.pow(4));
  EXPECT_EQ(prod.basis()[0].toString(),
            "1/1*z1^4 + 4/1*z1^3*z2 + 6/1*z1^2*z2^2 + 4/1*z1*z2^3 + 1/1*z2^4");
}

TEST(IdealProductTest, UnitAndZeroFactors) {
  const MultiPoly z1 = var(kZeta, 0), z2 = var(kZeta, 1);
  const Ideal unit(kZeta, {cst(kZeta, 1)});
  const Ideal monomials(kZeta, {z1 * z1, z1 * z2, z2 * z2});
  EXPECT_TRUE(idealEquals(idealProduct(unit, monomials), monomials));
  const Ideal zero(kZeta, {});
  EXPECT_TRUE(idealProduct(zero, monomials).isZero());
  EXPECT_THROW(idealProduct(Ideal(kXY, {}), monomials), std::invalid_argument);
}

TEST(EliminationTest, WorkedCases) {
  const std::vector<std::string> xyz{"x", "y", "z"};
  const MonomialOrder elim = MonomialOrder::elimination(3, {2});
  const MultiPoly x = var(xyz, 0), y = var(xyz, 1), z = var(xyz, 2);

  const auto r1 = eliminationIdeal(Ideal(xyz, {z - x, z - y}, elim), {2});
  ASSERT_EQ(r1.size(), 1u);
  EXPECT_EQ(r1[0], var(kXY, 0) - var(kXY, 1));

  EXPECT_TRUE(eliminationIdeal(Ideal(xyz, {z}, elim), {2}).empty());
  EXPECT_THROW(eliminationIdeal(Ideal(xyz, {z}, MonomialOrder::grevlex(3)), {2}), std::invalid_argument);
}

TEST(EliminationTest, ResultantOfTwoQuadratics) {
  // z^2 - a and z - b share a root iff b^2 - a = 0.
  const std::vector<std::string> abz{"a", "b", "z"};
  const MultiPoly a = var(abz, 0), b = var(abz, 1), z = var(abz, 2);
  const auto r = eliminationIdeal(Ideal(abz, {z * z - a, z - b}, MonomialOrder::elimination(3, {2})), {2});
  ASSERT_EQ(r.size(), 1u);
  const std::vector<std::string> ab{"a", "b"};
  EXPECT_EQ(r[0], var(ab, 1) * var(ab, 1) - var(ab, 0));
}

class GroebnerPropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(GroebnerPropertyTest, IdempotentContainsGeneratorsAndReduced) {
  std::mt19937_64 rng(GetParam());
  std::uniform_int_distribution<int> coef(-2, 2), expo(0, 2), count(1, 3), terms(1, 3);
  const std::vector<std::string> vars{"a", "b", "c"};
  const MonomialOrder order = GetParam() % 2 ? MonomialOrder::grevlex(3) : MonomialOrder::elimination(3, {0});
  std::vector<MultiPoly> gens;
  const int ngens = count(rng);
  for (int g = 0; g < ngens; ++g) {
    MultiPoly p(vars, order);
    const int nt = terms(rng);
    for (int t = 0; t < nt; ++t) p.addTerm({unsigned(expo(rng)), unsigned(expo(rng)), unsigned(expo(rng))}, coef(rng));
    gens.push_back(p);
  }
  const auto basis = buchberger(gens, order);
  for (const MultiPoly& f : gens) EXPECT_TRUE(normalForm(f.withOrder(order), basis).isZero());
  const auto again = buchberger(basis, order);
  ASSERT_EQ(again.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) EXPECT_EQ(again[i], basis[i]);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    EXPECT_EQ(basis[i].leadingCoefficient(), 1);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& [m, c] : basis[i].terms()) EXPECT_FALSE(divides(basis[j].leadingMonomial(), m));
    }
  }
  // Pairwise S-polynomials reduce to zero (Buchberger criterion).
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Monomial l = monomialLcm(basis[i].leadingMonomial(), basis[j].leadingMonomial());
      const MultiPoly s = basis[i].mulTerm(1, monomialQuotient(l, basis[i].leadingMonomial())) -
                          basis[j].mulTerm(1, monomialQuotient(l, basis[j].leadingMonomial()));
      EXPECT_TRUE(normalForm(s, basis).isZero());
    }
  if (order.kind() == MonomialOrder::Kind::EliminationBlock) {
    const Ideal full(vars, gens, order);
    for (const MultiPoly& e : eliminationIdeal(full, {0})) EXPECT_TRUE(full.contains(e.embed(vars)));
  }
}

INSTANTIATE_TEST_SUITE_P(RandomIdeals, GroebnerPropertyTest, ::testing::Range(0, 40));

}  // namespace
}  // namespace sarx
