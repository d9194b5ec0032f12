#include "sarx/multipoly.hpp"

#include <gtest/gtest.h>

namespace sarx {
namespace {

const std::vector<std::string> kXY{"x", "y"};

MultiPoly x() { return MultiPoly::variable(kXY, 0); }
MultiPoly y() { return MultiPoly::variable(kXY, 1); }
MultiPoly c(long v) { return MultiPoly::constant(kXY, v); }

TEST(MonomialOrderTest, Lex) {
  const MonomialOrder lex = MonomialOrder::lex(2);
  EXPECT_GT(lex.compare({1, 0}, {0, 5}), 0);
  EXPECT_LT(lex.compare({1, 0}, {1, 1}), 0);
  EXPECT_EQ(lex.compare({2, 3}, {2, 3}), 0);
  const MonomialOrder swapped = MonomialOrder::lex(std::vector<std::size_t>{1, 0});
  EXPECT_LT(swapped.compare({1, 0}, {0, 1}), 0);
}

TEST(MonomialOrderTest, Grevlex) {
  const MonomialOrder g = MonomialOrder::grevlex(3);
  EXPECT_GT(g.compare({0, 0, 2}, {1, 0, 0}), 0);  // degree first
  // x^2 z vs x y^2: equal degree, last variable exponent decides.
  EXPECT_LT(g.compare({2, 0, 1}, {1, 2, 0}), 0);
  EXPECT_GT(g.compare({1, 1, 0}, {0, 2, 0}), 0);
}

TEST(MonomialOrderTest, EliminationBlock) {
  const MonomialOrder e = MonomialOrder::elimination(3, {2});
  EXPECT_GT(e.compare({0, 0, 1}, {9, 9, 0}), 0);
  EXPECT_TRUE(e.eliminates({2}));
  EXPECT_FALSE(e.eliminates({0}));
  EXPECT_TRUE(MonomialOrder::lex(3).eliminates({0}));
  EXPECT_TRUE(MonomialOrder::lex(3).eliminates({0, 1}));
  EXPECT_FALSE(MonomialOrder::lex(3).eliminates({1}));
  EXPECT_FALSE(MonomialOrder::grevlex(3).eliminates({0}));
}

TEST(MonomialOrderTest, MultiplicativeCompatibility) {
  const std::vector<MonomialOrder> orders{MonomialOrder::lex(3), MonomialOrder::grevlex(3),
                                          MonomialOrder::elimination(3, {1})};
  std::vector<Monomial> monos;
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b)
      for (unsigned cc = 0; cc < 3; ++cc) monos.push_back({a, b, cc});
  for (const auto& order : orders) {
    for (const auto& a : monos) {
      EXPECT_GE(order.compare(a, Monomial{0, 0, 0}), 0);
      for (const auto& b : monos)
        for (const auto& w : monos)
          EXPECT_EQ(order.compare(a, b) < 0, order.compare(monomialProduct(a, w), monomialProduct(b, w)) < 0);
    }
  }
}

TEST(MultiPolyTest, ArithmeticAndCanonicalText) {
  const MultiPoly p = (x() + y()).pow(2);
  EXPECT_EQ(p.toString(), "1/1*x^2 + 2/1*x*y + 1/1*y^2");
  EXPECT_EQ(p - p, MultiPoly(kXY));
  EXPECT_TRUE((p - p).isZero());
  EXPECT_EQ(p.totalDegree(), 2u);
  EXPECT_EQ((Rational(1, 1000) * x()).toString(), "1/1000*x");
  EXPECT_EQ(c(15).toString(), "15/1");
  EXPECT_EQ(MultiPoly(kXY).toString(), "0");
}

TEST(MultiPolyTest, Evaluate) {
  const MultiPoly s = x() + y();
  EXPECT_EQ(s.evaluate({1, -1}), 0);
  EXPECT_EQ(s.pow(4).evaluate({1, 0}), 1);
  EXPECT_EQ((x() * y() - c(3)).evaluate({Rational(1, 2), 4}), -1);
  EXPECT_THROW(s.evaluate({1}), std::invalid_argument);
}

TEST(MultiPolyTest, LeadingTermFollowsOrder) {
  const MultiPoly p = x() + y().pow(2);
  EXPECT_EQ(p.leadingMonomial(), (Monomial{0, 2}));
  EXPECT_EQ(p.withOrder(MonomialOrder::lex(2)).leadingMonomial(), (Monomial{1, 0}));
  EXPECT_EQ(p.withOrder(MonomialOrder::lex(2)), p);
}

TEST(MultiPolyTest, EmbedAndSpecialize) {
  const std::vector<std::string> xyz{"x", "y", "z"};
  const MultiPoly p = x() * y() + c(2);
  const MultiPoly q = p.embed(xyz);
  EXPECT_EQ(q.variables(), xyz);
  EXPECT_EQ(q.evaluate({2, 3, 100}), 8);
  EXPECT_THROW(MultiPoly::variable(xyz, 2).embed(kXY), std::invalid_argument);

  // 2*x*z^2 + y  at x=3, y=1  ->  6 z^2 + 1
  const MultiPoly r = Rational(2) * MultiPoly::variable(xyz, 0) * MultiPoly::variable(xyz, 2).pow(2) +
                      MultiPoly::variable(xyz, 1);
  EXPECT_EQ(r.specializeToUni(2, {3, 1, 0}), UniPoly({1, 0, 6}));
  const auto coeffs = coefficientsIn(r, 2);
  ASSERT_EQ(coeffs.size(), 3u);
  EXPECT_EQ(coeffs[0], MultiPoly::variable(xyz, 1));
  EXPECT_TRUE(coeffs[1].isZero());
  EXPECT_EQ(coeffs[2], Rational(2) * MultiPoly::variable(xyz, 0));
}

TEST(MultiPolyTest, RingMismatchThrows) {
  const MultiPoly a = MultiPoly::variable({"a"}, 0);
  EXPECT_THROW(a + x(), std::invalid_argument);
}

}  // namespace
}  // namespace sarx
