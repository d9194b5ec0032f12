#include "sarx/lss.hpp"

#include <gtest/gtest.h>

#include <random>

#include "support/random_models.hpp"

namespace sarx {
namespace {

SarxModel twoModeModel() { return sisoModel(2, 2, {{"1", {8, -15, 1, -3}}, {"2", {1, 2, 1, 1}}}); }

TEST(AssociatedLssTest, TwoModeLayout) {
  const Lss sys = associatedLss(twoModeModel());
  ASSERT_EQ(sys.n(), 4u);
  EXPECT_EQ(sys.mode("1").a, testing::matrixOf({{8, -15, 1, -3}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}}));
  EXPECT_EQ(sys.mode("2").a, testing::matrixOf({{1, 2, 1, 1}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}}));
  EXPECT_EQ(sys.mode("1").b, testing::matrixOf({{0}, {0}, {1}, {0}}));
  EXPECT_EQ(sys.mode("2").c, testing::matrixOf({{1, 2, 1, 1}}));
  EXPECT_EQ(sys.x0(), RatVector(4));
}

TEST(AssociatedLssTest, MimoBlockLayout) {
  std::mt19937_64 rng(7);
  const SarxModel model = testing::randomSarx(rng, 2, 2, 2, 3, 1);
  const Lss sys = associatedLss(model);
  const std::size_t p = 2, m = 3, ny = 2, nu = 2;
  ASSERT_EQ(sys.n(), p * ny + m * nu);
  const LssMode& md = sys.mode("1");
  EXPECT_EQ(md.a.block(0, 0, p, sys.n()), model.coefficients("1"));
  EXPECT_EQ(md.c, model.coefficients("1"));
  EXPECT_EQ(md.a.block(p, 0, p, p), RatMatrix::identity(p));
  EXPECT_EQ(md.a.block(p * ny, 0, m, sys.n()), RatMatrix(m, sys.n()));
  EXPECT_EQ(md.a.block(p * ny + m, p * ny, m, m), RatMatrix::identity(m));
  EXPECT_EQ(md.b.block(p * ny, 0, m, m), RatMatrix::identity(m));
  EXPECT_EQ(md.b.block(0, 0, p * ny, m), RatMatrix(p * ny, m));
}

TEST(AssociatedLssTest, ZeroSystem) {
  const Lss sys = associatedLss(sisoModel(1, 1, {{"1", {0, 0}}}));
  EXPECT_EQ(sys.mode("1").a, RatMatrix(2, 2));
  const LssMinimality cert = isMinimalLss(sys);
  EXPECT_FALSE(cert.minimal);
  EXPECT_EQ(cert.reachableDim, 1u);
  EXPECT_EQ(cert.unobservableDim, 2u);
}

TEST(AssociatedLssTest, OutputsAgreeWithSarxSimulation) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const SarxModel model = trial % 2 == 0 ? testing::randomSisoSarx(rng) : testing::randomSarx(rng, 2, 1, 2, 2, 2);
    const Lss sys = associatedLss(model);
    for (int w = 0; w < 3; ++w) {
      const HybridWord word = randomWord(model.labels(), model.m(), 12, rng);
      ASSERT_EQ(simulate(model, word), simulateLss(sys, word));
    }
  }
}

TEST(LssTest, RejectsInconsistentShapes) {
  std::map<std::string, LssMode> modes;
  modes["a"] = {RatMatrix::identity(2), RatMatrix(2, 1), RatMatrix(1, 3)};
  EXPECT_THROW(Lss(modes, RatVector(2)), std::invalid_argument);
  modes["a"] = {RatMatrix::identity(2), RatMatrix(2, 1), RatMatrix(1, 2)};
  EXPECT_THROW(Lss(modes, RatVector(3)), std::invalid_argument);
  EXPECT_THROW(Lss({}, RatVector(2)), std::invalid_argument);
}

TEST(SubspaceTest, CanonicalBasisAndMembership) {
  const Subspace s = Subspace::span(testing::matrixOf({{1, 2}, {2, 4}, {0, 0}}));
  EXPECT_EQ(s.dimension(), 1u);
  EXPECT_TRUE(s.contains(testing::matrixOf({{3}, {6}, {0}})));
  EXPECT_FALSE(s.contains(testing::matrixOf({{0}, {0}, {1}})));
  EXPECT_EQ(s, Subspace::span(testing::matrixOf({{-1}, {-2}, {0}})));
  EXPECT_EQ(Subspace(3).dimension(), 0u);
  EXPECT_EQ(Subspace::whole(3).dimension(), 3u);
}

TEST(SubspaceTest, ClosureMatchesWordEnumeration) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> dim(1, 4), modes(1, 3), io(1, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const Lss sys = testing::randomLss(rng, dim(rng), io(rng), io(rng), modes(rng), trial % 3 == 0);
    EXPECT_EQ(reachableSpan(sys), testing::reachableByEnumeration(sys));
    EXPECT_EQ(unobservableSpace(sys), testing::unobservableByEnumeration(sys));
  }
}

TEST(SubspaceTest, UnobservableSpaceIsInvariantAndInKernel) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    const Lss sys = testing::randomLss(rng, 4, 1, 1, 2, true);
    const Subspace u = unobservableSpace(sys);
    const Subspace r = reachableSpan(sys);
    for (const auto& [q, md] : sys.modes()) {
      EXPECT_EQ(md.c * u.basis(), RatMatrix(md.c.rows(), u.dimension()));
      for (std::size_t j = 0; j < u.dimension(); ++j) EXPECT_TRUE(u.contains(md.a * u.basis().block(0, j, 4, 1)));
      for (std::size_t j = 0; j < r.dimension(); ++j) EXPECT_TRUE(r.contains(md.a * r.basis().block(0, j, 4, 1)));
      for (std::size_t j = 0; j < md.b.cols(); ++j) EXPECT_TRUE(r.contains(md.b.block(0, j, 4, 1)));
    }
  }
}

TEST(MinimalityTest, WorkedSystems) {
  EXPECT_TRUE(isMinimalLss(associatedLss(twoModeModel())).minimal);
  const LssMinimality padded = isMinimalLss(associatedLss(sisoModel(2, 2, {{"1", {0, -1, 1, 0}}, {"2", {0, -2, 2, 0}}})));
  EXPECT_FALSE(padded.minimal);
  EXPECT_EQ(padded.unobservableDim, 2u);
  EXPECT_EQ(padded.reachableDim, 4u);
  // Initial state outside the input-reachable span still counts.
  std::map<std::string, LssMode> modes;
  modes["1"] = {testing::matrixOf({{0, 0}, {0, 0}}), testing::matrixOf({{1}, {0}}),
                testing::matrixOf({{1, 1}})};
  EXPECT_EQ(reachableSpan(Lss(modes, {0, 1})).dimension(), 2u);
  EXPECT_EQ(reachableSpan(Lss(modes, {0, 0})).dimension(), 1u);
}

TEST(IsomorphismTest, SelfIsUniqueIdentity) {
  const Lss sys = associatedLss(twoModeModel());
  const IsoSolution sol = findIsomorphisms(sys, sys);
  EXPECT_EQ(sol.kind, IsoSolution::Kind::UniqueIdentity);
  ASSERT_TRUE(sol.witness.has_value());
  EXPECT_EQ(*sol.witness, RatMatrix::identity(4));
  EXPECT_EQ(toString(sol.kind), "unique-identity");
}

TEST(IsomorphismTest, ZeroSystemGivesFamily) {
  const Lss sys = associatedLss(sisoModel(1, 1, {{"1", {0, 0}}}));
  const IsoSolution sol = findIsomorphisms(sys, sys);
  EXPECT_EQ(sol.kind, IsoSolution::Kind::AffineFamily);
  EXPECT_GT(sol.familyDimension, 0u);
  ASSERT_TRUE(sol.witness.has_value());
  EXPECT_NE(determinant(*sol.witness), 0);
}

TEST(IsomorphismTest, InequivalentSystemsHaveNone) {
  const Lss a = associatedLss(twoModeModel());
  const Lss b = associatedLss(sisoModel(2, 2, {{"1", {8, -15, 1, -4}}, {"2", {1, 2, 1, 1}}}));
  EXPECT_EQ(findIsomorphisms(a, b).kind, IsoSolution::Kind::None);
}

TEST(IsomorphismTest, RecoversSimilarityTransform) {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 10; ++trial) {
    const Lss sys = testing::randomLss(rng, 3, 1, 1, 2, false);
    if (!isMinimalLss(sys).minimal) continue;
    const RatMatrix t = testing::matrixOf({{1, 1, 0}, {0, 1, 2}, {0, 0, 1}});
    const RatMatrix tInv = testing::matrixOf({{1, -1, 2}, {0, 1, -2}, {0, 0, 1}});
    std::map<std::string, LssMode> moved;
    for (const auto& [q, md] : sys.modes()) moved[q] = {t * md.a * tInv, t * md.b, md.c * tInv};
    RatVector x0 = (t * RatMatrix::columnVector(sys.x0())).column(0);
    const IsoSolution sol = findIsomorphisms(sys, Lss(moved, x0));
    EXPECT_EQ(sol.kind, IsoSolution::Kind::UniqueOther);
    ASSERT_TRUE(sol.witness.has_value());
    EXPECT_EQ(*sol.witness, t);
    ++checked;
  }
  EXPECT_GE(checked, 5);
}

TEST(IsomorphismTest, RejectsShapeMismatch) {
  const Lss a = associatedLss(twoModeModel());
  const Lss b = associatedLss(sisoModel(2, 1, {{"1", {0, -1, 1}}, {"2", {0, -2, 2}}}));
  EXPECT_THROW(findIsomorphisms(a, b), std::invalid_argument);
}

}  // namespace
}  // namespace sarx
