#include <gtest/gtest.h>

#include "schurlat/gaussian.hpp"
#include "schurlat/order.hpp"

using namespace schurlat;

TEST(ChiSquare, UniformCounts) {
  const auto c = chi_square_uniform({100, 100, 100, 100});
  EXPECT_DOUBLE_EQ(c.statistic, 0.0);
  EXPECT_EQ(c.dof, 3);
  EXPECT_DOUBLE_EQ(c.p_value, 1.0);
  const auto skew = chi_square_uniform({400, 0, 0, 0});
  EXPECT_LT(skew.p_value, 1e-6);
}

TEST(ChiSquare, PooledAddsDegreesOfFreedom) {
  const auto c = chi_square_uniform_pooled({{50, 50}, {60, 40}});
  EXPECT_EQ(c.dof, 2);
  EXPECT_DOUBLE_EQ(c.statistic, 4.0);
}

TEST(LatticeGaussian, RejectsBadPrecision) {
  PadicField f(3);
  EXPECT_THROW(LatticeGaussian<PadicField>(Lattice<PadicField>::standard(f, 2), 0, 1), Error);
}

TEST(LatticeGaussian, SamplesStayInSupportAndAreReproducible) {
  PadicField f(3);
  const auto support = Lattice<PadicField>::diagonal(f, {0, 1, 2});
  LatticeGaussian<PadicField> g(support, 2, 42);
  const auto a = g.sample(200);
  const auto b = LatticeGaussian<PadicField>(support, 2, 42).sample(200);
  EXPECT_EQ(a, b);
  for (const auto& v : a) EXPECT_TRUE(support.contains(v));
  EXPECT_NE(g.sample(5, 1), g.sample(5, 2));
}

TEST(Invariance, CoreCasePasses) {
  PadicField f(3);
  SchurModule module(2, Partition({2}));
  const auto res = compute_order(module, f, 1, 16, 1);
  LatticeGaussian<PadicField> g(Lattice<PadicField>::standard(f, module.dim()), 1, 7);
  const auto rep = invariance_report(g, res.order, res.rep_generators, 6, 10000);
  EXPECT_TRUE(rep.exact_invariant);
  EXPECT_TRUE(rep.statistics_pass());
  EXPECT_EQ(rep.words.size(), 6u);
  for (const auto& w : rep.words) EXPECT_EQ(w.escaped, 0u);
}

TEST(Invariance, NonInvariantLatticeIsDetected) {
  PadicField f(3);
  SchurModule module(2, Partition({2}));
  const auto res = compute_order(module, f, 1, 16, 1);
  LatticeGaussian<PadicField> g(Lattice<PadicField>::diagonal(f, {0, 1, 0}), 1, 7);
  const auto rep = invariance_report(g, res.order, res.rep_generators, 12, 2000);
  EXPECT_FALSE(rep.exact_invariant);
  EXPECT_FALSE(rep.statistics_pass());
}
