#include <gtest/gtest.h>

#include "lagsub/error.hpp"
#include "lagsub/lagrange/catalog.hpp"
#include "lagsub/roots/canonical_label.hpp"
#include "lagsub/roots/parabolic.hpp"

using namespace lagsub;
using lie::LieAlgebra;

TEST(Catalog, A1HasFourLabels) {
  const LieAlgebra g{roots::RootSystem("A1")};
  const auto cat = lagrange::enumerate_orbit_labels(g);
  ASSERT_EQ(cat.labels.size(), 4u);
  int borel = 0, full = 0;
  for (const auto& l : cat.labels) {
    EXPECT_TRUE(l.has_representative);
    if (l.key.p.size() == 1) ++borel;
    if (l.key.p.size() == 2) ++full;
  }
  EXPECT_EQ(borel, 2);
  EXPECT_EQ(full, 2);
}

class CatalogTypes : public ::testing::TestWithParam<std::string> {};

TEST_P(CatalogTypes, EveryRepresentativeAndSampleIsLagrangian) {
  const LieAlgebra g{roots::RootSystem(GetParam())};
  const auto cat = lagrange::enumerate_orbit_labels(g, {.seed = 3, .samples = 3});
  EXPECT_FALSE(cat.labels.empty());
  for (const auto& l : cat.labels) {
    ASSERT_TRUE(l.has_representative);
    EXPECT_EQ(l.samples.size(), 3u);
    EXPECT_TRUE(dbl::verify_lagrangian(g, lagrange::construct_l(g, l.representative)).lagrangian);
    for (const auto& s : l.samples) EXPECT_TRUE(dbl::verify_lagrangian(g, lagrange::construct_l(g, s)).lagrangian);
    EXPECT_EQ(l.dim_xi, l.dim_xi_linearized) << roots::to_string(l.key);
    EXPECT_EQ(l.dim_lambda, l.dim_z * (l.dim_z - 1) / 2);
    EXPECT_EQ(l.key, roots::weyl_canonical_label(g.roots(), l.key));
  }
  for (std::size_t k = 1; k < cat.labels.size(); ++k) EXPECT_LT(cat.labels[k - 1].key, cat.labels[k].key);
}

INSTANTIATE_TEST_SUITE_P(RankAtMostTwo, CatalogTypes, ::testing::Values("A1", "A2", "B2", "A1xA1"));

TEST(Catalog, LabelCountsAtRankTwo) {
  // Regression values from the enumeration (W-canonical keys with h in the Cartan).
  EXPECT_EQ(lagrange::enumerate_orbit_labels(LieAlgebra{roots::RootSystem("A2")}).labels.size(), 28u);
  EXPECT_EQ(lagrange::enumerate_orbit_labels(LieAlgebra{roots::RootSystem("B2")}).labels.size(), 24u);
  EXPECT_EQ(lagrange::enumerate_orbit_labels(LieAlgebra{roots::RootSystem("A1xA1")}).labels.size(), 22u);
}

TEST(Catalog, SameSeedSameSamples) {
  const LieAlgebra g{roots::RootSystem("A2")};
  const auto a = lagrange::enumerate_orbit_labels(g, {.seed = 7});
  const auto b = lagrange::enumerate_orbit_labels(g, {.seed = 7});
  const auto c = lagrange::enumerate_orbit_labels(g, {.seed = 8});
  ASSERT_EQ(a.labels.size(), b.labels.size());
  bool differs = false;
  for (std::size_t k = 0; k < a.labels.size(); ++k) {
    ASSERT_EQ(a.labels[k].samples.size(), b.labels[k].samples.size());
    for (std::size_t s = 0; s < a.labels[k].samples.size(); ++s) {
      EXPECT_EQ(a.labels[k].samples[s].xi_scalars, b.labels[k].samples[s].xi_scalars);
      EXPECT_EQ(a.labels[k].samples[s].l0, b.labels[k].samples[s].l0);
      differs = differs || a.labels[k].samples[s].xi_scalars != c.labels[k].samples[s].xi_scalars;
    }
  }
  EXPECT_TRUE(differs);
}

TEST(Catalog, TransverseClassesExist) {
  const LieAlgebra g{roots::RootSystem("A2")};
  const auto cat = lagrange::enumerate_orbit_labels(g);
  int transverse = 0;
  for (const auto& l : cat.labels) transverse += l.diag_transverse ? 1 : 0;
  EXPECT_GT(transverse, 0);
}

TEST(Catalog, RankCap) {
  EXPECT_THROW(lagrange::enumerate_orbit_labels(LieAlgebra{roots::RootSystem("A3")}), RankCapExceeded);
}

TEST(Catalog, PositiveRootsForSimpleSystem) {
  const roots::RootSystem r("A2");
  const roots::RootSubset all{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(lagrange::positive_roots_for(r, all, {0, 1}), (roots::RootSubset{0, 1, 2}));
  // Simple system {alpha_1 + alpha_2, -alpha_2}.
  EXPECT_EQ(lagrange::positive_roots_for(r, all, {2, 4}), (roots::RootSubset{0, 2, 4}));
}

TEST(Catalog, DefaultL0IsLagrangianInCenters) {
  const LieAlgebra g{roots::RootSystem("B2")};
  const auto& r = g.roots();
  const auto p = roots::standard_parabolic(r, {0});
  const auto pd = lie::parabolic_subalgebra(g, p);
  long d = 0;
  const auto l0 = lagrange::default_l0(g, pd, pd, d);
  ASSERT_TRUE(l0.has_value());
  EXPECT_EQ(l0->dim(), 1u);
  EXPECT_EQ(d, 0);
}
