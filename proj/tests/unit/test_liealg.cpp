#include <gtest/gtest.h>

#include "lagsub/error.hpp"
#include "lagsub/lie/algebra_map.hpp"
#include "lagsub/lie/nilpotent.hpp"
#include "lagsub/roots/parabolic.hpp"

using namespace lagsub;
using exact::Matrix;
using exact::Scalar;
using exact::Vec;
using lie::LieAlgebra;

namespace {

Scalar trace(const Matrix& m) {
  Scalar t;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

}  // namespace

class LieAlgebraTypes : public ::testing::TestWithParam<std::string> {};

TEST_P(LieAlgebraTypes, JacobiOnAllBasisTriples) {
  const LieAlgebra g{roots::RootSystem(GetParam())};
  const int n = g.dim();
  for (int a = 0; a < n; ++a) {
    const Vec x = g.basis_vector(a);
    for (int b = 0; b < n; ++b) {
      const Vec y = g.basis_vector(b);
      const Vec xy = g.bracket(x, y);
      for (int c = b; c < n; ++c) {
        const Vec z = g.basis_vector(c);
        const Vec jac = g.bracket(xy, z) + g.bracket(g.bracket(y, z), x) + g.bracket(g.bracket(z, x), y);
        ASSERT_TRUE(exact::is_zero(jac)) << a << " " << b << " " << c;
      }
    }
  }
}

TEST_P(LieAlgebraTypes, FormIsInvariantAndProportionalToKilling) {
  const LieAlgebra g{roots::RootSystem(GetParam())};
  const int n = g.dim();
  std::vector<Matrix> ad;
  for (int a = 0; a < n; ++a) ad.push_back(g.ad(g.basis_vector(a)));
  std::optional<Scalar> ratio;
  const bool simple = g.roots().factors().size() == 1;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Vec x = g.basis_vector(a), y = g.basis_vector(b);
      for (int c = 0; c < n; ++c) {
        const Vec z = g.basis_vector(c);
        ASSERT_EQ(g.form(g.bracket(x, y), z), g.form(x, g.bracket(y, z)));
      }
      if (!simple) continue;
      const Scalar kil = trace(ad[a] * ad[b]);
      const Scalar f = g.form(x, y);
      if (f.is_zero()) {
        EXPECT_TRUE(kil.is_zero());
      } else if (!ratio) {
        ratio = kil / f;
      } else {
        EXPECT_EQ(kil / f, *ratio);
      }
    }
  }
}

TEST_P(LieAlgebraTypes, StructureConstantsMatchRootStrings) {
  const LieAlgebra g{roots::RootSystem(GetParam())};
  const auto& r = g.roots();
  for (int a = 0; a < r.size(); ++a) {
    for (int b = 0; b < r.size(); ++b) {
      if (r.sum_index(a, b) < 0) {
        EXPECT_EQ(g.structure_constant(a, b), 0);
        continue;
      }
      // p = largest integer with b - p a a root.
      int p = 0;
      while (true) {
        roots::RootVec v = r.root(b);
        for (int k = 0; k < r.rank(); ++k) v[k] -= (p + 1) * r.root(a)[k];
        if (r.index_of(v) < 0) break;
        ++p;
      }
      EXPECT_EQ(std::abs(g.structure_constant(a, b)), p + 1);
      EXPECT_EQ(g.structure_constant(a, b), -g.structure_constant(b, a));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Types, LieAlgebraTypes, ::testing::Values("A1", "A2", "B2", "G2", "A3", "B3", "C3", "A1xA1"));

TEST(LieAlgebra, CenterFormValidation) {
  Matrix bad(1, 1);
  EXPECT_THROW(LieAlgebra(roots::RootSystem("A1"), 1, bad), PreconditionFailed);
  Matrix good(1, 1);
  good(0, 0) = Scalar(2L);
  const LieAlgebra g(roots::RootSystem("A1"), 1, good);
  EXPECT_EQ(g.dim(), 4);
  EXPECT_EQ(g.center().dim(), 1u);
  EXPECT_TRUE(exact::is_zero(g.bracket(g.basis_vector(g.center_slot(0)), g.e(0))));
}

TEST(LieAlgebra, TriangularDecomposition) {
  const LieAlgebra g{roots::RootSystem("B2")};
  const auto t = lie::triangular_parts(g);
  EXPECT_EQ(t.n_plus.dim(), 4u);
  EXPECT_EQ(t.b_minus.dim(), 6u);
  EXPECT_TRUE(g.is_subalgebra(t.b_plus));
  EXPECT_TRUE(g.is_subalgebra(t.n_minus));
  EXPECT_EQ(exact::sum(t.b_plus, t.n_minus).dim(), 10u);
}

TEST(AlgebraMap, ExponentialsAreIsometricAutomorphisms) {
  const LieAlgebra g{roots::RootSystem("G2")};
  for (int a : {0, 1, 5, 8}) {
    const auto phi = lie::exp_ad(g, Scalar(mpq_class(-3, 2)) * g.e(a));
    EXPECT_TRUE(lie::is_bracket_compatible(g, phi));
    EXPECT_TRUE(lie::is_isometric(g, phi));
  }
  EXPECT_THROW(lie::exp_ad(g, g.basis_vector(g.cartan_slot(0))), PreconditionFailed);
}

TEST(AlgebraMap, WeylRepresentativeMovesRootSpaces) {
  const LieAlgebra g{roots::RootSystem("A2")};
  const auto& r = g.roots();
  for (int k = 0; k < r.rank(); ++k) {
    const Matrix n = lie::weyl_representative(g, k);
    for (int a = 0; a < r.size(); ++a) {
      const Vec img = n.apply(g.e(a));
      const int target = r.reflect(k, a);
      EXPECT_EQ(img, img[target] * g.e(target));
      EXPECT_FALSE(img[target].is_zero());
    }
  }
}

TEST(AlgebraMap, DiagramAutomorphismLift) {
  const LieAlgebra g{roots::RootSystem("A2")};
  const auto& r = g.roots();
  const roots::RootSubset all{0, 1, 2, 3, 4, 5};
  for (const auto& sigma : roots::enumerate_isometries(r, all, all)) {
    if (!roots::preserves_simple_system(r, sigma)) continue;
    lie::XiScalars c;
    for (int b : roots::simple_system(r, all)) c[b] = Scalar(b == 0 ? 2L : -1L);
    const auto xi = lie::build_xi(g, sigma, c);
    EXPECT_TRUE(lie::is_bracket_compatible(g, xi));
    EXPECT_TRUE(lie::is_isometric(g, xi));
    for (int a = 0; a < r.size(); ++a) {
      const Vec img = xi.apply(g.e(a));
      EXPECT_EQ(img, img[sigma(a)] * g.e(sigma(a)));
    }
  }
  lie::XiScalars zero{{0, Scalar(0L)}, {1, Scalar(1L)}};
  EXPECT_THROW(lie::build_xi(g, roots::identity_isometry(r, all), zero), PreconditionFailed);
}

TEST(AlgebraMap, FixedSubalgebraOfScaledIdentity) {
  const LieAlgebra g{roots::RootSystem("A2")};
  const auto& r = g.roots();
  const roots::RootSubset all{0, 1, 2, 3, 4, 5};
  const auto id = roots::identity_isometry(r, all);
  EXPECT_EQ(lie::fixed_subalgebra(g, lie::build_xi(g, id, lie::unit_scalars(r, id)), all).fixed.dim(), 8u);
  // c = (-1, -1): e_a is fixed iff the height of a is even.
  const auto xi = lie::build_xi(g, id, {{0, Scalar(-1L)}, {1, Scalar(-1L)}});
  const auto f = lie::fixed_subalgebra(g, xi, all);
  EXPECT_EQ(f.fixed.dim(), 4u);
  EXPECT_EQ(f.cartan.dim(), 2u);
}

TEST(Nilpotent, CharacteristicsInSl2AndSl3) {
  const LieAlgebra a1{roots::RootSystem("A1")};
  const auto d1 = lie::jacobson_morozov_characteristic(a1, a1.e(0));
  EXPECT_TRUE(d1.h_in_cartan);
  EXPECT_EQ(d1.h_coords, (roots::RatVec{1}));
  EXPECT_EQ(a1.bracket(d1.x, d1.y), d1.h);

  const LieAlgebra a2{roots::RootSystem("A2")};
  const Vec reg = a2.e(0) + a2.e(1);
  const auto d2 = lie::jacobson_morozov_characteristic(a2, reg);
  EXPECT_EQ(d2.h_coords, (roots::RatVec{2, 2}));
  EXPECT_EQ(a2.bracket(d2.h, d2.x), Scalar(2L) * d2.x);
  EXPECT_EQ(a2.bracket(d2.h, d2.y), Scalar(-2L) * d2.y);
  EXPECT_EQ(a2.bracket(d2.x, d2.y), d2.h);

  // Conjugating x keeps the dominant characteristic.
  const Vec x = lie::exp_ad_matrix(a2, a2.e(3) + a2.e(4)).apply(a2.e(2));
  const auto d3 = lie::jacobson_morozov_characteristic(a2, x);
  EXPECT_EQ(d3.h_dominant, (roots::RatVec{1, 1}));
  EXPECT_EQ(a2.bracket(d3.x, d3.y), d3.h);
  EXPECT_THROW(lie::jacobson_morozov_characteristic(a2, a2.basis_vector(a2.cartan_slot(0))), PreconditionFailed);
}

TEST(Nilpotent, DominantRepresentative) {
  const roots::RootSystem r("A2");
  EXPECT_EQ(lie::dominant_representative(r, {-2, 0}), (roots::RatVec{2, 2}));
  EXPECT_EQ(lie::dominant_representative(r, {1, 1}), (roots::RatVec{1, 1}));
}
