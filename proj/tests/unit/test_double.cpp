#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "lagsub/dbl/double.hpp"
#include "lagsub/dbl/rmatrix.hpp"
#include "lagsub/lie/algebra_map.hpp"

using namespace lagsub;
using exact::Matrix;
using exact::Scalar;
using exact::Subspace;
using exact::Vec;
using lie::LieAlgebra;

namespace {

LieAlgebra with_center(const char* type, int c) {
  Matrix f = Matrix::identity(c);
  return LieAlgebra(roots::RootSystem(type), c, f);
}

}  // namespace

class ManinTriple : public ::testing::TestWithParam<std::string> {};

TEST_P(ManinTriple, DiagonalAndComplement) {
  const LieAlgebra g{roots::RootSystem(GetParam())};
  const auto v = dbl::manin_triple_check(g);
  EXPECT_TRUE(v.diagonal.lagrangian);
  EXPECT_TRUE(v.complement.lagrangian);
  EXPECT_TRUE(v.trivial_intersection);
  EXPECT_TRUE(v.spanning);
  EXPECT_EQ(v.diagonal.dim, static_cast<std::size_t>(g.dim()));
}

INSTANTIATE_TEST_SUITE_P(Types, ManinTriple, ::testing::Values("A1", "A2", "B2", "G2", "A1xA1"));

TEST(Double, ReductiveManinTriple) {
  EXPECT_TRUE(dbl::manin_triple_check(with_center("A1", 1)).passed());
  EXPECT_TRUE(dbl::manin_triple_check(with_center("A2", 2)).passed());
}

TEST(Double, NonLagrangianSubspaces) {
  const LieAlgebra g{roots::RootSystem("A1")};
  const auto t = lie::triangular_parts(g);
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < t.b_plus.dim(); ++k) {
    rows.push_back(dbl::pair(t.b_plus.basis().row(k), exact::zero_vec(g.dim())));
  }
  const auto v = dbl::verify_lagrangian(g, Subspace::span(2 * g.dim(), rows));
  EXPECT_FALSE(v.isotropic);
  EXPECT_FALSE(v.lagrangian);
  // Isotropic but too small: (e, 0).
  const auto small = dbl::verify_lagrangian(g, Subspace::span(2 * g.dim(), {dbl::pair(g.e(0), exact::zero_vec(g.dim()))}));
  EXPECT_TRUE(small.isotropic);
  EXPECT_FALSE(small.lagrangian);
}

TEST(Double, ApplyPairPreservesLagrangian) {
  const LieAlgebra g{roots::RootSystem("A2")};
  const Matrix u = lie::exp_ad_matrix(g, g.e(0) + g.e(4));
  const Matrix v = lie::weyl_representative(g, 1);
  const Subspace m = dbl::apply_pair(u, v, dbl::manin_complement(g));
  EXPECT_TRUE(dbl::verify_lagrangian(g, m).lagrangian);
  EXPECT_EQ(dbl::apply_pair(Matrix::identity(g.dim()), Matrix::identity(g.dim()), m), m);
}

class Cybe : public ::testing::TestWithParam<std::string> {};

TEST_P(Cybe, SklyaninRSolvesCybeAndSymIsInvariant) {
  const LieAlgebra g{roots::RootSystem(GetParam())};
  const auto r = dbl::sklyanin_r(g);
  EXPECT_TRUE(dbl::cybe_residual(g, r.r).is_zero());
  EXPECT_TRUE(dbl::is_invariant(g, r.sym));
  EXPECT_EQ(Scalar(2L) * r.sym, dbl::casimir(g));
  EXPECT_EQ(r.sym + r.alt, r.r);
  EXPECT_EQ(r.alt.transpose(), Scalar(-1L) * r.alt);
}

INSTANTIATE_TEST_SUITE_P(Types, Cybe, ::testing::Values("A1", "A2", "B2", "A1xA1"));

TEST(Cybe, PerturbedTensorsFail) {
  const LieAlgebra g{roots::RootSystem("A2")};
  const auto r = dbl::sklyanin_r(g);
  EXPECT_FALSE(dbl::cybe_residual(g, r.r + r.sym).is_zero());
  EXPECT_FALSE(dbl::cybe_residual(g, r.alt).is_zero());
  EXPECT_FALSE(dbl::is_invariant(g, r.r));
}

// Independent oracle: the same r in the 2-dimensional representation of sl2,
// with the CYBE evaluated as 8x8 matrices.
TEST(Cybe, Sl2DefiningRepresentationOracle) {
  const LieAlgebra g{roots::RootSystem("A1")};
  const auto r = dbl::sklyanin_r(g);
  Eigen::Matrix2d e, f, h;
  e << 0, 1, 0, 0;
  f << 0, 0, 1, 0;
  h << 1, 0, 0, -1;
  // Check the basis convention: [e, f] = h and [h, e] = 2e.
  ASSERT_EQ(g.bracket(g.e(0), g.e(1)), g.basis_vector(g.cartan_slot(0)));
  const std::vector<Eigen::Matrix2d> b{e, f, h};
  const Eigen::Matrix2d id = Eigen::Matrix2d::Identity();
  auto slot = [&](int i, int pos) -> Eigen::MatrixXd {
    const Eigen::Matrix2d m[3] = {pos == 0 ? b[i] : id, pos == 1 ? b[i] : id, pos == 2 ? b[i] : id};
    return Eigen::kroneckerProduct(Eigen::kroneckerProduct(m[0], m[1]).eval(), m[2]).eval();
  };
  auto embed = [&](int p, int q) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(8, 8);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const double c = r.r(i, j).to_complex().real();
        if (c != 0) out += c * slot(i, p) * slot(j, q);
      }
    }
    return out;
  };
  const Eigen::MatrixXd r12 = embed(0, 1), r13 = embed(0, 2), r23 = embed(1, 2);
  auto comm = [](const Eigen::MatrixXd& a, const Eigen::MatrixXd& c) { return (a * c - c * a).eval(); };
  EXPECT_LT((comm(r12, r13) + comm(r12, r23) + comm(r13, r23)).norm(), 1e-12);
}
