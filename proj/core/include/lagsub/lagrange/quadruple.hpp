#pragma once

#include <optional>

#include "lagsub/dbl/double.hpp"
#include "lagsub/lie/algebra_map.hpp"
#include "lagsub/lie/parabolic_subalgebra.hpp"
#include "lagsub/roots/isometry.hpp"

namespace lagsub::lagrange {

using exact::Matrix;
using exact::Scalar;
using exact::Subspace;
using exact::Vec;
using lie::LieAlgebra;
using roots::RootSubset;

/**
 * Parameter form of an admissible quadruple (p, p', theta, l0):
 * theta = xi exp(ad x) with xi lifted from sigma and the scalars, and l0 a
 * subspace of z x z' written in full-Cartan coordinates (x-part then y-part,
 * each of length cartan_dim()).
 */
struct Quadruple {
  RootSubset p;
  RootSubset p_prime;
  roots::RootIsometry sigma;
  lie::XiScalars xi_scalars;
  /// Nilpotent element of [u,u]^xi; empty means zero.
  Vec x;
  Subspace l0;
};

/// Everything derived from a validated quadruple.
struct QuadrupleData {
  lie::ParabolicData pd;
  lie::ParabolicData pd_prime;
  RootSubset u;
  lie::AlgebraMap xi;
  lie::FixedSubalgebra fixed;
  Vec x;
  /// theta = xi exp(ad x), valid on a.
  Matrix theta;
};

/// Checks every admissibility condition and throws PreconditionFailed (or
/// UnequalCenterDimensions) describing the first one that fails.
QuadrupleData validate(const LieAlgebra& g, const Quadruple& q);

/// The quadruple of g_diag: P = P' = R, sigma = id, unit scalars, x = 0, l0 the diagonal of the center.
Quadruple diagonal_quadruple(const LieAlgebra& g);

/// Embeds l0 into g x g.
Subspace embed_l0(const LieAlgebra& g, const Subspace& l0);

/// l = {(x,y) in p x p' : theta(x_a) = y_a', (x_z, y_z') in l0} as one kernel.
Subspace construct_from_theta(const LieAlgebra& g, const lie::ParabolicData& pd,
                              const lie::ParabolicData& pd_prime, const Matrix& theta, const Subspace& l0);
Subspace construct_l(const LieAlgebra& g, const Quadruple& q);

struct Decomposition {
  RootSubset p;
  RootSubset p_prime;
  lie::AlgebraMap theta;
  Subspace l0;
  /// Present when theta maps root spaces to root spaces (x = 0 form).
  std::optional<Quadruple> quadruple;
  /// (u, v) applied to the input before reading off the data.
  Matrix u;
  Matrix v;
  bool conjugated = false;
};

/// Recovers (P, P', theta, l0) from a Lagrangian subalgebra. If a projection
/// is not standard, searches products of at most two exp(ad c e_alpha)
/// (c = +-1) for a conjugating element and reports failure if none is found.
Decomposition decompose_l(const LieAlgebra& g, const Subspace& s);

/// Whether s contains the full Cartan subalgebra and is spanned by it and root vectors.
bool is_standard(const LieAlgebra& g, const Subspace& s);

/// dim{v in <A> : sigma v = v}.
int dim_xi(const roots::RootSystem& r, const roots::RootIsometry& sigma);
/// rank A minus the rank of the torus action on the lift xi, read off from
/// [ad h_i, xi] on the simple root vectors of A.
int dim_xi_linearized(const LieAlgebra& g, const roots::RootIsometry& sigma, const lie::AlgebraMap& xi);
/// n(n-1)/2.
int dim_lambda(int n);

}  // namespace lagsub::lagrange
