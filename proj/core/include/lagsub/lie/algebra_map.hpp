#pragma once

#include <map>
#include <vector>

#include "lagsub/lie/algebra.hpp"
#include "lagsub/roots/isometry.hpp"

namespace lagsub::lie {

/**
 * Linear map from a subspace of g into g. `matrix` acts on columns and agrees
 * with the map on `source`; it is extended by zero on the standard complement
 * (unit vectors at the non-pivot columns of source).
 */
struct AlgebraMap {
  Subspace source;
  Subspace target;
  Matrix matrix;

  /// Image of v; throws DimensionMismatch if v is outside source.
  Vec apply(const Vec& v) const;
};

/// The map sending domain[k] to images[k], extended linearly. Throws
/// PreconditionFailed if the assignment is not consistent.
AlgebraMap make_map(const LieAlgebra& g, const std::vector<Vec>& domain, const std::vector<Vec>& images);
AlgebraMap identity_map(const LieAlgebra& g);
/// a after b, on the source of b.
AlgebraMap compose(const AlgebraMap& a, const AlgebraMap& b);

bool is_bracket_compatible(const LieAlgebra& g, const AlgebraMap& f);
bool is_isometric(const LieAlgebra& g, const AlgebraMap& f);

/// Smallest k with m^k = 0, or -1 if m is not nilpotent.
int nilpotency_index(const Matrix& m);
bool is_ad_nilpotent(const LieAlgebra& g, const Vec& x);

/// exp(ad x) as an automorphism of g. Throws PreconditionFailed if ad x is not nilpotent.
AlgebraMap exp_ad(const LieAlgebra& g, const Vec& x);
Matrix exp_ad_matrix(const LieAlgebra& g, const Vec& x);

/// Weyl group representative n_k = exp(ad e_k) exp(ad -f_k) exp(ad e_k) for a simple root k.
Matrix weyl_representative(const LieAlgebra& g, int k);

/// Subalgebra a = span{e_alpha : alpha in A} + span{h_alpha : alpha in A}.
Subspace levi_subalgebra(const LieAlgebra& g, const roots::RootSubset& a);
/// Derived algebra of the Levi: same as levi_subalgebra (A is symmetric).
Subspace derived_levi(const LieAlgebra& g, const roots::RootSubset& u);

/// Scalars c_beta keyed by the root index of each simple root beta of A.
using XiScalars = std::map<int, Scalar>;

/**
 * The isomorphism xi: a -> a' with xi(e_beta) = c_beta e_sigma(beta) and
 * xi(e_-beta) = c_beta^-1 e_-sigma(beta) on the simple system of A, extended
 * through brackets. Throws PreconditionFailed naming the root when a scalar
 * is missing or zero, or when the lift fails a compatibility check.
 */
AlgebraMap build_xi(const LieAlgebra& g, const roots::RootIsometry& sigma, const XiScalars& scalars);

/// All-ones scalars on the simple system of sigma.source.
XiScalars unit_scalars(const RootSystem& r, const roots::RootIsometry& sigma);

struct FixedSubalgebra {
  Subspace fixed;
  Subspace cartan;
};

/// Kernel of (phi - id) on [u,u] and its intersection with the Cartan subalgebra.
/// Throws PreconditionFailed if phi does not map [u,u] into itself.
FixedSubalgebra fixed_subalgebra(const LieAlgebra& g, const AlgebraMap& phi, const roots::RootSubset& u);

}  // namespace lagsub::lie
