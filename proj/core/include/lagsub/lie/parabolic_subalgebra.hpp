#pragma once

#include "lagsub/lie/algebra.hpp"
#include "lagsub/roots/root_system.hpp"

namespace lagsub::lie {

/**
 * p = h + sum of g_alpha over P, split as p = a + z + n where
 * a = span{g_alpha : alpha in A} + h~ (h~ the span of the coroots of A),
 * z = orthogonal complement of h~ in the full Cartan, n the nilradical.
 * The projection matrices act on columns and are meaningful on p.
 */
struct ParabolicData {
  roots::RootSubset p_roots;
  roots::RootSubset levi_roots;
  Subspace p;
  Subspace a;
  Subspace cartan_tilde;
  Subspace z;
  Subspace nilradical;
  Matrix proj_a;
  Matrix proj_z;
  /// Orthogonal projection of the full Cartan onto h~ (zero on root vectors).
  Matrix proj_cartan_tilde;
};

/// Throws PreconditionFailed if P is not parabolic or p/[p,p] is not isomorphic to z.
ParabolicData parabolic_subalgebra(const LieAlgebra& g, const roots::RootSubset& p);

}  // namespace lagsub::lie
