#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lagsub/lagrange/quadruple.hpp"
#include "lagsub/roots/canonical_label.hpp"

namespace lagsub::lagrange {

struct OrbitLabel {
  roots::OrbitKey key;
  int dim_z = 0;
  int dim_xi = 0;
  /// Same count obtained from the torus action on the actual lift xi.
  int dim_xi_linearized = 0;
  int dim_lambda = 0;
  /// Some verified member has l n g_diag = 0.
  bool diag_transverse = false;
  /// False when no Lagrangian l0 exists over the working field.
  bool has_representative = false;
  Quadruple representative;
  std::vector<Quadruple> samples;
  /// dim(l n g_diag) for the representative followed by each sample.
  std::vector<std::size_t> diag_dims;
};

struct CatalogOptions {
  std::uint64_t seed = 0;
  int samples = 3;
  /// Radicand of the working field; chosen automatically when unset.
  std::optional<long> field_d;
};

struct Catalog {
  std::vector<OrbitLabel> labels;
  /// Radicand actually used (0 for Q(i)).
  long field_d = 0;
  /// Isometries skipped because they preserve no simple system of U.
  std::size_t non_admissible_sigma = 0;
  /// Nilpotent candidates whose characteristic was not found in the Cartan subalgebra.
  std::size_t skipped_nilpotents = 0;
};

/// Every (P, P', sigma, h) up to W with sigma admissible and h the
/// characteristic of a nilpotent of [u,u]^xi (xi-scalars searched over +-1),
/// each with a constructed and verified representative plus sampled
/// continuous parameters. Throws RankCapExceeded above rank 2.
Catalog enumerate_orbit_labels(const LieAlgebra& g, const CatalogOptions& opts = {});

/**
 * A Lagrangian l0 in z x z': the graph of an isometry z -> z' induced by an
 * automorphism of the root system carrying A to A', or a scaled map when
 * dim z = 1. `field_d` is read and, if 0 and a square root is needed, set.
 */
std::optional<Subspace> default_l0(const LieAlgebra& g, const lie::ParabolicData& pd,
                                   const lie::ParabolicData& pd_prime, long& field_d);

/// Positive roots of U with respect to a given simple system of U.
RootSubset positive_roots_for(const roots::RootSystem& r, const RootSubset& u, const RootSubset& simple);

}  // namespace lagsub::lagrange
