#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lagsub/exact/lattice.hpp"
#include "lagsub/lagrange/quadruple.hpp"

namespace lagsub::integrab {

using exact::Matrix;
using exact::Scalar;
using exact::Subspace;
using exact::Vec;
using lie::LieAlgebra;

/**
 * Rational lattice L in the full Cartan subalgebra, written in full-Cartan
 * coordinates (simple coroots, then the center basis). The kernel of exp is
 * 2 pi i L; the factor 2 pi i is dropped.
 */
struct GroupForm {
  /// Rows span L; full rank.
  Matrix basis;
  std::string preset;
};

/// "adjoint": fundamental coweights on the semisimple part.
/// "simply-connected": simple coroots on the semisimple part.
/// The center gets the standard lattice of its basis in both cases.
GroupForm preset_group_form(const LieAlgebra& g, const std::string& name);
/// Throws PreconditionFailed unless rows are rational and of full rank.
GroupForm user_group_form(const LieAlgebra& g, const Matrix& rows);

struct LatticeTest {
  bool passed = false;
  /// Sublattice of L spanning the tested space, in full-Cartan coordinates.
  std::vector<Vec> sublattice;
  /// A basis vector of the tested space that is not rational.
  std::optional<Vec> failing_direction;
};

struct IntegrabilityVerdict {
  Subspace v;
  /// V intersected with the real span of L.
  Subspace v_real;
  LatticeTest algebraic;
  LatticeTest closed;
};

/// V = {x in h : (x_z, x_z') in l0, sigma^vee(x_h~) = x_h~'} in full-Cartan coordinates.
Subspace compute_V(const LieAlgebra& g, const lagrange::Quadruple& q);

/// Whether V is spanned by vectors of L (tensored with Q).
LatticeTest test_algebraic(const Subspace& v, const GroupForm& gf);
/// Real points of V over the real subfield of the scalars.
Subspace real_points(const Subspace& v);
/// Whether V n t is spanned by vectors of L, t the real span of L.
LatticeTest test_closed(const Subspace& v, const GroupForm& gf);

IntegrabilityVerdict integrability_verdict(const LieAlgebra& g, const lagrange::Quadruple& q, const GroupForm& gf);

}  // namespace lagsub::integrab
