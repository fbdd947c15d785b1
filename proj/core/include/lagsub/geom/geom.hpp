#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lagsub/dbl/double.hpp"
#include "lagsub/dbl/rmatrix.hpp"

namespace lagsub::geom {

using CMatrix = Eigen::MatrixXcd;
using cdouble = std::complex<double>;
using exact::Matrix;
using exact::Subspace;
using lie::LieAlgebra;

/// Automorphism of g in the adjoint basis, with its exact form when known.
struct AutPoint {
  CMatrix g;
  std::optional<Matrix> exact;
};

/// The matrix-entry function g -> g(mu, nu).
struct CoordFn {
  int mu = 0;
  int nu = 0;
};

AutPoint from_exact(const Matrix& m);
CMatrix to_complex(const Matrix& m);

/**
 * The bracket on X = G-bar:
 *   {f, k} = -r_alt^{mn} (d'_m f - d_m f)(d'_n k - d_n k)
 *            + r_sym^{mn} (d'_m f - d_m f)(d'_n k + d_n k),
 * where d_m f(g) = d/dt f(exp(t ad b_m) g) and d'_m f(g) = d/dt f(g exp(t ad b_m)).
 */
class PoissonX {
 public:
  static constexpr double kStep = 1e-5;

  /// Throws RankCapExceeded above rank 2.
  explicit PoissonX(const LieAlgebra& g);
  /// Same bracket with an arbitrary tensor in place of the Sklyanin r.
  PoissonX(const LieAlgebra& g, const dbl::RTensor& r);

  std::size_t dim() const { return ad_.size(); }
  const CMatrix& ad(std::size_t mu) const { return ad_[mu]; }

  cdouble bracket(const CoordFn& f, const CoordFn& k, const CMatrix& p) const;

  /// First derivatives of f along the right- and left-invariant fields at p.
  using Derivs = std::pair<std::vector<cdouble>, std::vector<cdouble>>;
  Derivs coord_derivs(const CoordFn& f, const CMatrix& p) const;
  cdouble bracket_from_derivs(const Derivs& f, const Derivs& k) const;

  /// {f, {k, l}} + {k, {l, f}} + {l, {f, k}} with the outer bracket taken by
  /// central differences of step h.
  cdouble jacobiator(const CoordFn& f, const CoordFn& k, const CoordFn& l, const CMatrix& p,
                     double h = kStep) const;

 private:
  std::vector<CMatrix> ad_;
  std::vector<CMatrix> exp_plus_;
  std::vector<CMatrix> exp_minus_;
  CMatrix r_sym_;
  CMatrix r_alt_;
  void exponentials(double h, std::vector<CMatrix>& plus, std::vector<CMatrix>& minus) const;
};

/// exp(ad sum c_m b_m) for complex coefficients.
CMatrix exp_ad(const PoissonX& x, const std::vector<cdouble>& c);

/// l_g = {(g y, y)}.
Subspace build_l_g(const LieAlgebra& g, const AutPoint& p);
/// (u, v) acting on a subspace of g x g; throws PreconditionFailed on non-exact input.
Subspace conjugate_subalgebra(const AutPoint& u, const AutPoint& v, const Subspace& s);

/// Exact automorphism: a product of exp(ad c e_alpha) with small rational c and
/// simple Weyl representatives, drawn from the generator.
Matrix random_exact_automorphism(const LieAlgebra& g, std::mt19937_64& rng);

struct GeomReport {
  int points = 0;
  int pairs_tested = 0;
  int triples_tested = 0;
  double max_antisymmetry_residual = 0;
  double max_jacobi_residual = 0;
  double max_identity_bracket = 0;
  int exact_automorphisms = 0;
  bool all_l_g_lagrangian = true;
  bool all_l_g_full_parabolic = true;
  bool equivariance_holds = true;
  bool theorem_conjugation_holds = true;
};

/// The fixed panel of four coordinate functions.
std::vector<CoordFn> coordinate_panel(const LieAlgebra& g);

GeomReport geom_check(const LieAlgebra& g, std::uint64_t seed, int points = 100, int automorphisms = 20);

}  // namespace lagsub::geom
