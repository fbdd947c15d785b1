#pragma once

#include <utility>
#include <vector>

#include "lagsub/exact/matrix.hpp"
#include "lagsub/exact/subspace.hpp"
#include "lagsub/roots/root_system.hpp"

namespace lagsub::lie {

using exact::Matrix;
using exact::Scalar;
using exact::Subspace;
using exact::Vec;
using roots::RootSystem;

/**
 * Reductive Lie algebra in a Chevalley basis.
 *
 * Basis order: e_alpha for every root (root index order), then the simple
 * coroots h_1..h_r, then central elements z_1..z_c. Structure constants are
 * integers: [h_i, e_a] = a(h_i) e_a, [e_a, e_-a] = h_a, [e_a, e_b] = N_ab e_(a+b),
 * with N fixed by the extraspecial-pair sign convention.
 *
 * Invariant form: <e_a, e_-a> = 2/(a,a), <h_i, h_j> = (a_i^v, a_j^v), and the
 * user-supplied form on the center.
 */
class LieAlgebra {
 public:
  explicit LieAlgebra(RootSystem r, int center_dim = 0, Matrix center_form = Matrix());

  const RootSystem& roots() const { return roots_; }
  int dim() const { return dim_; }
  int rank() const { return roots_.rank(); }
  int center_dim() const { return center_dim_; }
  /// Dimension of the full Cartan subalgebra (semisimple rank plus center).
  int cartan_dim() const { return rank() + center_dim_; }
  int num_roots() const { return roots_.size(); }

  int root_slot(int alpha) const { return alpha; }
  int cartan_slot(int i) const { return num_roots() + i; }
  int center_slot(int j) const { return num_roots() + rank() + j; }
  /// Slot of the k-th full-Cartan coordinate (coroots first, then center).
  int full_cartan_slot(int k) const { return num_roots() + k; }
  bool is_root_slot(int s) const { return s < num_roots(); }

  /// N_{a,b}; zero when a + b is not a root.
  int structure_constant(int a, int b) const { return n_[a * num_roots() + b]; }

  const std::vector<std::pair<int, long>>& bracket_basis(int i, int j) const {
    return table_[i * dim_ + j];
  }
  Vec bracket(const Vec& x, const Vec& y) const;
  /// Matrix of ad x acting on column vectors: (ad x) v = [x, v].
  Matrix ad(const Vec& x) const;

  const Matrix& gram() const { return gram_; }
  const Matrix& center_form() const { return center_form_; }
  Scalar form(const Vec& x, const Vec& y) const;

  Vec basis_vector(int slot) const { return exact::unit_vec(dim_, slot); }
  Vec e(int alpha) const { return basis_vector(root_slot(alpha)); }
  /// Cartan element from simple-coroot coordinates (length rank()).
  Vec cartan_element(const roots::RatVec& coords) const;
  /// h_alpha = [e_alpha, e_-alpha].
  Vec coroot_vector(int alpha) const;

  /// Component in h + center (the full Cartan subalgebra).
  Vec cartan_part(const Vec& x) const;
  /// Full-Cartan coordinates of x (length cartan_dim()).
  Vec cartan_coords(const Vec& x) const;
  Vec from_cartan_coords(const Vec& c) const;

  Subspace cartan() const;
  Subspace center() const;
  Subspace root_span(const roots::RootSubset& s) const;

  bool is_subalgebra(const Subspace& s) const;
  /// Subspace spanned by all brackets of basis elements of a and b.
  Subspace bracket_span(const Subspace& a, const Subspace& b) const;

 private:
  RootSystem roots_;
  int center_dim_;
  int dim_;
  Matrix center_form_;
  Matrix gram_;
  std::vector<int> n_;
  std::vector<std::vector<std::pair<int, long>>> table_;

  void compute_structure_constants();
  void build_table();
  void build_gram();
};

struct TriangularParts {
  Subspace n_plus;
  Subspace n_minus;
  Subspace b_plus;
  Subspace b_minus;
  Subspace cartan;
  Subspace center;
};

TriangularParts triangular_parts(const LieAlgebra& g);

}  // namespace lagsub::lie
