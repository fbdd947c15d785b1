#include "lagsub/lie/parabolic_subalgebra.hpp"

#include <algorithm>

#include "lagsub/error.hpp"
#include "lagsub/lie/algebra_map.hpp"
#include "lagsub/roots/parabolic.hpp"

namespace lagsub::lie {

ParabolicData parabolic_subalgebra(const LieAlgebra& g, const roots::RootSubset& p) {
  const auto& r = g.roots();
  if (!roots::is_parabolic(r, p)) throw PreconditionFailed("subset is not parabolic");
  ParabolicData d;
  d.p_roots = p;
  d.levi_roots = roots::levi_part(r, p);
  const std::size_t n = g.dim();

  d.p = exact::sum(g.cartan(), g.root_span(p));
  std::vector<Vec> tilde;
  for (int b : roots::simple_system(r, d.levi_roots)) tilde.push_back(g.coroot_vector(b));
  d.cartan_tilde = Subspace::span(n, tilde);
  d.a = levi_subalgebra(g, d.levi_roots);
  roots::RootSubset nil;
  for (int a : p) {
    if (!std::binary_search(d.levi_roots.begin(), d.levi_roots.end(), a)) nil.push_back(a);
  }
  d.nilradical = g.root_span(nil);

  // Orthogonal projection onto h~: pi(v) = sum c_k b_k with G c = (<b_k, v>).
  const Matrix& tb = d.cartan_tilde.basis();
  const std::size_t k = tb.rows();
  Matrix gram(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = g.form(tb.row(i), tb.row(j));
  }
  d.proj_cartan_tilde = Matrix(n, n);
  if (k > 0) {
    const auto ginv = exact::inverse(gram);
    if (!ginv) throw PreconditionFailed("form is degenerate on the coroots of A");
    // Column j of the projection: image of the j-th basis vector (Cartan slots only).
    for (int s = 0; s < g.cartan_dim(); ++s) {
      const Vec v = g.basis_vector(g.full_cartan_slot(s));
      Vec rhs(k);
      for (std::size_t i = 0; i < k; ++i) rhs[i] = g.form(tb.row(i), v);
      const Vec c = ginv->apply(rhs);
      Vec img = exact::zero_vec(n);
      for (std::size_t i = 0; i < k; ++i) exact::axpy(img, c[i], tb.row(i));
      for (std::size_t row = 0; row < n; ++row) d.proj_cartan_tilde(row, g.full_cartan_slot(s)) = img[row];
    }
  }
  d.proj_a = d.proj_cartan_tilde;
  for (int a : d.levi_roots) d.proj_a(g.root_slot(a), g.root_slot(a)) = Scalar(1L);
  d.proj_z = Matrix(n, n);
  for (int s = 0; s < g.cartan_dim(); ++s) {
    const std::size_t c = g.full_cartan_slot(s);
    for (std::size_t row = 0; row < n; ++row) {
      d.proj_z(row, c) = (row == c ? Scalar(1L) : Scalar()) - d.proj_cartan_tilde(row, c);
    }
  }
  std::vector<Vec> zrows;
  for (int s = 0; s < g.cartan_dim(); ++s) zrows.push_back(d.proj_z.col(g.full_cartan_slot(s)));
  d.z = Subspace::span(n, zrows);

  // z maps isomorphically onto p/[p,p].
  const Subspace derived = g.bracket_span(d.p, d.p);
  if (derived.dim() + d.z.dim() != d.p.dim() || exact::meet(derived, d.z).dim() != 0) {
    throw PreconditionFailed("z does not map isomorphically onto p/[p,p]");
  }
  return d;
}

}  // namespace lagsub::lie
