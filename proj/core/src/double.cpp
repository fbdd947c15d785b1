#include "lagsub/dbl/double.hpp"

#include "lagsub/error.hpp"

namespace lagsub::dbl {

namespace {

void check_length(const LieAlgebra& g, const Vec& v) {
  if (v.size() != 2 * static_cast<std::size_t>(g.dim())) {
    throw DimensionMismatch("vector does not live in g x g");
  }
}

}  // namespace

Vec pair(const Vec& x, const Vec& y) { return exact::concat(x, y); }
Vec first(const LieAlgebra& g, const Vec& v) { return exact::slice(v, 0, g.dim()); }
Vec second(const LieAlgebra& g, const Vec& v) { return exact::slice(v, g.dim(), g.dim()); }

Scalar double_form(const LieAlgebra& g, const Vec& u, const Vec& v) {
  check_length(g, u);
  check_length(g, v);
  return g.form(first(g, u), first(g, v)) - g.form(second(g, u), second(g, v));
}

Vec double_bracket(const LieAlgebra& g, const Vec& u, const Vec& v) {
  check_length(g, u);
  check_length(g, v);
  return pair(g.bracket(first(g, u), first(g, v)), g.bracket(second(g, u), second(g, v)));
}

LagrangianVerdict verify_lagrangian(const LieAlgebra& g, const Subspace& s) {
  if (s.ambient() != 2 * static_cast<std::size_t>(g.dim())) {
    throw DimensionMismatch("subspace does not live in g x g");
  }
  LagrangianVerdict v;
  v.dim = s.dim();
  const Matrix& b = s.basis();
  v.isotropic = true;
  for (std::size_t i = 0; i < b.rows() && v.isotropic; ++i) {
    for (std::size_t j = i; j < b.rows(); ++j) {
      if (!double_form(g, b.row(i), b.row(j)).is_zero()) {
        v.isotropic = false;
        break;
      }
    }
  }
  v.closed = true;
  for (std::size_t i = 0; i < b.rows() && v.closed; ++i) {
    for (std::size_t j = i + 1; j < b.rows(); ++j) {
      if (!s.contains(double_bracket(g, b.row(i), b.row(j)))) {
        v.closed = false;
        break;
      }
    }
  }
  v.lagrangian = v.isotropic && v.closed && v.dim == static_cast<std::size_t>(g.dim());
  return v;
}

Subspace diagonal(const LieAlgebra& g) {
  std::vector<Vec> rows;
  for (int k = 0; k < g.dim(); ++k) rows.push_back(pair(g.basis_vector(k), g.basis_vector(k)));
  return Subspace::span(2 * g.dim(), rows);
}

Subspace manin_complement(const LieAlgebra& g) {
  const auto& r = g.roots();
  const Vec zero = exact::zero_vec(g.dim());
  std::vector<Vec> rows;
  for (int a = 0; a < r.size(); ++a) {
    rows.push_back(r.is_positive(a) ? pair(zero, g.e(a)) : pair(g.e(a), zero));
  }
  for (int k = 0; k < g.cartan_dim(); ++k) {
    const Vec h = g.basis_vector(g.full_cartan_slot(k));
    rows.push_back(pair(h, -h));
  }
  return Subspace::span(2 * g.dim(), rows);
}

Subspace diag_intersection(const LieAlgebra& g, const Subspace& s) {
  const std::size_t n = g.dim();
  Matrix emb(2 * n, n);
  for (std::size_t k = 0; k < n; ++k) {
    emb(k, k) = Scalar(1L);
    emb(n + k, k) = Scalar(1L);
  }
  return exact::preimage(emb, s);
}

Subspace apply_pair(const Matrix& u, const Matrix& v, const Subspace& s) {
  const std::size_t n = u.rows();
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < s.dim(); ++k) {
    const Vec row = s.basis().row(k);
    rows.push_back(pair(u.apply(exact::slice(row, 0, n)), v.apply(exact::slice(row, n, n))));
  }
  return Subspace::span(2 * n, rows);
}

ManinVerdict manin_triple_check(const LieAlgebra& g) {
  ManinVerdict v;
  const Subspace d = diagonal(g);
  const Subspace m = manin_complement(g);
  v.diagonal = verify_lagrangian(g, d);
  v.complement = verify_lagrangian(g, m);
  v.trivial_intersection = exact::meet(d, m).dim() == 0;
  v.spanning = exact::sum(d, m).dim() == 2 * static_cast<std::size_t>(g.dim());
  return v;
}

}  // namespace lagsub::dbl
