#include "lagsub/lie/algebra_map.hpp"

#include <algorithm>

#include "lagsub/error.hpp"
#include "lagsub/roots/parabolic.hpp"

namespace lagsub::lie {

namespace {

std::string root_name(const RootSystem& r, int alpha) {
  std::string s = "root " + std::to_string(alpha) + " (";
  for (int k = 0; k < r.rank(); ++k) s += (k ? "," : "") + std::to_string(r.root(alpha)[k]);
  return s + ")";
}

}  // namespace

Vec AlgebraMap::apply(const Vec& v) const {
  if (!source.contains(v)) throw DimensionMismatch("map applied outside its source");
  return matrix.apply(v);
}

AlgebraMap make_map(const LieAlgebra& g, const std::vector<Vec>& domain, const std::vector<Vec>& images) {
  if (domain.size() != images.size()) throw DimensionMismatch("make_map: domain and image counts differ");
  const std::size_t n = g.dim();
  const Matrix d = Matrix::from_rows(domain, n);
  const Matrix im = Matrix::from_rows(images, n);
  // Relations among the domain vectors must hold among the images too.
  const Matrix rel = exact::nullspace(d.transpose());
  if (!(rel * im).is_zero()) throw PreconditionFailed("make_map: inconsistent linear assignment");
  AlgebraMap f;
  f.source = Subspace::span(d);
  f.matrix = Matrix(n, n);
  const Matrix dt = d.transpose();
  for (std::size_t k = 0; k < f.source.dim(); ++k) {
    const auto c = exact::solve(dt, f.source.basis().row(k));
    Vec img = exact::zero_vec(n);
    for (std::size_t j = 0; j < domain.size(); ++j) exact::axpy(img, (*c)[j], images[j]);
    const std::size_t p = f.source.pivots()[k];
    for (std::size_t r = 0; r < n; ++r) f.matrix(r, p) = img[r];
  }
  f.target = exact::image(f.matrix, f.source);
  return f;
}

AlgebraMap identity_map(const LieAlgebra& g) {
  AlgebraMap f;
  f.source = Subspace::full(g.dim());
  f.target = f.source;
  f.matrix = Matrix::identity(g.dim());
  return f;
}

AlgebraMap compose(const AlgebraMap& a, const AlgebraMap& b) {
  if (!a.source.contains(b.target)) throw DimensionMismatch("compose: image leaves the next source");
  AlgebraMap f;
  f.source = b.source;
  f.matrix = a.matrix * b.matrix;
  f.target = exact::image(f.matrix, f.source);
  return f;
}

bool is_bracket_compatible(const LieAlgebra& g, const AlgebraMap& f) {
  const auto& b = f.source.basis();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = i + 1; j < b.rows(); ++j) {
      const Vec xy = g.bracket(b.row(i), b.row(j));
      if (!f.source.contains(xy)) return false;
      if (f.matrix.apply(xy) != g.bracket(f.matrix.apply(b.row(i)), f.matrix.apply(b.row(j)))) return false;
    }
  }
  return true;
}

bool is_isometric(const LieAlgebra& g, const AlgebraMap& f) {
  const auto& b = f.source.basis();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    const Vec fi = f.matrix.apply(b.row(i));
    for (std::size_t j = i; j < b.rows(); ++j) {
      if (g.form(b.row(i), b.row(j)) != g.form(fi, f.matrix.apply(b.row(j)))) return false;
    }
  }
  return true;
}

int nilpotency_index(const Matrix& m) {
  if (m.is_zero()) return 1;
  Matrix p = m;
  for (std::size_t k = 2; k <= m.rows(); ++k) {
    p = p * m;
    if (p.is_zero()) return static_cast<int>(k);
  }
  return -1;
}

bool is_ad_nilpotent(const LieAlgebra& g, const Vec& x) { return nilpotency_index(g.ad(x)) >= 0; }

Matrix exp_ad_matrix(const LieAlgebra& g, const Vec& x) {
  const Matrix ad = g.ad(x);
  const int k = nilpotency_index(ad);
  if (k < 0) throw PreconditionFailed("exp(ad x): ad x is not nilpotent");
  Matrix out = Matrix::identity(g.dim());
  Matrix term = Matrix::identity(g.dim());
  for (int j = 1; j < k; ++j) {
    term = Scalar(mpq_class(1, j)) * (term * ad);
    out = out + term;
  }
  return out;
}

AlgebraMap exp_ad(const LieAlgebra& g, const Vec& x) {
  AlgebraMap f = identity_map(g);
  f.matrix = exp_ad_matrix(g, x);
  return f;
}

Matrix weyl_representative(const LieAlgebra& g, int k) {
  const int neg = g.roots().negative(k);
  const Matrix a = exp_ad_matrix(g, g.e(k));
  const Matrix b = exp_ad_matrix(g, -g.e(neg));
  return a * b * a;
}

Subspace levi_subalgebra(const LieAlgebra& g, const roots::RootSubset& a) {
  std::vector<Vec> rows;
  for (int alpha : a) {
    rows.push_back(g.e(alpha));
    rows.push_back(g.coroot_vector(alpha));
  }
  return Subspace::span(g.dim(), rows);
}

Subspace derived_levi(const LieAlgebra& g, const roots::RootSubset& u) { return levi_subalgebra(g, u); }

XiScalars unit_scalars(const RootSystem& r, const roots::RootIsometry& sigma) {
  XiScalars s;
  for (int b : roots::simple_system(r, sigma.source)) s[b] = Scalar(1L);
  return s;
}

AlgebraMap build_xi(const LieAlgebra& g, const roots::RootIsometry& sigma, const XiScalars& scalars) {
  const auto& r = g.roots();
  const roots::RootSubset simple = roots::simple_system(r, sigma.source);
  for (const auto& [k, v] : scalars) {
    if (std::find(simple.begin(), simple.end(), k) == simple.end()) {
      throw PreconditionFailed("xi scalar given for " + std::to_string(k) +
                               ", which is not a simple root of A");
    }
  }
  std::vector<Vec> image(r.size());
  std::vector<char> done(r.size(), 0);
  for (int b : simple) {
    const auto it = scalars.find(b);
    if (it == scalars.end()) throw PreconditionFailed("missing xi scalar for " + root_name(r, b));
    if (it->second.is_zero()) throw PreconditionFailed("xi scalar for " + root_name(r, b) + " is zero");
    image[b] = it->second * g.e(sigma(b));
    image[r.negative(b)] = it->second.inverse() * g.e(r.negative(sigma(b)));
    done[b] = done[r.negative(b)] = 1;
  }
  // Remaining positive roots of A in height order, via e_a = [e_c, e_b] / N_cb.
  for (int a : sigma.source) {
    if (!r.is_positive(a) || done[a]) continue;
    bool found = false;
    for (int c : simple) {
      const int b = r.sum_index(a, r.negative(c));
      if (b < 0 || !done[b] || !r.is_positive(b)) continue;
      const Scalar inv = Scalar(mpq_class(1, g.structure_constant(c, b)));
      image[a] = inv * g.bracket(image[c], image[b]);
      const int na = r.negative(a), nb = r.negative(b), nc = r.negative(c);
      const Scalar inv2 = Scalar(mpq_class(1, g.structure_constant(nc, nb)));
      image[na] = inv2 * g.bracket(image[nc], image[nb]);
      done[a] = done[na] = 1;
      found = true;
      break;
    }
    if (!found) throw Error("internal: cannot reach " + root_name(r, a) + " from the simple system of A");
  }
  std::vector<Vec> domain, images;
  for (int a : sigma.source) {
    const Vec expected = g.e(sigma(a));
    const Vec& v = image[a];
    const Scalar c = v[g.root_slot(sigma(a))];
    if (c.is_zero() || v != c * expected) {
      throw PreconditionFailed("xi does not map g_alpha into g_sigma(alpha) at " + root_name(r, a));
    }
    domain.push_back(g.e(a));
    images.push_back(v);
  }
  for (int b : simple) {
    domain.push_back(g.coroot_vector(b));
    images.push_back(g.bracket(image[b], image[r.negative(b)]));
  }
  AlgebraMap xi = make_map(g, domain, images);
  for (int a : sigma.source) {
    if (xi.matrix.apply(g.coroot_vector(a)) != g.coroot_vector(sigma(a))) {
      throw PreconditionFailed("xi differs from sigma^vee on the coroot of " + root_name(r, a));
    }
  }
  if (!is_bracket_compatible(g, xi)) throw PreconditionFailed("xi is not bracket compatible");
  if (!is_isometric(g, xi)) throw PreconditionFailed("xi does not preserve the invariant form");
  return xi;
}

FixedSubalgebra fixed_subalgebra(const LieAlgebra& g, const AlgebraMap& phi, const roots::RootSubset& u) {
  const Subspace uu = derived_levi(g, u);
  if (!phi.source.contains(uu)) throw PreconditionFailed("fixed_subalgebra: map is not defined on [u,u]");
  const Matrix& b = uu.basis();
  Matrix diff(0, g.dim());
  for (std::size_t k = 0; k < b.rows(); ++k) {
    const Vec img = phi.matrix.apply(b.row(k));
    if (!uu.contains(img)) throw PreconditionFailed("fixed_subalgebra: map does not preserve [u,u]");
    diff.append_row(img - b.row(k));
  }
  const Matrix combos = exact::nullspace(diff.transpose());
  FixedSubalgebra out;
  out.fixed = Subspace::span(combos * b);
  out.cartan = exact::meet(out.fixed, g.cartan());
  return out;
}

}  // namespace lagsub::lie
