#include "lagsub/lagrange/quadruple.hpp"

#include <algorithm>

#include "lagsub/error.hpp"
#include "lagsub/roots/parabolic.hpp"

namespace lagsub::lagrange {

Quadruple diagonal_quadruple(const LieAlgebra& g) {
  const auto& r = g.roots();
  Quadruple q;
  for (int a = 0; a < r.size(); ++a) q.p.push_back(a);
  q.p_prime = q.p;
  q.sigma = roots::identity_isometry(r, q.p);
  q.xi_scalars = lie::unit_scalars(r, q.sigma);
  const std::size_t c = g.cartan_dim();
  std::vector<Vec> rows;
  for (int j = 0; j < g.center_dim(); ++j) {
    const Vec e = exact::unit_vec(c, g.rank() + j);
    rows.push_back(exact::concat(e, e));
  }
  q.l0 = Subspace::span(2 * c, rows);
  return q;
}

Subspace embed_l0(const LieAlgebra& g, const Subspace& l0) {
  const std::size_t c = g.cartan_dim();
  if (l0.ambient() != 2 * c) throw DimensionMismatch("l0 rows must have length 2 * dim h");
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < l0.dim(); ++k) {
    const Vec row = l0.basis().row(k);
    rows.push_back(dbl::pair(g.from_cartan_coords(exact::slice(row, 0, c)),
                             g.from_cartan_coords(exact::slice(row, c, c))));
  }
  return Subspace::span(2 * g.dim(), rows);
}

QuadrupleData validate(const LieAlgebra& g, const Quadruple& q) {
  const auto& r = g.roots();
  if (!roots::is_parabolic(r, q.p)) throw PreconditionFailed("P is not a parabolic subset");
  if (!roots::is_parabolic(r, q.p_prime)) throw PreconditionFailed("P' is not a parabolic subset");
  QuadrupleData d;
  d.pd = lie::parabolic_subalgebra(g, q.p);
  d.pd_prime = lie::parabolic_subalgebra(g, q.p_prime);
  if (d.pd.z.dim() != d.pd_prime.z.dim()) {
    throw UnequalCenterDimensions("dim z = " + std::to_string(d.pd.z.dim()) + " but dim z' = " +
                                  std::to_string(d.pd_prime.z.dim()));
  }
  if (q.sigma.source != d.pd.levi_roots) throw PreconditionFailed("sigma is not defined on A = P n -P");
  if (q.sigma.target != d.pd_prime.levi_roots) throw PreconditionFailed("sigma does not map onto A' = P' n -P'");
  if (static_cast<int>(q.sigma.image.size()) != r.size() || !roots::is_isometry(r, q.sigma)) {
    throw PreconditionFailed("sigma is not a scalar-product preserving bijection A -> A'");
  }
  if (!roots::preserves_simple_system(r, q.sigma)) {
    throw PreconditionFailed("sigma preserves no simple system of U");
  }
  d.xi = lie::build_xi(g, q.sigma, q.xi_scalars);
  d.u = roots::levi_of_sigma(r, q.sigma);
  d.fixed = lie::fixed_subalgebra(g, d.xi, d.u);
  d.x = q.x.empty() ? exact::zero_vec(g.dim()) : q.x;
  if (static_cast<int>(d.x.size()) != g.dim()) throw DimensionMismatch("x has the wrong length");
  if (!d.fixed.fixed.contains(d.x)) throw PreconditionFailed("x is not in [u,u]^xi");
  if (!lie::is_ad_nilpotent(g, d.x)) throw PreconditionFailed("x is not nilpotent");
  d.theta = d.xi.matrix * lie::exp_ad_matrix(g, d.x);

  const Subspace l0 = embed_l0(g, q.l0);
  const std::size_t n = g.dim();
  for (std::size_t k = 0; k < l0.dim(); ++k) {
    const Vec row = l0.basis().row(k);
    if (!d.pd.z.contains(exact::slice(row, 0, n)) || !d.pd_prime.z.contains(exact::slice(row, n, n))) {
      throw PreconditionFailed("l0 is not contained in z x z'");
    }
  }
  if (l0.dim() != d.pd.z.dim()) {
    throw PreconditionFailed("l0 has dimension " + std::to_string(l0.dim()) + ", expected " +
                             std::to_string(d.pd.z.dim()));
  }
  for (std::size_t i = 0; i < l0.dim(); ++i) {
    for (std::size_t j = i; j < l0.dim(); ++j) {
      if (!dbl::double_form(g, l0.basis().row(i), l0.basis().row(j)).is_zero()) {
        throw PreconditionFailed("l0 is not isotropic");
      }
    }
  }
  return d;
}

Subspace construct_from_theta(const LieAlgebra& g, const lie::ParabolicData& pd,
                              const lie::ParabolicData& pd_prime, const Matrix& theta, const Subspace& l0) {
  const std::size_t n = g.dim();
  const std::size_t c = g.cartan_dim();
  const Matrix& pb = pd.p.basis();
  const Matrix& qb = pd_prime.p.basis();
  const std::size_t dp = pb.rows(), dq = qb.rows();
  const Matrix ann = exact::nullspace(l0.basis());
  const Matrix ta = theta * pd.proj_a;

  Matrix m(n + ann.rows(), dp + dq);
  for (std::size_t k = 0; k < dp + dq; ++k) {
    const bool left = k < dp;
    const Vec v = left ? pb.row(k) : qb.row(k - dp);
    const Vec a_part = left ? ta.apply(v) : -pd_prime.proj_a.apply(v);
    for (std::size_t i = 0; i < n; ++i) m(i, k) = a_part[i];
    const Vec zc = g.cartan_coords((left ? pd.proj_z : pd_prime.proj_z).apply(v));
    for (std::size_t t = 0; t < ann.rows(); ++t) {
      Scalar s;
      for (std::size_t j = 0; j < c; ++j) s += ann(t, (left ? 0 : c) + j) * zc[j];
      m(n + t, k) = s;
    }
  }
  const Matrix ker = exact::nullspace(m);
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < ker.rows(); ++k) {
    Vec x = exact::zero_vec(n), y = exact::zero_vec(n);
    for (std::size_t j = 0; j < dp; ++j) exact::axpy(x, ker(k, j), pb.row(j));
    for (std::size_t j = 0; j < dq; ++j) exact::axpy(y, ker(k, dp + j), qb.row(j));
    rows.push_back(dbl::pair(x, y));
  }
  return Subspace::span(2 * n, rows);
}

Subspace construct_l(const LieAlgebra& g, const Quadruple& q) {
  const QuadrupleData d = validate(g, q);
  return construct_from_theta(g, d.pd, d.pd_prime, d.theta, q.l0);
}

bool is_standard(const LieAlgebra& g, const Subspace& s) {
  if (!s.contains(g.cartan())) return false;
  std::size_t count = g.cartan_dim();
  for (int a = 0; a < g.num_roots(); ++a) {
    if (s.contains(g.e(a))) ++count;
  }
  return count == s.dim();
}

namespace {

Subspace project(const LieAlgebra& g, const Subspace& s, bool second) {
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < s.dim(); ++k) {
    const Vec row = s.basis().row(k);
    rows.push_back(second ? dbl::second(g, row) : dbl::first(g, row));
  }
  return Subspace::span(g.dim(), rows);
}

std::optional<Matrix> find_standardizer(const LieAlgebra& g, const Subspace& proj) {
  const std::size_t n = g.dim();
  if (is_standard(g, proj)) return Matrix::identity(n);
  std::vector<Matrix> gens;
  for (int a = 0; a < g.num_roots(); ++a) {
    for (long c : {1L, -1L}) gens.push_back(lie::exp_ad_matrix(g, Scalar(c) * g.e(a)));
  }
  for (const auto& m : gens) {
    if (is_standard(g, exact::image(m, proj))) return m;
  }
  for (const auto& m1 : gens) {
    for (const auto& m2 : gens) {
      const Matrix m = m2 * m1;
      if (is_standard(g, exact::image(m, proj))) return m;
    }
  }
  return std::nullopt;
}

RootSubset root_support(const LieAlgebra& g, const Subspace& s) {
  RootSubset out;
  for (int a = 0; a < g.num_roots(); ++a) {
    if (s.contains(g.e(a))) out.push_back(a);
  }
  return out;
}

}  // namespace

Decomposition decompose_l(const LieAlgebra& g, const Subspace& s_in) {
  const auto verdict = dbl::verify_lagrangian(g, s_in);
  if (!verdict.lagrangian) throw PreconditionFailed("decompose_l: subspace is not a Lagrangian subalgebra");
  const std::size_t n = g.dim();
  Decomposition out;
  out.u = Matrix::identity(n);
  out.v = Matrix::identity(n);
  Subspace s = s_in;
  const Subspace p1 = project(g, s, false), p2 = project(g, s, true);
  if (!is_standard(g, p1) || !is_standard(g, p2)) {
    const auto u = find_standardizer(g, p1);
    const auto v = find_standardizer(g, p2);
    if (!u || !v) {
      throw RankCapExceeded("decompose_l: no conjugating element found within the bounded search");
    }
    out.u = *u;
    out.v = *v;
    out.conjugated = true;
    s = dbl::apply_pair(out.u, out.v, s);
  }
  out.p = root_support(g, project(g, s, false));
  out.p_prime = root_support(g, project(g, s, true));
  const auto pd = lie::parabolic_subalgebra(g, out.p);
  const auto pd_prime = lie::parabolic_subalgebra(g, out.p_prime);

  // theta on a: read y_a' against x_a across the rows of s.
  const Matrix& b = s.basis();
  Matrix xa(0, n), ya(0, n);
  std::vector<Vec> l0_rows;
  for (std::size_t k = 0; k < b.rows(); ++k) {
    const Vec x = dbl::first(g, b.row(k)), y = dbl::second(g, b.row(k));
    xa.append_row(pd.proj_a.apply(x));
    ya.append_row(pd_prime.proj_a.apply(y));
    l0_rows.push_back(exact::concat(g.cartan_coords(pd.proj_z.apply(x)), g.cartan_coords(pd_prime.proj_z.apply(y))));
  }
  const Matrix rel = exact::nullspace(xa.transpose());
  if (!(rel * ya).is_zero()) throw PreconditionFailed("decompose_l: induced map on a is not well defined");
  std::vector<Vec> dom, img;
  const Matrix xat = xa.transpose();
  for (std::size_t j = 0; j < pd.a.dim(); ++j) {
    const Vec bj = pd.a.basis().row(j);
    const auto c = exact::solve(xat, bj);
    if (!c) throw PreconditionFailed("decompose_l: first projection misses part of a");
    Vec t = exact::zero_vec(n);
    for (std::size_t k = 0; k < b.rows(); ++k) exact::axpy(t, (*c)[k], ya.row(k));
    dom.push_back(bj);
    img.push_back(t);
  }
  out.theta = lie::make_map(g, dom, img);
  if (!pd_prime.a.contains(out.theta.target) || out.theta.target.dim() != pd_prime.a.dim()) {
    throw PreconditionFailed("decompose_l: induced map is not onto a'");
  }
  out.l0 = Subspace::span(2 * g.cartan_dim(), l0_rows);

  // sigma and xi-scalars when theta is root-graded.
  const auto& r = g.roots();
  roots::RootIsometry sigma;
  sigma.source = pd.levi_roots;
  sigma.target = pd_prime.levi_roots;
  sigma.image.assign(r.size(), -1);
  bool graded = true;
  for (int a : pd.levi_roots) {
    const Vec t = out.theta.apply(g.e(a));
    int hit = -1;
    for (int c = 0; c < r.size() && graded; ++c) {
      if (t[g.root_slot(c)].is_zero()) continue;
      if (hit >= 0) graded = false;
      hit = c;
    }
    if (!graded || hit < 0 || t != t[g.root_slot(hit)] * g.e(hit)) {
      graded = false;
      break;
    }
    sigma.image[a] = hit;
  }
  if (graded && roots::is_isometry(r, sigma) && roots::preserves_simple_system(r, sigma)) {
    Quadruple q;
    q.p = out.p;
    q.p_prime = out.p_prime;
    q.sigma = sigma;
    for (int beta : roots::simple_system(r, sigma.source)) {
      q.xi_scalars[beta] = out.theta.apply(g.e(beta))[g.root_slot(sigma(beta))];
    }
    q.x = exact::zero_vec(n);
    q.l0 = out.l0;
    const auto xi = lie::build_xi(g, sigma, q.xi_scalars);
    bool same = true;
    for (std::size_t j = 0; j < pd.a.dim() && same; ++j) {
      same = xi.matrix.apply(pd.a.basis().row(j)) == out.theta.apply(pd.a.basis().row(j));
    }
    if (same) out.quadruple = std::move(q);
  }
  return out;
}

int dim_xi(const roots::RootSystem& r, const roots::RootIsometry& sigma) {
  const RootSubset simple = roots::simple_system(r, sigma.source);
  Matrix m(r.rank(), simple.size());
  for (std::size_t j = 0; j < simple.size(); ++j) {
    for (int t = 0; t < r.rank(); ++t) {
      m(t, j) = Scalar(static_cast<long>(r.root(sigma(simple[j]))[t] - r.root(simple[j])[t]));
    }
  }
  return static_cast<int>(simple.size() - exact::rank(m));
}

int dim_xi_linearized(const LieAlgebra& g, const roots::RootIsometry& sigma, const lie::AlgebraMap& xi) {
  const auto& r = g.roots();
  const RootSubset simple = roots::simple_system(r, sigma.source);
  Matrix m(simple.size(), g.rank());
  for (std::size_t j = 0; j < simple.size(); ++j) {
    const int beta = simple[j];
    const Vec xe = xi.apply(g.e(beta));
    const int slot = g.root_slot(sigma(beta));
    for (int i = 0; i < g.rank(); ++i) {
      const Vec h = g.basis_vector(g.cartan_slot(i));
      const Vec d = g.bracket(h, xe) - xi.apply(g.bracket(h, g.e(beta)));
      const Scalar lambda = d[slot] / xe[slot];
      if (d != lambda * xe) throw Error("internal: torus derivative of xi leaves the root space");
      m(j, i) = lambda;
    }
  }
  return static_cast<int>(simple.size() - exact::rank(m));
}

int dim_lambda(int n) { return n * (n - 1) / 2; }

}  // namespace lagsub::lagrange
