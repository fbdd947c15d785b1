#include "lagsub/integrab/integrability.hpp"

#include "lagsub/error.hpp"
#include "lagsub/roots/parabolic.hpp"

namespace lagsub::integrab {

namespace {

bool is_rational(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_rational()) return false;
    }
  }
  return true;
}

// Rows of a rational matrix scaled to integers, one denominator per column.
exact::IntMatrix integral_columns(const Matrix& m) {
  std::vector<mpz_class> lcm(m.cols(), 1);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      mpz_lcm(lcm[c].get_mpz_t(), lcm[c].get_mpz_t(), m(r, c).as_rational().get_den_mpz_t());
    }
  }
  exact::IntMatrix out(m.rows(), exact::IntVec(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class v = m(r, c).as_rational() * lcm[c];
      out[r][c] = v.get_num();
    }
  }
  return out;
}

// Rows of the lattice L whose span is L n s, for a rational subspace s.
std::vector<Vec> sublattice_of(const Subspace& s, const GroupForm& gf) {
  const std::size_t n = gf.basis.rows();
  const Matrix ann = exact::nullspace(s.basis());
  std::vector<Vec> out;
  exact::IntegerLattice coeffs(n);
  if (ann.rows() == 0) {
    exact::IntMatrix id(n, exact::IntVec(n, 0));
    for (std::size_t k = 0; k < n; ++k) id[k][k] = 1;
    coeffs = exact::hnf(id, n);
  } else {
    coeffs = exact::integer_left_kernel(integral_columns(gf.basis * ann.transpose()), ann.rows());
  }
  for (const auto& row : coeffs.basis()) {
    Vec v = exact::zero_vec(gf.basis.cols());
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(row[k]) != 0) exact::axpy(v, Scalar(mpq_class(row[k])), gf.basis.row(k));
    }
    out.push_back(v);
  }
  return out;
}

LatticeTest rational_test(const Subspace& s, const GroupForm& gf) {
  LatticeTest t;
  if (s.ambient() != gf.basis.cols()) throw DimensionMismatch("subspace and lattice live in different spaces");
  for (std::size_t k = 0; k < s.dim(); ++k) {
    const Vec row = s.basis().row(k);
    for (const auto& e : row) {
      if (!e.is_rational()) {
        t.failing_direction = row;
        return t;
      }
    }
  }
  t.passed = true;
  t.sublattice = sublattice_of(s, gf);
  return t;
}

GroupForm with_center(const LieAlgebra& g, const std::vector<Vec>& semisimple, const std::string& name) {
  const std::size_t c = g.cartan_dim();
  GroupForm gf;
  gf.preset = name;
  gf.basis = Matrix(0, c);
  for (const auto& v : semisimple) gf.basis.append_row(exact::concat(v, exact::zero_vec(c - v.size())));
  for (int j = 0; j < g.center_dim(); ++j) gf.basis.append_row(exact::unit_vec(c, g.rank() + j));
  return gf;
}

}  // namespace

GroupForm preset_group_form(const LieAlgebra& g, const std::string& name) {
  const auto& r = g.roots();
  std::vector<Vec> rows;
  if (name == "adjoint") {
    for (const auto& w : r.fundamental_coweights()) {
      Vec v;
      for (const auto& e : w) v.emplace_back(e);
      rows.push_back(v);
    }
  } else if (name == "simply-connected") {
    for (int i = 0; i < r.rank(); ++i) rows.push_back(exact::unit_vec(r.rank(), i));
  } else {
    throw PreconditionFailed("unknown group-form preset '" + name + "'");
  }
  return with_center(g, rows, name);
}

GroupForm user_group_form(const LieAlgebra& g, const Matrix& rows) {
  const auto c = static_cast<std::size_t>(g.cartan_dim());
  if (rows.cols() != c) throw DimensionMismatch("lattice rows must have length dim h");
  if (!is_rational(rows)) throw PreconditionFailed("lattice basis must be rational");
  if (rows.rows() != c || exact::rank(rows) != c) {
    throw PreconditionFailed("lattice must have full rank dim h");
  }
  return GroupForm{rows, "user"};
}

Subspace compute_V(const LieAlgebra& g, const lagrange::Quadruple& q) {
  const auto d = lagrange::validate(g, q);
  const auto& r = g.roots();
  const std::size_t c = g.cartan_dim();

  // x -> (x_z, x_z') followed by the annihilator of l0.
  const Matrix ann = exact::nullspace(q.l0.basis());
  Matrix zz(2 * c, c);
  // sigma^vee(x_h~) - x_h~'.
  const roots::RootSubset simple = roots::simple_system(r, q.sigma.source);
  Matrix coroots(c, simple.size());
  for (std::size_t j = 0; j < simple.size(); ++j) {
    const Vec h = g.cartan_coords(g.coroot_vector(simple[j]));
    for (std::size_t k = 0; k < c; ++k) coroots(k, j) = h[k];
  }
  Matrix sig(c, c);
  for (std::size_t k = 0; k < c; ++k) {
    const Vec x = g.from_cartan_coords(exact::unit_vec(c, k));
    const Vec xz = g.cartan_coords(d.pd.proj_z.apply(x));
    const Vec xz_prime = g.cartan_coords(d.pd_prime.proj_z.apply(x));
    for (std::size_t t = 0; t < c; ++t) {
      zz(t, k) = xz[t];
      zz(c + t, k) = xz_prime[t];
    }
    const Vec xt = g.cartan_coords(d.pd.proj_cartan_tilde.apply(x));
    const auto coeff = exact::solve(coroots, xt);
    if (!coeff) throw Error("internal: h~ is not spanned by the coroots of A");
    Vec image = exact::zero_vec(c);
    for (std::size_t j = 0; j < simple.size(); ++j) {
      exact::axpy(image, (*coeff)[j], g.cartan_coords(g.coroot_vector(q.sigma(simple[j]))));
    }
    const Vec diff = image - g.cartan_coords(d.pd_prime.proj_cartan_tilde.apply(x));
    for (std::size_t t = 0; t < c; ++t) sig(t, k) = diff[t];
  }
  Matrix system = ann * zz;
  for (std::size_t t = 0; t < c; ++t) system.append_row(sig.row(t));
  return Subspace::span(exact::nullspace(system));
}

LatticeTest test_algebraic(const Subspace& v, const GroupForm& gf) { return rational_test(v, gf); }

Subspace real_points(const Subspace& v) {
  const std::size_t n = v.ambient();
  const Matrix ann = exact::nullspace(v.basis());
  Matrix split(0, n);
  for (std::size_t k = 0; k < ann.rows(); ++k) {
    Vec re, im;
    for (const auto& e : ann.row(k)) {
      re.push_back(e.real_part());
      im.push_back(e.imag_part());
    }
    split.append_row(re);
    split.append_row(im);
  }
  if (split.rows() == 0) return Subspace::full(n);
  return Subspace::span(exact::nullspace(split));
}

LatticeTest test_closed(const Subspace& v, const GroupForm& gf) { return rational_test(real_points(v), gf); }

IntegrabilityVerdict integrability_verdict(const LieAlgebra& g, const lagrange::Quadruple& q, const GroupForm& gf) {
  IntegrabilityVerdict out;
  out.v = compute_V(g, q);
  out.v_real = real_points(out.v);
  out.algebraic = test_algebraic(out.v, gf);
  out.closed = rational_test(out.v_real, gf);
  return out;
}

}  // namespace lagsub::integrab
