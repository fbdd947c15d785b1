#include "lagsub/geom/geom.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>

#include "lagsub/error.hpp"
#include "lagsub/lagrange/quadruple.hpp"
#include "lagsub/lie/algebra_map.hpp"

namespace lagsub::geom {

namespace {

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

const Matrix& exact_of(const AutPoint& p) {
  if (!p.exact) throw PreconditionFailed("automorphism has no exact form");
  return *p.exact;
}

}  // namespace

CMatrix to_complex(const Matrix& m) {
  CMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).to_complex();
  }
  return out;
}

AutPoint from_exact(const Matrix& m) { return AutPoint{to_complex(m), m}; }

PoissonX::PoissonX(const LieAlgebra& g) : PoissonX(g, dbl::sklyanin_r(g)) {}

PoissonX::PoissonX(const LieAlgebra& g, const dbl::RTensor& r) {
  if (g.rank() > 2) throw RankCapExceeded("the bracket on X is evaluated up to rank 2");
  const int n = g.dim();
  for (int mu = 0; mu < n; ++mu) ad_.push_back(to_complex(g.ad(g.basis_vector(mu))));
  r_sym_ = to_complex(r.sym);
  r_alt_ = to_complex(r.alt);
  exponentials(kStep, exp_plus_, exp_minus_);
}

void PoissonX::exponentials(double h, std::vector<CMatrix>& plus, std::vector<CMatrix>& minus) const {
  for (const auto& a : ad_) {
    plus.push_back((cdouble(h) * a).exp());
    minus.push_back((cdouble(-h) * a).exp());
  }
}

PoissonX::Derivs PoissonX::coord_derivs(const CoordFn& f, const CMatrix& p) const {
  Derivs d;
  for (const auto& a : ad_) {
    d.first.push_back((a.row(f.mu) * p.col(f.nu))(0, 0));
    d.second.push_back((p.row(f.mu) * a.col(f.nu))(0, 0));
  }
  return d;
}

cdouble PoissonX::bracket_from_derivs(const Derivs& f, const Derivs& k) const {
  const std::size_t n = ad_.size();
  cdouble out = 0;
  for (std::size_t mu = 0; mu < n; ++mu) {
    const cdouble df = f.second[mu] - f.first[mu];
    if (df == cdouble()) continue;
    for (std::size_t nu = 0; nu < n; ++nu) {
      const cdouble dk = k.second[nu] - k.first[nu];
      const cdouble sk = k.second[nu] + k.first[nu];
      out += -r_alt_(mu, nu) * df * dk + r_sym_(mu, nu) * df * sk;
    }
  }
  return out;
}

cdouble PoissonX::bracket(const CoordFn& f, const CoordFn& k, const CMatrix& p) const {
  return bracket_from_derivs(coord_derivs(f, p), coord_derivs(k, p));
}

cdouble PoissonX::jacobiator(const CoordFn& f, const CoordFn& k, const CoordFn& l, const CMatrix& p, double h) const {
  std::vector<CMatrix> other_plus, other_minus;
  if (h != kStep) exponentials(h, other_plus, other_minus);
  const auto& plus = h == kStep ? exp_plus_ : other_plus;
  const auto& minus = h == kStep ? exp_minus_ : other_minus;
  auto outer = [&](const CoordFn& a, const CoordFn& b, const CoordFn& c) {
    Derivs inner;
    for (std::size_t mu = 0; mu < ad_.size(); ++mu) {
      const CMatrix lp = plus[mu] * p, lm = minus[mu] * p;
      const CMatrix rp = p * plus[mu], rm = p * minus[mu];
      inner.first.push_back((bracket(b, c, lp) - bracket(b, c, lm)) / (2 * h));
      inner.second.push_back((bracket(b, c, rp) - bracket(b, c, rm)) / (2 * h));
    }
    return bracket_from_derivs(coord_derivs(a, p), inner);
  };
  return outer(f, k, l) + outer(k, l, f) + outer(l, f, k);
}

CMatrix exp_ad(const PoissonX& x, const std::vector<cdouble>& c) {
  CMatrix m = CMatrix::Zero(x.dim(), x.dim());
  for (std::size_t mu = 0; mu < x.dim(); ++mu) m += c[mu] * x.ad(mu);
  return m.exp();
}

Subspace build_l_g(const LieAlgebra& g, const AutPoint& p) {
  const Matrix& m = exact_of(p);
  std::vector<exact::Vec> rows;
  for (int k = 0; k < g.dim(); ++k) rows.push_back(dbl::pair(m.col(k), g.basis_vector(k)));
  return Subspace::span(2 * g.dim(), rows);
}

Subspace conjugate_subalgebra(const AutPoint& u, const AutPoint& v, const Subspace& s) {
  return dbl::apply_pair(exact_of(u), exact_of(v), s);
}

Matrix random_exact_automorphism(const LieAlgebra& g, std::mt19937_64& rng) {
  static const long kNum[] = {1, -1, 2, -2, 1, -1};
  static const long kDen[] = {1, 1, 1, 1, 2, 2};
  Matrix out = Matrix::identity(g.dim());
  for (int f = 0; f < 3; ++f) {
    const auto pick = rng() % static_cast<std::uint64_t>(g.num_roots() + g.rank());
    if (pick < static_cast<std::uint64_t>(g.num_roots())) {
      const auto k = rng() % 6;
      const exact::Scalar c(mpq_class(kNum[k], kDen[k]));
      out = out * lie::exp_ad_matrix(g, c * g.e(static_cast<int>(pick)));
    } else {
      out = out * lie::weyl_representative(g, static_cast<int>(pick) - g.num_roots());
    }
  }
  return out;
}

std::vector<CoordFn> coordinate_panel(const LieAlgebra& g) {
  const int n = g.dim();
  return {{0, 0}, {0, 1}, {n - 1, n - 1}, {1, n - 1}};
}

GeomReport geom_check(const LieAlgebra& g, std::uint64_t seed, int points, int automorphisms) {
  const PoissonX x(g);
  std::mt19937_64 rng(seed);
  GeomReport rep;
  const auto panel = coordinate_panel(g);
  const CMatrix id = CMatrix::Identity(g.dim(), g.dim());
  for (const auto& f : panel) {
    for (const auto& k : panel) rep.max_identity_bracket = std::max(rep.max_identity_bracket, std::abs(x.bracket(f, k, id)));
  }
  for (int pt = 0; pt < points; ++pt) {
    std::vector<cdouble> c;
    for (int mu = 0; mu < g.dim(); ++mu) c.emplace_back(unit_draw(rng) - 0.5, unit_draw(rng) - 0.5);
    const CMatrix p = exp_ad(x, c);
    ++rep.points;
    for (const auto& f : panel) {
      for (const auto& k : panel) {
        ++rep.pairs_tested;
        rep.max_antisymmetry_residual =
            std::max(rep.max_antisymmetry_residual, std::abs(x.bracket(f, k, p) + x.bracket(k, f, p)));
        for (const auto& l : panel) {
          ++rep.triples_tested;
          rep.max_jacobi_residual = std::max(rep.max_jacobi_residual, std::abs(x.jacobiator(f, k, l, p)));
        }
      }
    }
  }

  const Subspace diag = dbl::diagonal(g);
  const AutPoint one = from_exact(Matrix::identity(g.dim()));
  for (int a = 0; a < automorphisms; ++a) {
    const AutPoint p = from_exact(random_exact_automorphism(g, rng));
    const AutPoint u = from_exact(random_exact_automorphism(g, rng));
    ++rep.exact_automorphisms;
    const Subspace l = build_l_g(g, p);
    rep.all_l_g_lagrangian = rep.all_l_g_lagrangian && dbl::verify_lagrangian(g, l).lagrangian;
    const auto dec = lagrange::decompose_l(g, l);
    const bool full = static_cast<int>(dec.p.size()) == g.num_roots() &&
                      static_cast<int>(dec.p_prime.size()) == g.num_roots() &&
                      dec.l0.dim() == static_cast<std::size_t>(g.center_dim());
    rep.all_l_g_full_parabolic = rep.all_l_g_full_parabolic && full;
    const Matrix u_inv = *exact::inverse(*u.exact);
    const AutPoint conj = from_exact(*u.exact * *p.exact * u_inv);
    rep.equivariance_holds = rep.equivariance_holds && build_l_g(g, conj) == conjugate_subalgebra(u, u, l);
    rep.theorem_conjugation_holds = rep.theorem_conjugation_holds && conjugate_subalgebra(p, one, diag) == l;
  }
  return rep;
}

}  // namespace lagsub::geom
