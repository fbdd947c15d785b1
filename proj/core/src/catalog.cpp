#include "lagsub/lagrange/catalog.hpp"

#include <map>
#include <random>

#include "lagsub/error.hpp"
#include "lagsub/lie/nilpotent.hpp"
#include "lagsub/roots/parabolic.hpp"

namespace lagsub::lagrange {

namespace {

long square_free_part(long v) {
  long out = 1;
  for (long p = 2; p * p <= v; ++p) {
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  return out * v;
}

long isqrt_exact(long v) {
  long s = 0;
  while ((s + 1) * (s + 1) <= v) ++s;
  if (s * s != v) throw Error("internal: expected a perfect square");
  return s;
}

// Character value prod t_i^{gamma_i}.
mpq_class character(const roots::RootVec& gamma, const std::vector<mpq_class>& t) {
  mpq_class v = 1;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    for (int k = 0; k < std::abs(gamma[i]); ++k) v = gamma[i] > 0 ? mpq_class(v * t[i]) : mpq_class(v / t[i]);
  }
  return v;
}

struct Found {
  std::size_t p_index;
  std::size_t p_prime_index;
  roots::RootIsometry sigma;
  lie::XiScalars scalars;
  Vec x;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::vector<mpq_class> torus(int rank) {
    std::vector<mpq_class> t;
    for (int i = 0; i < rank; ++i) {
      const long v = static_cast<long>(rng_() % 3) + 1;
      t.emplace_back((rng_() & 1) ? -v : v);
    }
    return t;
  }

  long small(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::mt19937_64 rng_;
};

Quadruple twist(const LieAlgebra& g, const Quadruple& q, const std::vector<mpq_class>& t) {
  const auto& r = g.roots();
  Quadruple out = q;
  for (auto& [beta, c] : out.xi_scalars) {
    c = c * Scalar(character(r.root(q.sigma(beta)), t) / character(r.root(beta), t));
  }
  for (int a = 0; a < g.num_roots(); ++a) {
    Scalar& xa = out.x[g.root_slot(a)];
    if (!xa.is_zero()) xa = xa * Scalar(character(r.root(a), t));
  }
  return out;
}

// Applies the reflection of z in v to the first component of l0.
Subspace reflect_l0(const LieAlgebra& g, const Subspace& l0, const Vec& v) {
  const Scalar vv = g.form(v, v);
  const std::size_t c = g.cartan_dim();
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < l0.dim(); ++k) {
    const Vec row = l0.basis().row(k);
    const Vec a = g.from_cartan_coords(exact::slice(row, 0, c));
    const Scalar f = Scalar(2L) * g.form(a, v) / vv;
    const Vec ra = a - f * v;
    rows.push_back(exact::concat(g.cartan_coords(ra), exact::slice(row, c, c)));
  }
  return Subspace::span(2 * c, rows);
}

}  // namespace

RootSubset positive_roots_for(const roots::RootSystem& r, const RootSubset& u, const RootSubset& simple) {
  Matrix m(r.rank(), simple.size());
  for (std::size_t j = 0; j < simple.size(); ++j) {
    for (int t = 0; t < r.rank(); ++t) m(t, j) = Scalar(static_cast<long>(r.root(simple[j])[t]));
  }
  RootSubset out;
  for (int a : u) {
    Vec b;
    for (int t = 0; t < r.rank(); ++t) b.emplace_back(static_cast<long>(r.root(a)[t]));
    const auto c = exact::solve(m, b);
    if (!c) throw Error("internal: root outside the span of the simple system");
    bool positive = true;
    for (const auto& s : *c) positive = positive && s.as_rational() >= 0;
    if (positive) out.push_back(a);
  }
  return out;
}

std::optional<Subspace> default_l0(const LieAlgebra& g, const lie::ParabolicData& pd,
                                   const lie::ParabolicData& pd_prime, long& field_d) {
  const auto& r = g.roots();
  const std::size_t c = g.cartan_dim();
  if (pd.z.dim() == 0) return Subspace(2 * c);

  RootSubset all;
  for (int a = 0; a < r.size(); ++a) all.push_back(a);
  for (const auto& w : roots::enumerate_isometries(r, all, all)) {
    RootSubset img;
    for (int a : pd.levi_roots) img.push_back(w(a));
    std::sort(img.begin(), img.end());
    if (img != pd_prime.levi_roots) continue;
    // Coroot action of w on the Cartan subalgebra, identity on the center.
    Matrix t = Matrix::identity(c);
    for (int i = 0; i < g.rank(); ++i) {
      for (int k = 0; k < g.rank(); ++k) t(k, i) = Scalar(static_cast<long>(r.coroot(w(i))[k]));
    }
    std::vector<Vec> rows;
    for (std::size_t k = 0; k < pd.z.dim(); ++k) {
      const Vec zc = g.cartan_coords(pd.z.basis().row(k));
      rows.push_back(exact::concat(zc, t.apply(zc)));
    }
    return Subspace::span(2 * c, rows);
  }

  // dim z_ss = 1: scale a spanning vector of z_ss onto one of z'_ss.
  std::vector<Vec> ss_rows;
  for (int i = 0; i < g.rank(); ++i) ss_rows.push_back(g.basis_vector(g.cartan_slot(i)));
  const Subspace ss = Subspace::span(g.dim(), ss_rows);
  const Subspace zs = exact::meet(pd.z, ss), zs_prime = exact::meet(pd_prime.z, ss);
  if (zs.dim() != 1 || zs_prime.dim() != 1) return std::nullopt;
  const Vec u = zs.basis().row(0), u_prime = zs_prime.basis().row(0);
  const mpq_class q = (g.form(u, u) / g.form(u_prime, u_prime)).as_rational();
  if (q <= 0) return std::nullopt;
  const long num = q.get_num().get_si(), den = q.get_den().get_si();
  const long k = square_free_part(num * den);
  const mpq_class s(isqrt_exact(num * den / k), den);
  Scalar lambda;
  if (k == 1) {
    lambda = Scalar(s);
  } else {
    if (field_d != 0 && field_d != k) return std::nullopt;
    field_d = k;
    lambda = Scalar::from_parts(0, 0, s, 0, k);
  }
  std::vector<Vec> rows;
  rows.push_back(exact::concat(g.cartan_coords(u), g.cartan_coords(lambda * u_prime)));
  for (int j = 0; j < g.center_dim(); ++j) {
    const Vec zc = g.cartan_coords(g.basis_vector(g.center_slot(j)));
    rows.push_back(exact::concat(zc, zc));
  }
  return Subspace::span(2 * c, rows);
}

Catalog enumerate_orbit_labels(const LieAlgebra& g, const CatalogOptions& opts) {
  const auto& r = g.roots();
  if (r.rank() > 2) throw RankCapExceeded("orbit-label enumeration is capped at rank 2");
  Catalog cat;
  cat.field_d = opts.field_d.value_or(0);

  const auto parabolics = roots::enumerate_parabolic_subsets(r);
  std::vector<lie::ParabolicData> pds;
  for (const auto& p : parabolics) pds.push_back(lie::parabolic_subalgebra(g, p));

  std::map<roots::OrbitKey, Found> found;
  for (std::size_t i = 0; i < parabolics.size(); ++i) {
    for (std::size_t j = 0; j < parabolics.size(); ++j) {
      if (pds[i].z.dim() != pds[j].z.dim()) continue;
      for (const auto& sigma : roots::enumerate_isometries(r, pds[i].levi_roots, pds[j].levi_roots)) {
        if (!roots::preserves_simple_system(r, sigma)) {
          ++cat.non_admissible_sigma;
          continue;
        }
        const RootSubset u = roots::levi_of_sigma(r, sigma);
        const RootSubset u_pos = positive_roots_for(r, u, roots::stable_simple_system(r, sigma));
        const RootSubset simple = roots::simple_system(r, sigma.source);
        for (unsigned mask = 0; mask < (1u << simple.size()); ++mask) {
          lie::XiScalars scalars;
          for (std::size_t k = 0; k < simple.size(); ++k) scalars[simple[k]] = Scalar((mask >> k) & 1u ? -1L : 1L);
          const auto xi = lie::build_xi(g, sigma, scalars);
          const auto fixed = lie::fixed_subalgebra(g, xi, u);
          const Subspace nil = exact::meet(fixed.fixed, g.root_span(u_pos));
          const std::size_t m = nil.dim();
          for (unsigned sub = 0; sub < (1u << m); ++sub) {
            Vec x = exact::zero_vec(g.dim());
            for (std::size_t k = 0; k < m; ++k) {
              if ((sub >> k) & 1u) x = x + nil.basis().row(k);
            }
            const auto datum = lie::jacobson_morozov_characteristic(g, x, fixed.fixed);
            if (!datum.h_in_cartan) {
              ++cat.skipped_nilpotents;
              continue;
            }
            const auto key = roots::weyl_canonical_label(r, parabolics[i], parabolics[j], sigma, datum.h_coords);
            if (!found.count(key)) found.emplace(key, Found{i, j, sigma, scalars, x});
          }
        }
      }
    }
  }

  Sampler sampler(opts.seed);
  long d = cat.field_d;
  for (const auto& [key, f] : found) {
    OrbitLabel label;
    label.key = key;
    const auto& pd = pds[f.p_index];
    const auto& pd_prime = pds[f.p_prime_index];
    label.dim_z = static_cast<int>(pd.z.dim());
    label.dim_xi = dim_xi(r, f.sigma);
    label.dim_xi_linearized = dim_xi_linearized(g, f.sigma, lie::build_xi(g, f.sigma, f.scalars));
    label.dim_lambda = dim_lambda(label.dim_z);

    Quadruple& q = label.representative;
    q.p = parabolics[f.p_index];
    q.p_prime = parabolics[f.p_prime_index];
    q.sigma = f.sigma;
    q.xi_scalars = f.scalars;
    q.x = f.x;
    const auto l0 = default_l0(g, pd, pd_prime, d);
    if (!l0) {
      q.l0 = Subspace(2 * g.cartan_dim());
      cat.labels.push_back(std::move(label));
      continue;
    }
    q.l0 = *l0;
    label.has_representative = true;

    for (int s = 0; s < opts.samples; ++s) {
      Quadruple sq = twist(g, q, sampler.torus(g.rank()));
      if (s % 2 == 1 && label.dim_z > 0) {
        Vec v = exact::zero_vec(g.dim());
        for (std::size_t k = 0; k < pd.z.dim(); ++k) exact::axpy(v, Scalar(sampler.small(-2, 2)), pd.z.basis().row(k));
        if (g.form(v, v).is_zero()) v = pd.z.basis().row(0);
        if (!g.form(v, v).is_zero()) sq.l0 = reflect_l0(g, sq.l0, v);
      }
      label.samples.push_back(std::move(sq));
    }
    label.diag_dims.push_back(dbl::diag_intersection(g, construct_l(g, q)).dim());
    for (const auto& sq : label.samples) label.diag_dims.push_back(dbl::diag_intersection(g, construct_l(g, sq)).dim());
    for (auto dd : label.diag_dims) label.diag_transverse = label.diag_transverse || dd == 0;
    cat.labels.push_back(std::move(label));
  }
  cat.field_d = d;
  return cat;
}

}  // namespace lagsub::lagrange
