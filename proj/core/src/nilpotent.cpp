#include "lagsub/lie/nilpotent.hpp"

#include <map>

#include "lagsub/error.hpp"
#include "lagsub/lie/algebra_map.hpp"

namespace lagsub::lie {

namespace {

// Multiplicity of each eigenvalue of ad h in [-bound, bound].
std::map<long, std::size_t> ad_spectrum(const LieAlgebra& g, const Vec& h, long bound) {
  const Matrix ad = g.ad(h);
  std::map<long, std::size_t> out;
  for (long k = -bound; k <= bound; ++k) {
    const Matrix m = ad - Scalar(k) * Matrix::identity(g.dim());
    const std::size_t mult = g.dim() - exact::rank(m);
    if (mult) out[k] = mult;
  }
  return out;
}

std::map<long, std::size_t> diagram_spectrum(const LieAlgebra& g, const roots::RatVec& h) {
  std::map<long, std::size_t> out;
  out[0] = g.cartan_dim();
  for (int a = 0; a < g.num_roots(); ++a) {
    const mpq_class v = g.roots().evaluate(a, h);
    ++out[v.get_num().get_si()];
  }
  return out;
}

}  // namespace

roots::RatVec dominant_representative(const RootSystem& r, roots::RatVec h) {
  while (true) {
    bool moved = false;
    for (int i = 0; i < r.rank(); ++i) {
      const mpq_class v = r.evaluate(i, h);
      if (v < 0) {
        h[i] -= v;
        moved = true;
      }
    }
    if (!moved) return h;
  }
}

NilpotentDatum jacobson_morozov_characteristic(const LieAlgebra& g, const Vec& x,
                                               const std::optional<Subspace>& ambient) {
  const std::size_t n = g.dim();
  if (x.size() != n) throw DimensionMismatch("nilpotent element has the wrong length");
  if (!is_ad_nilpotent(g, x)) throw PreconditionFailed("x is not nilpotent");
  const Subspace s = ambient ? *ambient : Subspace::full(n);
  if (!s.contains(x)) throw PreconditionFailed("x is outside the ambient subalgebra");

  NilpotentDatum d;
  d.x = x;
  d.h = exact::zero_vec(n);
  d.y = exact::zero_vec(n);
  d.h_coords.assign(g.rank(), 0);
  d.h_dominant.assign(g.rank(), 0);
  d.h_in_cartan = true;
  if (exact::is_zero(x)) return d;

  const Matrix& b = s.basis();
  const std::size_t k = b.rows();
  std::vector<Vec> xb(k);
  for (std::size_t j = 0; j < k; ++j) xb[j] = g.bracket(x, b.row(j));

  // h = [x, z] with z in s, [h, x] = 2x, optionally h in the Cartan subalgebra.
  auto solve_h = [&](bool in_cartan) -> std::optional<Vec> {
    std::size_t rows = n + (in_cartan ? g.num_roots() : 0);
    Matrix m(rows, k);
    Vec rhs = exact::zero_vec(rows);
    for (std::size_t j = 0; j < k; ++j) {
      const Vec hx = g.bracket(xb[j], x);
      for (std::size_t i = 0; i < n; ++i) m(i, j) = hx[i];
      if (in_cartan) {
        for (int a = 0; a < g.num_roots(); ++a) m(n + a, j) = xb[j][g.root_slot(a)];
      }
    }
    for (std::size_t i = 0; i < n; ++i) rhs[i] = Scalar(2L) * x[i];
    const auto c = exact::solve(m, rhs);
    if (!c) return std::nullopt;
    Vec h = exact::zero_vec(n);
    for (std::size_t j = 0; j < k; ++j) exact::axpy(h, (*c)[j], xb[j]);
    return h;
  };

  auto h = solve_h(true);
  d.h_in_cartan = h.has_value();
  if (!h) h = solve_h(false);
  if (!h) throw Error("internal: no characteristic found for a nilpotent element");
  d.h = *h;

  // y with [x, y] = h and [h, y] = -2y inside s.
  {
    Matrix m(2 * n, k);
    Vec rhs = exact::zero_vec(2 * n);
    for (std::size_t j = 0; j < k; ++j) {
      const Vec hy = g.bracket(d.h, b.row(j)) + Scalar(2L) * b.row(j);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, j) = xb[j][i];
        m(n + i, j) = hy[i];
      }
    }
    for (std::size_t i = 0; i < n; ++i) rhs[i] = d.h[i];
    const auto c = exact::solve(m, rhs);
    if (!c) throw Error("internal: characteristic does not complete to an sl2-triple");
    for (std::size_t j = 0; j < k; ++j) exact::axpy(d.y, (*c)[j], b.row(j));
  }

  if (d.h_in_cartan) {
    for (int i = 0; i < g.rank(); ++i) d.h_coords[i] = d.h[g.cartan_slot(i)].as_rational();
    d.h_dominant = dominant_representative(g.roots(), d.h_coords);
    return d;
  }

  // Match ad h against the weighted Dynkin diagrams with labels in {0,1,2}.
  int max_height = 0;
  for (int a = 0; a < g.roots().num_positive(); ++a) max_height = std::max(max_height, g.roots().height(a));
  const auto target = ad_spectrum(g, d.h, 2L * max_height);
  const int r = g.rank();
  std::optional<roots::RatVec> match;
  long combos = 1;
  for (int i = 0; i < r; ++i) combos *= 3;
  const auto fw = g.roots().fundamental_coweights();
  for (long code = 0; code < combos; ++code) {
    roots::RatVec cand(r, 0);
    long c = code;
    for (int i = 0; i < r; ++i, c /= 3) {
      for (int t = 0; t < r; ++t) cand[t] += mpq_class(c % 3) * fw[i][t];
    }
    if (diagram_spectrum(g, cand) != target) continue;
    if (match) throw PreconditionFailed("characteristic is ambiguous among weighted diagrams");
    match = cand;
  }
  if (!match) throw Error("internal: characteristic matches no weighted diagram");
  d.h_coords = *match;
  d.h_dominant = *match;
  return d;
}

}  // namespace lagsub::lie
