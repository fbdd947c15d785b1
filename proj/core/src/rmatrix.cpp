#include "lagsub/dbl/rmatrix.hpp"

#include <tuple>

#include "lagsub/error.hpp"

namespace lagsub::dbl {

RTensor split(const Matrix& r) {
  const Scalar half(mpq_class(1, 2));
  RTensor out;
  out.r = r;
  out.sym = half * (r + r.transpose());
  out.alt = half * (r - r.transpose());
  return out;
}

Matrix casimir(const LieAlgebra& g) {
  const auto inv = exact::inverse(g.gram());
  if (!inv) throw PreconditionFailed("invariant form is degenerate");
  return *inv;
}

RTensor sklyanin_r(const LieAlgebra& g) {
  const Matrix t = casimir(g);
  const std::size_t n = g.dim();
  const auto& roots = g.roots();
  const Scalar half(mpq_class(1, 2));
  Matrix r(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (t(i, j).is_zero()) continue;
      const bool ci = !g.is_root_slot(static_cast<int>(i));
      const bool cj = !g.is_root_slot(static_cast<int>(j));
      if (ci && cj) {
        r(i, j) = half * t(i, j);
      } else if (!ci && !cj && roots.is_positive(static_cast<int>(i)) && !roots.is_positive(static_cast<int>(j))) {
        r(i, j) = t(i, j);
      }
    }
  }
  return split(r);
}

bool Tensor3::is_zero() const {
  for (const auto& s : data) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Tensor3 cybe_residual(const LieAlgebra& g, const Matrix& r) {
  const std::size_t n = g.dim();
  if (r.rows() != n || r.cols() != n) throw DimensionMismatch("r-matrix has the wrong shape");
  std::vector<std::tuple<int, int, Scalar>> entries;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!r(i, j).is_zero()) entries.emplace_back(static_cast<int>(i), static_cast<int>(j), r(i, j));
    }
  }
  Tensor3 out;
  out.n = n;
  out.data.assign(n * n * n, Scalar());
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar& { return out.data[(i * n + j) * n + k]; };
  for (const auto& [a, b, rab] : entries) {
    for (const auto& [c, d, rcd] : entries) {
      const Scalar w = rab * rcd;
      for (const auto& [k, v] : g.bracket_basis(a, c)) at(k, b, d) += w * Scalar(v);
      for (const auto& [k, v] : g.bracket_basis(b, c)) at(a, k, d) += w * Scalar(v);
      for (const auto& [k, v] : g.bracket_basis(b, d)) at(a, c, k) += w * Scalar(v);
    }
  }
  return out;
}

Matrix invariance_residual(const LieAlgebra& g, const Matrix& t, int slot) {
  const Matrix ad = g.ad(g.basis_vector(slot));
  return ad * t + t * ad.transpose();
}

bool is_invariant(const LieAlgebra& g, const Matrix& t) {
  for (int s = 0; s < g.dim(); ++s) {
    if (!invariance_residual(g, t, s).is_zero()) return false;
  }
  return true;
}

}  // namespace lagsub::dbl
