#include "lagsub/exact/subspace.hpp"

#include "lagsub/error.hpp"

namespace lagsub::exact {

Subspace Subspace::span(const Matrix& rows) {
  Subspace s(rows.cols());
  auto r = rref(rows);
  s.pivots_ = std::move(r.pivots);
  Matrix basis(s.pivots_.size(), rows.cols());
  for (std::size_t i = 0; i < s.pivots_.size(); ++i) {
    for (std::size_t c = 0; c < rows.cols(); ++c) basis(i, c) = r.reduced(i, c);
  }
  s.basis_ = std::move(basis);
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& rows) {
  return span(Matrix::from_rows(rows, ambient));
}

Subspace Subspace::full(std::size_t ambient) { return span(Matrix::identity(ambient)); }

Vec Subspace::residual(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector does not live in the ambient space");
  Vec r = v;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const Scalar c = r[pivots_[k]];
    if (c.is_zero()) continue;
    axpy(r, -c, basis_.row(k));
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero(residual(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces of different ambient spaces");
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(pivots_.size());
  for (std::size_t k = 0; k < pivots_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionMismatch("sum of subspaces of different spaces");
  Matrix m = a.basis();
  for (std::size_t r = 0; r < b.dim(); ++r) m.append_row(b.basis().row(r));
  return Subspace::span(m);
}

Subspace meet(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) {
    throw DimensionMismatch("intersection of subspaces of different spaces");
  }
  const std::size_t n = a.ambient();
  if (a.dim() == 0 || b.dim() == 0) return Subspace(n);
  // Solve c_a A = c_b B, i.e. (c_a, c_b) in the left kernel of [A; -B].
  Matrix stacked = a.basis();
  for (std::size_t r = 0; r < b.dim(); ++r) stacked.append_row(-b.basis().row(r));
  const Matrix left = nullspace(stacked.transpose());
  Matrix rows(0, n);
  for (std::size_t k = 0; k < left.rows(); ++k) {
    Vec v(n);
    for (std::size_t r = 0; r < a.dim(); ++r) axpy(v, left(k, r), a.basis().row(r));
    rows.append_row(v);
  }
  return Subspace::span(rows);
}

Subspace image(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient()) throw DimensionMismatch("image: map and subspace shapes");
  Matrix rows(0, m.rows());
  for (std::size_t r = 0; r < s.dim(); ++r) rows.append_row(m.apply(s.basis().row(r)));
  return Subspace::span(rows);
}

Subspace preimage(const Matrix& m, const Subspace& s) {
  if (m.rows() != s.ambient()) throw DimensionMismatch("preimage: map and subspace shapes");
  // v with M v in s  <=>  annihilators of s kill M v.
  const Matrix ann = nullspace(s.basis());
  return Subspace::span(nullspace(ann * m));
}

}  // namespace lagsub::exact
