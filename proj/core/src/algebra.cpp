#include "lagsub/lie/algebra.hpp"

#include <climits>

#include "lagsub/error.hpp"

namespace lagsub::lie {

namespace {

constexpr int kUnset = INT_MIN;

// Chevalley structure constants from the extraspecial-pair signs.
class ConstantSolver {
 public:
  explicit ConstantSolver(const RootSystem& r)
      : r_(r), n_(r.size()), memo_(n_ * n_, kUnset), extraspecial_(n_, -1) {
    for (int xi = 0; xi < r.num_positive(); ++xi) {
      for (int a = 0; a < r.num_positive(); ++a) {
        const int b = r.sum_index(xi, r.negative(a));
        if (b >= 0 && r.is_positive(b)) {
          extraspecial_[xi] = a;
          break;
        }
      }
    }
  }

  int get(int a, int b) {
    if (r_.sum_index(a, b) < 0) return 0;
    int& slot = memo_[a * n_ + b];
    if (slot == kUnset) slot = compute(a, b);
    return slot;
  }

 private:
  const RootSystem& r_;
  int n_;
  std::vector<int> memo_;
  std::vector<int> extraspecial_;

  int string_below(int a, int b) const {
    // Largest p with b - p a a root.
    int p = 0;
    int cur = b;
    while (true) {
      cur = r_.sum_index(cur, r_.negative(a));
      if (cur < 0) break;
      ++p;
    }
    return p;
  }

  static int to_int(const mpq_class& v) {
    if (v.get_den() != 1) throw Error("internal: non-integral structure constant");
    return static_cast<int>(v.get_num().get_si());
  }

  int compute(int a, int b) {
    const int sum = r_.sum_index(a, b);
    const bool pa = r_.is_positive(a), pb = r_.is_positive(b);
    if (pa && pb) {
      if (a > b) return -get(b, a);
      const int a1 = extraspecial_[sum];
      const int b1 = r_.sum_index(sum, r_.negative(a1));
      if (a == a1) return string_below(a, b) + 1;
      mpq_class acc = 0;
      const int d1 = r_.sum_index(b, r_.negative(a1));
      if (d1 >= 0) acc += mpq_class(get(b, r_.negative(a1)) * get(a, r_.negative(b1))) / r_.norm2(d1);
      const int d2 = r_.sum_index(a, r_.negative(a1));
      if (d2 >= 0) acc += mpq_class(get(r_.negative(a1), a) * get(b, r_.negative(b1))) / r_.norm2(d2);
      return to_int(r_.norm2(sum) * acc / get(a1, b1));
    }
    if (!pa && !pb) return -get(r_.negative(a), r_.negative(b));
    if (!pa) return -get(b, a);
    // a positive, b negative, c = -(a + b).
    const int c = r_.negative(sum);
    if (r_.is_positive(sum)) return to_int(r_.norm2(c) / r_.norm2(a) * get(b, c));
    return to_int(r_.norm2(c) / r_.norm2(b) * get(c, a));
  }
};

}  // namespace

LieAlgebra::LieAlgebra(RootSystem r, int center_dim, Matrix center_form)
    : roots_(std::move(r)), center_dim_(center_dim), center_form_(std::move(center_form)) {
  if (center_dim_ < 0) throw PreconditionFailed("negative center dimension");
  if (center_form_.rows() == 0 && center_dim_ > 0) center_form_ = Matrix::identity(center_dim_);
  if (static_cast<int>(center_form_.rows()) != center_dim_ ||
      static_cast<int>(center_form_.cols()) != center_dim_) {
    throw DimensionMismatch("center form must be " + std::to_string(center_dim_) + "x" +
                            std::to_string(center_dim_));
  }
  for (int i = 0; i < center_dim_; ++i) {
    for (int j = 0; j < center_dim_; ++j) {
      if (!center_form_(i, j).is_rational()) throw PreconditionFailed("center form must be rational");
      if (center_form_(i, j) != center_form_(j, i)) throw PreconditionFailed("center form is not symmetric");
    }
  }
  if (static_cast<int>(exact::rank(center_form_)) != center_dim_) {
    throw PreconditionFailed("degenerate center form");
  }
  dim_ = roots_.size() + roots_.rank() + center_dim_;
  compute_structure_constants();
  build_table();
  build_gram();
}

void LieAlgebra::compute_structure_constants() {
  const int nr = num_roots();
  n_.assign(nr * nr, 0);
  ConstantSolver solver(roots_);
  for (int a = 0; a < nr; ++a) {
    for (int b = 0; b < nr; ++b) n_[a * nr + b] = solver.get(a, b);
  }
}

void LieAlgebra::build_table() {
  const int nr = num_roots();
  table_.assign(dim_ * dim_, {});
  for (int a = 0; a < nr; ++a) {
    for (int b = 0; b < nr; ++b) {
      auto& cell = table_[a * dim_ + b];
      if (b == roots_.negative(a)) {
        const auto& co = roots_.coroot(a);
        for (int k = 0; k < rank(); ++k) {
          if (co[k] != 0) cell.emplace_back(cartan_slot(k), co[k]);
        }
      } else if (const int nab = structure_constant(a, b); nab != 0) {
        cell.emplace_back(root_slot(roots_.sum_index(a, b)), nab);
      }
    }
  }
  for (int i = 0; i < rank(); ++i) {
    for (int a = 0; a < nr; ++a) {
      long v = 0;
      for (int j = 0; j < rank(); ++j) v += roots_.root(a)[j] * roots_.cartan(i, j);
      if (v == 0) continue;
      table_[cartan_slot(i) * dim_ + a].emplace_back(a, v);
      table_[a * dim_ + cartan_slot(i)].emplace_back(a, -v);
    }
  }
}

void LieAlgebra::build_gram() {
  gram_ = Matrix(dim_, dim_);
  for (int a = 0; a < num_roots(); ++a) {
    gram_(a, roots_.negative(a)) = Scalar(mpq_class(2) / roots_.norm2(a));
  }
  for (int i = 0; i < rank(); ++i) {
    for (int j = 0; j < rank(); ++j) {
      const mpq_class v = 4 * roots_.gram(i, j) / (roots_.gram(i, i) * roots_.gram(j, j));
      gram_(cartan_slot(i), cartan_slot(j)) = Scalar(v);
    }
  }
  for (int i = 0; i < center_dim_; ++i) {
    for (int j = 0; j < center_dim_; ++j) gram_(center_slot(i), center_slot(j)) = center_form_(i, j);
  }
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_) {
    throw DimensionMismatch("bracket: vectors do not live in the algebra");
  }
  Vec out = exact::zero_vec(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const auto& cell = table_[i * dim_ + j];
      if (cell.empty()) continue;
      const Scalar c = x[i] * y[j];
      for (const auto& [k, v] : cell) out[k] += c * Scalar(v);
    }
  }
  return out;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      for (const auto& [k, v] : table_[i * dim_ + j]) m(k, j) += x[i] * Scalar(v);
    }
  }
  return m;
}

Scalar LieAlgebra::form(const Vec& x, const Vec& y) const {
  Scalar s;
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero() || gram_(i, j).is_zero()) continue;
      s += x[i] * gram_(i, j) * y[j];
    }
  }
  return s;
}

Vec LieAlgebra::cartan_element(const roots::RatVec& coords) const {
  Vec v = exact::zero_vec(dim_);
  for (int i = 0; i < rank(); ++i) v[cartan_slot(i)] = Scalar(coords[i]);
  return v;
}

Vec LieAlgebra::coroot_vector(int alpha) const {
  Vec v = exact::zero_vec(dim_);
  for (int i = 0; i < rank(); ++i) v[cartan_slot(i)] = Scalar(static_cast<long>(roots_.coroot(alpha)[i]));
  return v;
}

Vec LieAlgebra::cartan_part(const Vec& x) const {
  Vec v = exact::zero_vec(dim_);
  for (int k = 0; k < cartan_dim(); ++k) v[full_cartan_slot(k)] = x[full_cartan_slot(k)];
  return v;
}

Vec LieAlgebra::cartan_coords(const Vec& x) const {
  return exact::slice(x, num_roots(), cartan_dim());
}

Vec LieAlgebra::from_cartan_coords(const Vec& c) const {
  if (static_cast<int>(c.size()) != cartan_dim()) throw DimensionMismatch("Cartan coordinates of wrong length");
  Vec v = exact::zero_vec(dim_);
  for (int k = 0; k < cartan_dim(); ++k) v[full_cartan_slot(k)] = c[k];
  return v;
}

Subspace LieAlgebra::cartan() const {
  std::vector<Vec> rows;
  for (int k = 0; k < cartan_dim(); ++k) rows.push_back(basis_vector(full_cartan_slot(k)));
  return Subspace::span(dim_, rows);
}

Subspace LieAlgebra::center() const {
  std::vector<Vec> rows;
  for (int j = 0; j < center_dim_; ++j) rows.push_back(basis_vector(center_slot(j)));
  return Subspace::span(dim_, rows);
}

Subspace LieAlgebra::root_span(const roots::RootSubset& s) const {
  std::vector<Vec> rows;
  for (int a : s) rows.push_back(e(a));
  return Subspace::span(dim_, rows);
}

Subspace LieAlgebra::bracket_span(const Subspace& a, const Subspace& b) const {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) rows.push_back(bracket(a.basis().row(i), b.basis().row(j)));
  }
  return Subspace::span(dim_, rows);
}

bool LieAlgebra::is_subalgebra(const Subspace& s) const {
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = i + 1; j < s.dim(); ++j) {
      if (!s.contains(bracket(s.basis().row(i), s.basis().row(j)))) return false;
    }
  }
  return true;
}

TriangularParts triangular_parts(const LieAlgebra& g) {
  const auto& r = g.roots();
  roots::RootSubset pos, neg;
  for (int a = 0; a < r.size(); ++a) (r.is_positive(a) ? pos : neg).push_back(a);
  TriangularParts t;
  t.n_plus = g.root_span(pos);
  t.n_minus = g.root_span(neg);
  t.cartan = g.cartan();
  t.center = g.center();
  t.b_plus = exact::sum(t.n_plus, t.cartan);
  t.b_minus = exact::sum(t.n_minus, t.cartan);
  return t;
}

}  // namespace lagsub::lie
