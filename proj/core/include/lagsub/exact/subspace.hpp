#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lagsub/exact/matrix.hpp"

namespace lagsub::exact {

/**
 * Subspace of K^n held by its canonical basis: the nonzero rows of the
 * reduced row-echelon form of any spanning set. Two subspaces are equal iff
 * their canonical bases are identical.
 */
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(const Matrix& rows);
  static Subspace span(std::size_t ambient, const std::vector<Vec>& rows);
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v with respect to basis() rows, or nullopt if v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;
  /// v minus its reduction against the basis; zero iff v is contained.
  Vec residual(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
/// Intersection via the left kernel of the stacked bases.
Subspace meet(const Subspace& a, const Subspace& b);
/// Image of a subspace under the linear map v -> M v.
Subspace image(const Matrix& m, const Subspace& s);
/// {v : M v in s}.
Subspace preimage(const Matrix& m, const Subspace& s);

}  // namespace lagsub::exact
