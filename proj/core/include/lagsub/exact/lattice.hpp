#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace lagsub::exact {

using IntVec = std::vector<mpz_class>;
using IntMatrix = std::vector<IntVec>;

/**
 * Row lattice of an integer matrix, stored in Hermite normal form: rows in
 * echelon form, each pivot positive, entries above a pivot reduced into
 * [0, pivot). The HNF is the canonical representative of the lattice.
 */
class IntegerLattice {
 public:
  explicit IntegerLattice(std::size_t ambient = 0) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return basis_.size(); }
  const IntMatrix& basis() const { return basis_; }
  bool contains(const IntVec& v) const;

  friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  friend IntegerLattice hnf(const IntMatrix& m, std::size_t ambient);
  std::size_t ambient_;
  IntMatrix basis_;
};

/// Hermite normal form of the row lattice of `m` (rows of length `ambient`).
IntegerLattice hnf(const IntMatrix& m, std::size_t ambient);

/// Basis of {c in Z^rows : c M = 0}, in Hermite normal form.
IntegerLattice integer_left_kernel(const IntMatrix& m, std::size_t cols);

std::string to_string(const IntegerLattice& l);

}  // namespace lagsub::exact
