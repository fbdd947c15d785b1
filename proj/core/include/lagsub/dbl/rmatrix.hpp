#pragma once

#include <vector>

#include "lagsub/lie/algebra.hpp"

namespace lagsub::dbl {

using exact::Matrix;
using exact::Scalar;
using lie::LieAlgebra;

/// Element of g (x) g as the coefficient matrix r^{ij} of b_i (x) b_j.
struct RTensor {
  Matrix r;
  Matrix sym;
  Matrix alt;
};

/// Splits r into its symmetric and antisymmetric parts.
RTensor split(const Matrix& r);

/// The Casimir tensor t: coefficient matrix is the inverse Gram matrix.
Matrix casimir(const LieAlgebra& g);

/// r = t0 / 2 + t1 with t0 in h (x) h and t1 in n+ (x) n-.
RTensor sklyanin_r(const LieAlgebra& g);

/// Dense element of g (x) g (x) g, entry (i,j,k) at (i*n + j)*n + k.
struct Tensor3 {
  std::size_t n = 0;
  std::vector<Scalar> data;
  bool is_zero() const;
};

/// [r12, r13] + [r12, r23] + [r13, r23].
Tensor3 cybe_residual(const LieAlgebra& g, const Matrix& r);

/// ad_x T + T ad_x^T for the basis element x = b_slot.
Matrix invariance_residual(const LieAlgebra& g, const Matrix& t, int slot);
bool is_invariant(const LieAlgebra& g, const Matrix& t);

}  // namespace lagsub::dbl
