#pragma once

#include "lagsub/lie/algebra.hpp"

namespace lagsub::dbl {

using exact::Matrix;
using exact::Scalar;
using exact::Subspace;
using exact::Vec;
using lie::LieAlgebra;

/// Vectors of g x g are concatenations (x, y) of length 2 dim g.
Vec pair(const Vec& x, const Vec& y);
Vec first(const LieAlgebra& g, const Vec& v);
Vec second(const LieAlgebra& g, const Vec& v);

/// <(x1,y1),(x2,y2)> = <x1,x2> - <y1,y2>.
Scalar double_form(const LieAlgebra& g, const Vec& u, const Vec& v);
Vec double_bracket(const LieAlgebra& g, const Vec& u, const Vec& v);

struct LagrangianVerdict {
  bool isotropic = false;
  std::size_t dim = 0;
  bool closed = false;
  bool lagrangian = false;
};

LagrangianVerdict verify_lagrangian(const LieAlgebra& g, const Subspace& s);

Subspace diagonal(const LieAlgebra& g);
/// m = {(x,y) in b- x b+ : x_h + y_h = 0}, h the full Cartan subalgebra.
Subspace manin_complement(const LieAlgebra& g);

/// {x in g : (x,x) in s}.
Subspace diag_intersection(const LieAlgebra& g, const Subspace& s);

/// Image of s under (x,y) -> (u x, v y).
Subspace apply_pair(const Matrix& u, const Matrix& v, const Subspace& s);

struct ManinVerdict {
  LagrangianVerdict diagonal;
  LagrangianVerdict complement;
  bool trivial_intersection = false;
  bool spanning = false;
  bool passed() const {
    return diagonal.lagrangian && complement.lagrangian && trivial_intersection && spanning;
  }
};

ManinVerdict manin_triple_check(const LieAlgebra& g);

}  // namespace lagsub::dbl
