#pragma once

#include <optional>

#include "lagsub/lie/algebra.hpp"

namespace lagsub::lie {

/// sl2-triple (x, h, y) with [h,x] = 2x, [h,y] = -2y, [x,y] = h.
struct NilpotentDatum {
  Vec x;
  Vec h;
  Vec y;
  /// True when h was found inside the fixed Cartan subalgebra.
  bool h_in_cartan = false;
  /// Simple-coroot coordinates of h (when h_in_cartan), else of the dominant form.
  roots::RatVec h_coords;
  /// W-conjugate of h with a_i(h) >= 0 for every simple root.
  roots::RatVec h_dominant;
};

/**
 * Characteristic of a nilpotent x inside `ambient` (default: all of g).
 * Prefers h in the fixed Cartan subalgebra and in im(ad x); falls back to a
 * general h matched to a weighted Dynkin diagram by ad-eigenvalues. Throws
 * PreconditionFailed if x is not nilpotent or outside the ambient subalgebra.
 */
NilpotentDatum jacobson_morozov_characteristic(const LieAlgebra& g, const Vec& x,
                                               const std::optional<Subspace>& ambient = std::nullopt);

/// Dominant W-conjugate of a Cartan element (simple-coroot coordinates).
roots::RatVec dominant_representative(const RootSystem& r, roots::RatVec h);

}  // namespace lagsub::lie
