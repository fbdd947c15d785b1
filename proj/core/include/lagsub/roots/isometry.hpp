#pragma once

#include <vector>

#include "lagsub/roots/root_system.hpp"

namespace lagsub::roots {

/// Scalar-product preserving bijection sigma: A -> A'.
struct RootIsometry {
  RootSubset source;
  RootSubset target;
  /// image[i] = sigma(i) for i in source, -1 elsewhere (length |R|).
  std::vector<int> image;

  int operator()(int i) const { return image[i]; }
  bool defined_at(int i) const { return i >= 0 && i < static_cast<int>(image.size()) && image[i] >= 0; }
  /// sigma^{-1}(j) for j in target, or -1.
  int preimage(int j) const;

  friend bool operator==(const RootIsometry& a, const RootIsometry& b) {
    return a.source == b.source && a.target == b.target && a.image == b.image;
  }
};

/// The identity on a symmetric subset.
RootIsometry identity_isometry(const RootSystem& r, const RootSubset& a);

/// Builds sigma from the images of the simple system of A (in simple_system order).
/// Returns false when the linear extension is not a bijection A -> A'.
bool extend_isometry(const RootSystem& r, const RootSubset& a, const RootSubset& a_prime,
                     const std::vector<int>& simple_images, RootIsometry& out);

/// Checks that sigma is a scalar-product preserving bijection source -> target.
bool is_isometry(const RootSystem& r, const RootIsometry& sigma);

/// All isometries A -> A' extending linearly, in lexicographic order of the
/// images of the simple system of A. Empty when the types differ.
std::vector<RootIsometry> enumerate_isometries(const RootSystem& r, const RootSubset& a,
                                               const RootSubset& a_prime);

/// U = {alpha in A n A' : sigma^l(alpha) in A n A' for all integers l}.
RootSubset levi_of_sigma(const RootSystem& r, const RootIsometry& sigma);

/// Whether sigma maps some simple system of U onto itself. Searches all
/// simple systems of U (one W(U)-orbit); throws RankCapExceeded if rank U > 4.
bool preserves_simple_system(const RootSystem& r, const RootIsometry& sigma);

/// A simple system of U fixed by sigma, or empty if there is none (or U is empty).
RootSubset stable_simple_system(const RootSystem& r, const RootIsometry& sigma);

}  // namespace lagsub::roots
