#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lagsub/roots/isometry.hpp"
#include "lagsub/roots/root_system.hpp"

namespace lagsub::roots {

/// Discrete data (P, P', sigma, h); h in simple-coroot coordinates.
struct OrbitKey {
  RootSubset p;
  RootSubset p_prime;
  /// Graph of sigma as sorted pairs (alpha, sigma(alpha)).
  std::vector<std::pair<int, int>> sigma;
  RatVec h;

  friend bool operator==(const OrbitKey& a, const OrbitKey& b) {
    return a.p == b.p && a.p_prime == b.p_prime && a.sigma == b.sigma && a.h == b.h;
  }
  friend bool operator<(const OrbitKey& a, const OrbitKey& b);
};

OrbitKey make_key(const RootSubset& p, const RootSubset& p_prime, const RootIsometry& sigma,
                  const RatVec& h);

/// (wP, wP', w sigma w^-1, wh).
OrbitKey act(const RootSystem& r, const WeylElement& w, const OrbitKey& k);

/// Lexicographically smallest member of the W-orbit of the tuple.
OrbitKey weyl_canonical_label(const RootSystem& r, const RootSubset& p, const RootSubset& p_prime,
                              const RootIsometry& sigma, const RatVec& h);
OrbitKey weyl_canonical_label(const RootSystem& r, const OrbitKey& k);

std::string to_string(const OrbitKey& k);

}  // namespace lagsub::roots
