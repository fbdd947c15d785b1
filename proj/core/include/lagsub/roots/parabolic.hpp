#pragma once

#include <vector>

#include "lagsub/roots/root_system.hpp"

namespace lagsub::roots {

bool is_closed(const RootSystem& r, const RootSubset& s);
bool is_symmetric(const RootSystem& r, const RootSubset& s);
/// Closed with P u (-P) = R.
bool is_parabolic(const RootSystem& r, const RootSubset& p);

/// A = P n (-P).
RootSubset levi_part(const RootSystem& r, const RootSubset& p);

/// Positive roots together with the negative roots supported on `simple`.
RootSubset standard_parabolic(const RootSystem& r, const std::vector<int>& simple);

/// Image of a subset under a Weyl element, sorted.
RootSubset apply(const WeylElement& w, const RootSubset& s);

/// Every parabolic subset, as W-orbits of the standard ones, in sorted order.
/// Throws RankCapExceeded above rank 4.
std::vector<RootSubset> enumerate_parabolic_subsets(const RootSystem& r);

/// Indecomposable positive roots of a closed symmetric subset.
RootSubset simple_system(const RootSystem& r, const RootSubset& s);

/// s_beta(gamma) for arbitrary root indices.
int reflect_by(const RootSystem& r, int beta, int gamma);

/// Dimension of the span of a set of roots.
int span_rank(const RootSystem& r, const RootSubset& s);

}  // namespace lagsub::roots
