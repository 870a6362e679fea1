#pragma once

#include <vector>

#include "interp/tuple.hpp"

namespace interp {

// A direct sum of line bundles O(a1) + ... + O(am) on the projective line,
// kept in canonical descending degree order.
struct SplitBundle {
  std::vector<i64> degrees;

  explicit SplitBundle(std::vector<i64> degs);

  i64 rank() const { return static_cast<i64>(degrees.size()); }

  friend bool operator==(const SplitBundle&, const SplitBundle&) = default;
};

i64 h0(const SplitBundle& b);
i64 h1(const SplitBundle& b);
i64 chi(const SplitBundle& b);

SplitBundle twist(const SplitBundle& b, i64 e);

// chi after elementary modifications recorded as (degree, corank) pairs.
i64 modify_chi(const SplitBundle& b,
               const std::vector<std::pair<i64, i64>>& mods);

// Interpolation for a split bundle. On P^1 removing a degree-e divisor from
// every summand is exact (O(a)(-D) = O(a - e) for any degree-e divisor), so
// the two critical degrees floor(h0/m) and ceil(h0/m) decide everything.
bool interpolates(const SplitBundle& b);

// The endgame count behind the (5g+1, g, 4g+1) base case: a codimension-one
// subspace of sections of O(2g+6) + O(2g+5) not containing the first factor
// must impose independent conditions at every degree. Checked by exact
// section counts; also verifies chi of the ambient direct-sum decomposition
// (4g summands of degree 4g+3) against 4g(4g+4).
bool last_case_core(i64 g);

}  // namespace interp
