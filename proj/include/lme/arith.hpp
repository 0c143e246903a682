#pragma once

#include <cstdint>

#include "lme/dims.hpp"

namespace lme {

struct InvariantBundle {
  Wide delta = 0;
  Wide r = 0;
  std::int64_t gmax = 1;
  Wide product = 0;
};

/// Expected dimension: prod(d) - 1 - sum_i (d_i^2 - 1).
Wide delta(const DimVec& d);

/// Sum of squared gcds over all k-element subsets of the entries.
/// gk(d, 1) = sum d_i^2; gk(d, n) = gcd of all entries, squared.
Wide gk(const DimVec& d, int k);

/// prod(d) + sum_{k=1..n} (-1)^k gk(d, k). Its sign decides whether a
/// locally maximally entangled state exists.
Wide r_invariant(const DimVec& d);

/// Maximum gcd over pairs of entries.
std::int64_t gmax(const DimVec& d);

/// Removes all entries equal to 1. Errors with InsufficientNontrivial if
/// fewer than two entries would remain. delta, r_invariant and gmax are
/// unchanged by this.
DimVec strip_ones(const DimVec& d);

InvariantBundle invariants(const DimVec& d);

}  // namespace lme
