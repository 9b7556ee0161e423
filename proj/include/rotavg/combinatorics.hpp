#pragma once

#include "rotavg/rational.hpp"

namespace rotavg {

// Memoized exact tables. Safe to call concurrently; entries are computed on
// first use and never evicted.

/// k! for k >= 0.
const BigInt& factorial(int k);

/// k!! for k >= -1, with (-1)!! = 0!! = 1. Throws PreconditionError for k < -1.
const BigInt& double_factorial(int k);

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

}  // namespace rotavg
