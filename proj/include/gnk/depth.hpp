#pragma once

#include "gnk/qpoly.hpp"

namespace gnk {

/// Recursion metrics for the partition-sum recurrence at (n, k).
///
/// Depth counts the nodes along the deepest chain that actually expand the
/// partition sum (k >= 2 and n >= 1); initial-condition leaves contribute
/// nothing. A summand with any negative recursive argument is identically
/// zero and its factor calls are never demanded, so vanished summands add
/// neither depth nor calls. This matches the chain count ceil(n/2) for
/// k = 2, where G(n,2) -> G(n-2,2) -> ... walks until the argument drops
/// below 1. Calls counts every argument pair an unmemoized evaluator would
/// visit in the live summands underneath (n, k), which grows fast enough to
/// need arbitrary precision.
struct DepthReport {
  long long depth = 0;
  Int calls = 0;
};

/// Brute-force instrumentation of the recursion tree (memoized walker, so it
/// covers far larger grids than the polynomial evaluator).
DepthReport koh_depth(int n, int k);

/// Closed-form maximum depth:
///   ceil(floor(k/2)*n/2) - ceil(k/2) + 1    for k in {1,2}, k >= 4 even with
///                                           n >= 2, k >= 5 odd with n >= 4;
///   ceil(n/4)                               for k = 3;
///   1                                       for n in {1,2} and for n = 3
///                                           with odd k (k >= 2);
///   0                                       for n = 0 or k <= 1.
/// Together these regimes decide every pair with n, k >= 0; OutOfCoverage is
/// thrown for negative arguments, which the analysis does not address.
long long koh_depth_fast(int n, int k);

}  // namespace gnk
