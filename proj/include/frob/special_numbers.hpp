#pragma once

#include <cstddef>

#include "frob/numeric.hpp"

namespace frob {

// Memoized exact tables of Bernoulli, Eulerian and Stirling-second-kind
// numbers. Grown on demand, safe for concurrent callers; values for a given
// index never change once computed.

/// B_k under the x/(e^x - 1) convention, so B_1 = -1/2.
QQ bernoulli(std::size_t k);

/// Eulerian number <n m>; 0 for m < 0 or m >= max(n,1), <0 0> = 1.
ZZ eulerian(std::size_t n, long m);

/// Stirling number of the second kind {n m}; 0 for m > n, {0 0} = 1.
ZZ stirling2(std::size_t n, std::size_t m);

}  // namespace frob
