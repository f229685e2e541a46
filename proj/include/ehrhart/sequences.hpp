#pragma once

#include "ehrhart/numeric.hpp"

namespace ehrhart {

class Polynomial;

/// Generalized binomial coefficient C(n, k) for any integer n and k >= 0:
/// the product formula prod_{i=0}^{k-1} (n - i) / k!, always an integer.
Int binomial(const Int& n, unsigned k);

/// Signed Stirling number of the first kind s(d, r):
/// x(x-1)...(x-d+1) = sum_r s(d, r) x^r. Requires 0 <= r <= d.
Int stirling_first(unsigned d, unsigned r);

/// The d-th Bernoulli polynomial B_d(x), d >= 1, computed by the exact
/// recurrence B_d'(x) = d * B_{d-1}(x) with integral normalization
/// (the integral of B_d over [0,1] vanishes). Satisfies
/// sum_{k=0}^{n-1} k^{d-1} = (B_d(n) - B_d(0)) / d.
Polynomial bernoulli_polynomial(unsigned d);

}  // namespace ehrhart
