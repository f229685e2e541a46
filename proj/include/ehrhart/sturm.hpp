#pragma once

#include "ehrhart/polynomial.hpp"

#include <vector>

namespace ehrhart {

/**
 * Certified enclosure of one real root.
 *
 * Either lo == hi (the root is exactly that rational) or the open interval
 * (lo, hi) contains exactly one real root of the queried polynomial, the
 * endpoints are not roots, and no integer lies strictly inside. The
 * no-integer-inside property makes comparisons against integer thresholds
 * (the [-d, floor(d/2)) window, the alpha < 1 proposition) exact.
 */
struct RootInterval {
    Rat lo;
    Rat hi;
    bool is_point() const { return lo == hi; }
    Rat midpoint() const { return (lo + hi) / 2; }
    double approx() const { return to_double(midpoint()); }
};

/**
 * Exact Sturm chain of a polynomial: p, p', then negated remainders, each
 * scaled to a primitive integer polynomial (positive scaling preserves the
 * sign variation count everywhere).
 */
class SturmChain {
public:
    explicit SturmChain(const Polynomial& p);

    /// Sign variations of the chain at x.
    int variations(const Rat& x) const;
    /// Sign variations at -infinity (sign < 0) or +infinity (sign > 0).
    int variations_at_infinity(int sign) const;
    /// Number of distinct real roots in (lo, hi].
    int count_roots(const Rat& lo, const Rat& hi) const;

    const Polynomial& polynomial() const { return chain_.front(); }

private:
    std::vector<Polynomial> chain_;
};

/**
 * All real roots of p in (lo, hi], as disjoint certified intervals of width
 * < eps, one root per interval (multiplicities ignored; see
 * Polynomial::squarefree_decomposition for them). Exact arithmetic
 * throughout: the number of intervals equals the Sturm variation difference.
 * Throws std::invalid_argument for the zero polynomial or lo >= hi.
 */
std::vector<RootInterval> sturm_real_roots(const Polynomial& p, const Rat& lo, const Rat& hi,
                                           const Rat& eps);

/// Number of distinct real roots of p on the whole line, exact.
int total_real_roots(const Polynomial& p);

}  // namespace ehrhart
