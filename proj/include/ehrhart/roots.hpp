#pragma once

#include "ehrhart/polynomial.hpp"
#include "ehrhart/sturm.hpp"

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace ehrhart {

class DimensionTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sturm-certified real root: enclosure, float midpoint, multiplicity in p.
struct RealRoot {
    RootInterval interval;
    double approx = 0.0;
    int multiplicity = 1;
};

/// Numerically computed complex root with the residual |p(z)/c_d|.
struct ComplexRoot {
    double re = 0.0;
    double im = 0.0;
    double residual = 0.0;
};

struct RootReport {
    int degree = 0;
    std::vector<RealRoot> real_roots;        // certified, distinct
    std::vector<ComplexRoot> complex_roots;  // one per degree, with multiplicity
    Rat cauchy_bound;
    Rat factorial_bound;        // 1 + (degree+1)!
    bool real_interval_ok = false;   // real roots inside [-d, floor(d/2))
    bool re_conjecture_ok = false;   // -d <= Re(alpha) <= d-1 sweep
    bool converged = true;           // complex solver reached its step tolerance
};

/// 1 + max_j |c_j / c_d|, exact (Cauchy: open disc containing all roots).
Rat cauchy_bound(const Polynomial& p);

/// Unique positive root of n^d - sum_j bounds[j] n^j (bounds nonnegative,
/// indices 0..d-1), to 1e-9 absolute, bisection plus Newton polish.
/// All-zero bounds give exactly 0.
double marden_max_root(const std::vector<Rat>& bounds);

/// Root-norm bound for Ehrhart polynomials of d-polytopes, d = 2..9:
/// coefficient-ratio bounds from Betke-McMullen combined with
/// c_d >= 1/d! and c_0 = 1, fed through marden_max_root.
double dimension_bound_table(int d);

/// True iff p and all its derivatives are strictly positive at B (then all
/// real roots of p lie in (-inf, B)). Exact.
bool newton_bound_holds(const Polynomial& p, const Rat& B);

/**
 * Full root analysis: Sturm-certified real roots (window wide enough to
 * contain every real root, refined below 1e-12 with exact rational hits
 * pinned) plus an Aberth-Ehrlich simultaneous iteration on the monic float
 * image for the complex picture, initialized on the Cauchy circle,
 * step tolerance 1e-12*(1+|z|), at most 500 sweeps.
 */
RootReport find_roots(const Polynomial& p, const Rat& eps = Rat(1, Int("1000000000000")));

/// Root-location flags for a d-polytope report: first, every complex root
/// has |z| < 1+(d+1)!; second, every certified real root lies in
/// [-d, floor(d/2)). The second flag is exact thanks to the interval
/// invariants.
std::pair<bool, bool> check_root_bounds(const RootReport& report, int d);

/// Membership in the dimension-2 root region
/// {-2, -1, -2/3} union {x+iy : -1/2 <= x < 0, |y| <= sqrt(15)/6},
/// with tolerance at the boundary for float input.
bool dim2_root_region_member(double re, double im, double tol = 1e-9);
/// Exact variant for real rational input.
bool dim2_root_region_member_exact(const Rat& x);

/// g_i(n, l) = sum over (d-l)-subsets I of {0,...,d-1} of
/// prod_{k in I} (n + d - i - k), exact. The formula is total in i, which
/// the proof-machinery checks use (they look slightly past i = d).
Int gi_value(int d, int i, const Int& n, int l);

/// Cached g/lambda/s data at n = B = floor(d/2).
struct GiTable {
    int d = 0;
    int B = 0;
    std::vector<std::vector<Int>> g;  // g[i][l], 0<=i<=d, 0<=l<=d
    std::vector<Rat> lambda;          // lambda[l], 0<=l<=d-1, all positive
    std::vector<Int> s;               // s[i] = d - 2i + 1
};
GiTable build_gi_table(int d);

struct MachineryResult {
    bool ok = true;
    std::string counterexample;  // empty when ok
};

/// Exhaustive exact verification of the root-bound proof machinery:
/// positivity of g, concavity-direction of its increments, positivity of
/// lambda (checked against both of its closed forms), and
/// g(i) >= lambda(l) * s(i).
MachineryResult verify_proof_machinery(int d);

/// Proposition for d <= 4: every certified real root is < 1.
/// Throws DimensionTooLarge for d > 4.
bool check_dim_le_4_real_roots(const RootReport& report, int d);

}  // namespace ehrhart
