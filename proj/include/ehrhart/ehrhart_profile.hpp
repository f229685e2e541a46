#pragma once

#include "ehrhart/lattice_polytope.hpp"
#include "ehrhart/polynomial.hpp"

#include <vector>

namespace ehrhart {

/**
 * One Ehrhart polynomial in three linked bases: monomial coefficients c,
 * binomial-basis coefficients a (the h*-vector for genuine polytopes) and
 * forward differences delta at 0. All three are derived eagerly and stay
 * consistent under the algebra-core conversions.
 *
 * Profiles also carry hand-entered coefficient vectors (the inequality
 * audit explores the admissible coefficient region), so integrality and
 * nonnegativity of a/delta are observations to audit, not construction
 * invariants. Construction enforces c[0] = 1 and c[d] > 0 only.
 */
struct EhrhartProfile {
    int d = 0;
    std::vector<Rat> c;      // c[0..d], c[0] = 1
    std::vector<Rat> a;      // binomial basis / h*-vector
    std::vector<Rat> delta;  // forward differences at 0

    const Rat& volume() const { return c[static_cast<size_t>(d)]; }
    const Rat& surface_half() const { return c[static_cast<size_t>(d) - 1]; }

    Polynomial polynomial() const { return Polynomial(c); }

    static EhrhartProfile from_polynomial(const Polynomial& p);
    static EhrhartProfile from_coefficients(std::vector<Rat> c);
};

/// The Ehrhart polynomial of P by exact Newton forward-difference
/// interpolation through the counts at n = 0..d.
EhrhartProfile ehrhart_polynomial(const LatticePolytope& P);

/// (-1)^d i_P(-n): by reciprocity, the strict-interior count of nP.
Rat interior_count_via_reciprocity(const EhrhartProfile& profile, const Int& n);

/// Numerator f(x) = sum_j a_j x^j of the generating function
/// f(x)/(1-x)^{d+1}.
Polynomial generating_numerator(const EhrhartProfile& profile);

/// Exact evaluation of the monomial form at a rational point.
Rat evaluate(const EhrhartProfile& profile, const Rat& n);

}  // namespace ehrhart
