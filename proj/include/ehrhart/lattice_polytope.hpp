#pragma once

#include "ehrhart/numeric.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ehrhart {

/// Input whose affine hull is lower-dimensional than its ambient space.
class DegeneratePolytope : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Half-space <normal, x> <= offset with a primitive outward integer normal.
/// For a facet of a lattice polytope the offset is automatically integral.
struct Facet {
    std::vector<Int> normal;
    Int offset;

    bool operator==(const Facet& o) const = default;
};

/**
 * Full-dimensional lattice polytope given by integer vertices, with the
 * exact facet description derived at construction.
 *
 * Also kept: the facet systems of the projections onto the first k
 * coordinates (k = 1..d). Projections of a polytope are where lattice-point
 * enumeration recursion lives: a point extends to the next coordinate iff
 * its prefix already lies in the projected polytope, so dilates are counted
 * by walking lattice points of the projection tower instead of a bounding
 * box.
 *
 * Immutable after construction; all queries are const and thread-safe.
 */
class LatticePolytope {
public:
    /// Validates, deduplicates, drops non-vertex points, computes facets.
    /// Throws DegeneratePolytope when the affine hull has dimension < d.
    static LatticePolytope build(std::vector<std::vector<Int>> points);

    int dimension() const { return d_; }
    const std::vector<std::vector<Int>>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return tower_.back(); }
    /// tower()[k-1] = facets of the projection onto the first k coordinates.
    const std::vector<std::vector<Facet>>& tower() const { return tower_; }

    /// Exact number of integer points of n*P (n >= 0); strict inequalities
    /// when interior is set. n = 0 gives 1 (closed) / 0 (interior).
    Int count_lattice_points(const Int& n, bool interior = false) const;

    /// The points themselves, lexicographically ordered. Desk-scale only.
    std::vector<std::vector<Int>> enumerate_lattice_points(const Int& n,
                                                           bool interior = false) const;

    /// n*P for n >= 1: vertices scale by n, facet normals stay, offsets scale.
    LatticePolytope dilate(const Int& n) const;

    /// Exact membership test of a rational point.
    bool contains(const std::vector<Rat>& x, bool strict = false) const;

private:
    LatticePolytope() = default;
    int d_ = 0;
    std::vector<std::vector<Int>> vertices_;
    std::vector<std::vector<Facet>> tower_;
};

/// Complete irredundant facet system of conv(points) by exhaustive
/// hyperplane scan over d-subsets, exact arithmetic. Throws
/// DegeneratePolytope if the points do not span the ambient space.
std::vector<Facet> facet_enumeration(const std::vector<std::vector<Int>>& points);

/// Rank of the affine hull of the point set.
int affine_rank(const std::vector<std::vector<Int>>& points);

}  // namespace ehrhart
