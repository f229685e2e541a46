#pragma once

#include "ehrhart/ehrhart_profile.hpp"
#include "ehrhart/lattice_polytope.hpp"
#include "ehrhart/sturm.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace ehrhart {

/**
 * Deterministic generators for every concrete polytope family used by the
 * experiments: same spec, same vertex list, on every run and platform.
 */
struct ZooSpec {
    enum class Family {
        standard_simplex,     // d
        cube,                 // d
        cross_polytope,       // d
        zero_one_octahedron,  // the six 0/1 points with coordinate sum 1 or 2
        nameless,             // six 4-coordinate points, constant first coordinate dropped
        prism,                // unimodular triangle times a segment
        square_pyramid,       // unit square plus apex (0,0,1)
        bipyramid,            // unit tetrahedron plus opposite corner (1,1,1)
        cube_minus_corner,    // {0,1}^3 minus (1,1,1)
        fat_tetrahedron,      // even-coordinate-sum corners of the cube
        order_polytope,       // d: 0 <= x_0 <= x_k <= 1
        cyclic,               // n, d: moment curve at t = 1..n
        triangle_family,      // x: conv{(0,0),(1,0),(0,x)}
        rectangle_family,     // x: conv{(0,0),(2,0),(2,x),(0,x)}
        exceptional_triangle, // conv{(0,0),(3,0),(0,3)}
        random_lattice,       // d, vertex_count, coordinate_range, seed
        random_zero_one,      // d, vertex_count, seed
    };

    Family family{};
    int d = 0;
    int n = 0;
    long long x = 0;
    int vertex_count = 0;
    int coordinate_range = 0;
    std::uint64_t seed = 0;
};

/// Parses the CLI form "family" or "family:p1,p2,...", e.g. "cyclic:6,3"
/// (n vertices, dimension d) or "random_lattice:3,8,9,42".
ZooSpec parse_zoo_spec(const std::string& text);
std::string zoo_spec_name(const ZooSpec& spec);

LatticePolytope generate(const ZooSpec& spec);

/// SplitMix64 mixing step; the documented seed-splitting rule for batch
/// sampling is sample k uses splitmix64(master_seed + k).
std::uint64_t splitmix64(std::uint64_t x);

/// One random lattice polytope: vertex_count points drawn uniformly from
/// {0..coordinate_range}^d by a rejection-sampled mt19937_64 stream,
/// retried (fresh draws, same stream) up to 64 times if degenerate.
LatticePolytope random_lattice_polytope(int d, int vertex_count, int coordinate_range,
                                        std::uint64_t seed);
LatticePolytope random_zero_one_polytope(int d, int vertex_count, std::uint64_t seed);

/// Batch entry point used by the scatter sweeps: sample index k of a
/// d-dimensional run with master seed s draws vertex count (3..8 in 2D,
/// 4..8 in 3D and up) and coordinates in {0..9}^d from the stream seeded
/// splitmix64(s + k).
LatticePolytope sample_random_polytope(int d, std::uint64_t master_seed, std::uint64_t index);

/// Closed form i_{P_d}(n) = (B_d(n+2) - B_d(0))/d of the order polytope
/// 0 <= x_0 <= x_k <= 1, exact, d >= 2.
Polynomial order_polytope_ehrhart(int d);

/// Sturm-certified largest real root of order_polytope_ehrhart(d),
/// interval width below 1e-9.
RootInterval largest_real_root_order_polytope(int d);

struct CyclicConjectureResult {
    bool holds = false;
    std::string witness;  // exact mismatch description when it fails
    EhrhartProfile full;  // C(n, d)
    EhrhartProfile lower; // C(n, d-1)
};

/// Coefficient-wise check that i_{C(n,d)} minus its leading term equals
/// i_{C(n,d-1)}, both profiles computed from scratch. Requires n > d >= 2.
CyclicConjectureResult check_cyclic_conjecture(int n, int d);

/// For every lattice point y of m*C(n,d-1): the vertical fiber over y meets
/// the boundary of m*C(n,d) at integral heights (a coincident top and
/// bottom is the degenerate double point).
bool check_fiber_integrality(int n, int d, const Int& m);

}  // namespace ehrhart
