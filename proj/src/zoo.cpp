#include "ehrhart/zoo.hpp"
#include "ehrhart/roots.hpp"
#include "ehrhart/sequences.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace ehrhart {

namespace {

using Points = std::vector<std::vector<Int>>;

Points cube_vertices(int d) {
    Points pts;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        std::vector<Int> v(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) v[static_cast<size_t>(i)] = (mask >> i) & 1u;
        pts.push_back(std::move(v));
    }
    return pts;
}

Points simplex_vertices(int d) {
    Points pts{std::vector<Int>(static_cast<size_t>(d), Int(0))};
    for (int i = 0; i < d; ++i) {
        std::vector<Int> v(static_cast<size_t>(d), Int(0));
        v[static_cast<size_t>(i)] = 1;
        pts.push_back(std::move(v));
    }
    return pts;
}

Points cross_vertices(int d) {
    Points pts;
    for (int i = 0; i < d; ++i)
        for (int s : {1, -1}) {
            std::vector<Int> v(static_cast<size_t>(d), Int(0));
            v[static_cast<size_t>(i)] = s;
            pts.push_back(std::move(v));
        }
    return pts;
}

Points moment_curve_vertices(int n, int d) {
    Points pts;
    for (int t = 1; t <= n; ++t) {
        std::vector<Int> v(static_cast<size_t>(d));
        Int p = 1;
        for (int i = 0; i < d; ++i) {
            p *= t;
            v[static_cast<size_t>(i)] = p;
        }
        pts.push_back(std::move(v));
    }
    return pts;
}

Points order_polytope_vertices(int d) {
    // indicator vectors of up-sets of the star poset x_0 < x_1, ..., x_{d-1}:
    // either x_0 = 0 and the rest arbitrary, or the all-ones vector
    Points pts;
    for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
        std::vector<Int> v(static_cast<size_t>(d), Int(0));
        for (int i = 0; i < d - 1; ++i) v[static_cast<size_t>(i) + 1] = (mask >> i) & 1u;
        pts.push_back(std::move(v));
    }
    pts.push_back(std::vector<Int>(static_cast<size_t>(d), Int(1)));
    return pts;
}

Points from_ints(const std::vector<std::vector<long long>>& raw) {
    Points pts;
    for (const auto& r : raw) {
        std::vector<Int> v;
        v.reserve(r.size());
        for (long long c : r) v.emplace_back(c);
        pts.push_back(std::move(v));
    }
    return pts;
}

/// Uniform draw from {0..range} by rejection (no std::uniform_int_distribution:
/// its output is implementation-defined, this stream is reproducible).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

LatticePolytope random_lattice_polytope(int d, int vertex_count, int coordinate_range,
                                        std::uint64_t seed) {
    if (d < 1 || vertex_count < d + 1 || coordinate_range < 1)
        throw std::invalid_argument("random_lattice_polytope: bad parameters");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Points pts;
        for (int i = 0; i < vertex_count; ++i) {
            std::vector<Int> v(static_cast<size_t>(d));
            for (int c = 0; c < d; ++c)
                v[static_cast<size_t>(c)] = Int(uniform_below(rng, static_cast<std::uint64_t>(coordinate_range) + 1));
            pts.push_back(std::move(v));
        }
        try {
            return LatticePolytope::build(std::move(pts));
        } catch (const DegeneratePolytope&) {
            continue;
        }
    }
    throw DegeneratePolytope("random_lattice_polytope: degenerate after 64 attempts");
}

LatticePolytope random_zero_one_polytope(int d, int vertex_count, std::uint64_t seed) {
    if (d < 1 || vertex_count < d + 1)
        throw std::invalid_argument("random_zero_one_polytope: bad parameters");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::set<std::vector<Int>> pts;
        // draw distinct 0/1 points; cap the tries so small cubes cannot loop
        for (int tries = 0; static_cast<int>(pts.size()) < vertex_count && tries < 4096; ++tries) {
            std::vector<Int> v(static_cast<size_t>(d));
            for (int c = 0; c < d; ++c) v[static_cast<size_t>(c)] = Int(uniform_below(rng, 2));
            pts.insert(std::move(v));
        }
        try {
            return LatticePolytope::build(Points(pts.begin(), pts.end()));
        } catch (const DegeneratePolytope&) {
            continue;
        }
    }
    throw DegeneratePolytope("random_zero_one_polytope: degenerate after 64 attempts");
}

LatticePolytope sample_random_polytope(int d, std::uint64_t master_seed, std::uint64_t index) {
    std::uint64_t seed = splitmix64(master_seed + index);
    std::mt19937_64 pick(seed);
    int vmin = std::max(d + 1, 3);
    int vmax = std::max(vmin, 8);
    int vcount = vmin + static_cast<int>(uniform_below(pick, static_cast<std::uint64_t>(vmax - vmin + 1)));
    return random_lattice_polytope(d, vcount, 9, splitmix64(seed));
}

LatticePolytope generate(const ZooSpec& spec) {
    using F = ZooSpec::Family;
    switch (spec.family) {
        case F::standard_simplex:
            if (spec.d < 1) throw std::invalid_argument("standard_simplex: d >= 1");
            return LatticePolytope::build(simplex_vertices(spec.d));
        case F::cube:
            if (spec.d < 1) throw std::invalid_argument("cube: d >= 1");
            return LatticePolytope::build(cube_vertices(spec.d));
        case F::cross_polytope:
            if (spec.d < 1) throw std::invalid_argument("cross_polytope: d >= 1");
            return LatticePolytope::build(cross_vertices(spec.d));
        case F::zero_one_octahedron:
            return LatticePolytope::build(from_ints(
                {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
        case F::nameless:
            // listed with a constant leading coordinate; dropping it gives
            // the unimodularly equivalent full-dimensional copy
            return LatticePolytope::build(from_ints(
                {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
        case F::prism:
            return LatticePolytope::build(from_ints(
                {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}}));
        case F::square_pyramid:
            return LatticePolytope::build(from_ints(
                {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}}));
        case F::bipyramid:
            return LatticePolytope::build(from_ints(
                {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}));
        case F::cube_minus_corner:
            return LatticePolytope::build(from_ints(
                {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
        case F::fat_tetrahedron:
            return LatticePolytope::build(from_ints({{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
        case F::order_polytope:
            if (spec.d < 2) throw std::invalid_argument("order_polytope: d >= 2");
            return LatticePolytope::build(order_polytope_vertices(spec.d));
        case F::cyclic:
            if (!(spec.n > spec.d && spec.d >= 1))
                throw std::invalid_argument("cyclic: requires n > d >= 1");
            return LatticePolytope::build(moment_curve_vertices(spec.n, spec.d));
        case F::triangle_family:
            if (spec.x < 1) throw std::invalid_argument("triangle_family: x >= 1");
            return LatticePolytope::build(from_ints({{0, 0}, {1, 0}, {0, spec.x}}));
        case F::rectangle_family:
            if (spec.x < 1) throw std::invalid_argument("rectangle_family: x >= 1");
            return LatticePolytope::build(from_ints({{0, 0}, {2, 0}, {2, spec.x}, {0, spec.x}}));
        case F::exceptional_triangle:
            return LatticePolytope::build(from_ints({{0, 0}, {3, 0}, {0, 3}}));
        case F::random_lattice:
            return random_lattice_polytope(spec.d, spec.vertex_count, spec.coordinate_range,
                                           spec.seed);
        case F::random_zero_one:
            return random_zero_one_polytope(spec.d, spec.vertex_count, spec.seed);
    }
    throw std::invalid_argument("generate: unknown family");
}

namespace {

struct FamilyInfo {
    const char* name;
    ZooSpec::Family family;
    int params;
};

constexpr FamilyInfo kFamilies[] = {
    {"standard_simplex", ZooSpec::Family::standard_simplex, 1},
    {"cube", ZooSpec::Family::cube, 1},
    {"cross_polytope", ZooSpec::Family::cross_polytope, 1},
    {"zero_one_octahedron", ZooSpec::Family::zero_one_octahedron, 0},
    {"nameless", ZooSpec::Family::nameless, 0},
    {"prism", ZooSpec::Family::prism, 0},
    {"square_pyramid", ZooSpec::Family::square_pyramid, 0},
    {"bipyramid", ZooSpec::Family::bipyramid, 0},
    {"cube_minus_corner", ZooSpec::Family::cube_minus_corner, 0},
    {"fat_tetrahedron", ZooSpec::Family::fat_tetrahedron, 0},
    {"order_polytope", ZooSpec::Family::order_polytope, 1},
    {"cyclic", ZooSpec::Family::cyclic, 2},
    {"triangle", ZooSpec::Family::triangle_family, 1},
    {"rectangle", ZooSpec::Family::rectangle_family, 1},
    {"exceptional_triangle", ZooSpec::Family::exceptional_triangle, 0},
    {"random_lattice", ZooSpec::Family::random_lattice, 4},
    {"random_zero_one", ZooSpec::Family::random_zero_one, 3},
};

}  // namespace

ZooSpec parse_zoo_spec(const std::string& text) {
    std::string name = text;
    std::vector<long long> params;
    if (auto colon = text.find(':'); colon != std::string::npos) {
        name = text.substr(0, colon);
        std::stringstream ss(text.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ','))
            params.push_back(std::stoll(tok));
    }
    for (const auto& fam : kFamilies) {
        if (name != fam.name) continue;
        if (static_cast<int>(params.size()) != fam.params)
            throw std::invalid_argument("zoo spec '" + name + "' takes " +
                                        std::to_string(fam.params) + " parameter(s)");
        ZooSpec spec;
        spec.family = fam.family;
        switch (fam.family) {
            case ZooSpec::Family::cyclic:
                spec.n = static_cast<int>(params[0]);
                spec.d = static_cast<int>(params[1]);
                break;
            case ZooSpec::Family::triangle_family:
            case ZooSpec::Family::rectangle_family:
                spec.x = params[0];
                break;
            case ZooSpec::Family::random_lattice:
                spec.d = static_cast<int>(params[0]);
                spec.vertex_count = static_cast<int>(params[1]);
                spec.coordinate_range = static_cast<int>(params[2]);
                spec.seed = static_cast<std::uint64_t>(params[3]);
                break;
            case ZooSpec::Family::random_zero_one:
                spec.d = static_cast<int>(params[0]);
                spec.vertex_count = static_cast<int>(params[1]);
                spec.seed = static_cast<std::uint64_t>(params[2]);
                break;
            default:
                if (fam.params == 1) spec.d = static_cast<int>(params[0]);
                break;
        }
        return spec;
    }
    throw std::invalid_argument("unknown zoo family '" + name + "'");
}

std::string zoo_spec_name(const ZooSpec& spec) {
    for (const auto& fam : kFamilies) {
        if (fam.family != spec.family) continue;
        std::ostringstream os;
        os << fam.name;
        switch (spec.family) {
            case ZooSpec::Family::cyclic:
                os << ":" << spec.n << "," << spec.d;
                break;
            case ZooSpec::Family::triangle_family:
            case ZooSpec::Family::rectangle_family:
                os << ":" << spec.x;
                break;
            case ZooSpec::Family::random_lattice:
                os << ":" << spec.d << "," << spec.vertex_count << "," << spec.coordinate_range
                   << "," << spec.seed;
                break;
            case ZooSpec::Family::random_zero_one:
                os << ":" << spec.d << "," << spec.vertex_count << "," << spec.seed;
                break;
            default:
                if (fam.params == 1) os << ":" << spec.d;
                break;
        }
        return os.str();
    }
    return "?";
}

Polynomial order_polytope_ehrhart(int d) {
    if (d < 2) throw std::invalid_argument("order_polytope_ehrhart: d >= 2 required");
    Polynomial Bd = bernoulli_polynomial(static_cast<unsigned>(d));
    Polynomial shifted = Bd.shifted(Rat(2));
    Rat b0 = Bd(Rat(0));
    return (shifted - Polynomial::constant(b0)) / Rat(d);
}

RootInterval largest_real_root_order_polytope(int d) {
    Polynomial p = order_polytope_ehrhart(d);
    // modest window first, doubled (up to the Cauchy disc, which certainly
    // contains every root) until the certified total real-root count is met
    const int total = total_real_roots(p);
    Int m(d + 2);
    const Int cap = rat_ceil(cauchy_bound(p));
    std::vector<RootInterval> roots;
    while (true) {
        roots = sturm_real_roots(p, Rat(-m), Rat(m), Rat(1, Int("1000000000")));
        if (static_cast<int>(roots.size()) == total || m >= cap) break;
        m = std::min(Int(m * 2), cap);
    }
    if (roots.empty()) throw std::logic_error("order polytope polynomial with no real root");
    return roots.back();
}

CyclicConjectureResult check_cyclic_conjecture(int n, int d) {
    if (!(n > d && d >= 2)) throw std::invalid_argument("check_cyclic_conjecture: n > d >= 2");
    ZooSpec full{.family = ZooSpec::Family::cyclic, .d = d, .n = n};
    ZooSpec lower{.family = ZooSpec::Family::cyclic, .d = d - 1, .n = n};
    CyclicConjectureResult res;
    res.full = ehrhart_polynomial(generate(full));
    res.lower = ehrhart_polynomial(generate(lower));
    res.holds = true;
    for (int i = 0; i <= d - 1; ++i) {
        const Rat& got = res.full.c[static_cast<size_t>(i)];
        const Rat& want = res.lower.c[static_cast<size_t>(i)];
        if (got != want) {
            res.holds = false;
            std::ostringstream os;
            os << "coefficient of x^" << i << ": C(" << n << "," << d << ") gives "
               << rat_to_string(got) << " but C(" << n << "," << d - 1 << ") gives "
               << rat_to_string(want);
            res.witness = os.str();
            break;
        }
    }
    return res;
}

bool check_fiber_integrality(int n, int d, const Int& m) {
    if (!(n > d && d >= 2)) throw std::invalid_argument("check_fiber_integrality: n > d >= 2");
    if (m < 1) throw std::invalid_argument("check_fiber_integrality: m >= 1");
    LatticePolytope full = generate(ZooSpec{.family = ZooSpec::Family::cyclic, .d = d, .n = n});
    LatticePolytope lower = generate(ZooSpec{.family = ZooSpec::Family::cyclic, .d = d - 1, .n = n});

    const auto& facets = full.facets();
    for (const auto& y : lower.enumerate_lattice_points(m)) {
        // fiber over y: bounds on the last coordinate from the facet system
        bool have_lo = false, have_hi = false;
        Rat lo, hi;
        for (const auto& f : facets) {
            Rat partial(0);
            for (int c = 0; c < d - 1; ++c) partial += Rat(f.normal[static_cast<size_t>(c)]) * Rat(y[static_cast<size_t>(c)]);
            const Int& a_last = f.normal[static_cast<size_t>(d) - 1];
            if (a_last == 0) continue;
            Rat v = (Rat(f.offset * m) - partial) / Rat(a_last);
            if (a_last > 0) {
                if (!have_hi || v < hi) hi = v;
                have_hi = true;
            } else {
                if (!have_lo || v > lo) lo = v;
                have_lo = true;
            }
        }
        if (!have_lo || !have_hi) return false;
        if (lo > hi) return false;                      // y must lie in the projection
        if (!is_integer(lo) || !is_integer(hi)) return false;
    }
    return true;
}

}  // namespace ehrhart
