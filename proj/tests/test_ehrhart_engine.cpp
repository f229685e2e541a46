#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehrhart/ehrhart_profile.hpp"
#include "ehrhart/sequences.hpp"
#include "ehrhart/zoo.hpp"

using namespace ehrhart;

namespace {

std::vector<Rat> rats(const std::vector<std::pair<long long, long long>>& v) {
    std::vector<Rat> out;
    for (auto [p, q] : v) out.emplace_back(p, q);
    return out;
}

EhrhartProfile profile_of(const std::string& spec) {
    return ehrhart_polynomial(generate(parse_zoo_spec(spec)));
}

}  // namespace

TEST_CASE("golden profiles: cube, simplex, cyclic") {
    auto cube = profile_of("cube:3");
    CHECK(cube.c == rats({{1, 1}, {3, 1}, {3, 1}, {1, 1}}));
    CHECK(cube.a == rats({{1, 1}, {4, 1}, {1, 1}, {0, 1}}));
    CHECK(cube.delta == rats({{1, 1}, {7, 1}, {12, 1}, {6, 1}}));

    auto simplex = profile_of("standard_simplex:3");
    CHECK(simplex.c == rats({{1, 1}, {11, 6}, {1, 1}, {1, 6}}));

    auto cyc63 = profile_of("cyclic:6,3");
    CHECK(cyc63.c == rats({{1, 1}, {5, 1}, {20, 1}, {70, 1}}));
}

TEST_CASE("reciprocity") {
    auto cube = profile_of("cube:3");
    CHECK(interior_count_via_reciprocity(cube, Int(1)) == 0);
    CHECK(interior_count_via_reciprocity(cube, Int(2)) == 1);

    auto tri = profile_of("standard_simplex:2");
    CHECK(interior_count_via_reciprocity(tri, Int(3)) == 1);  // center of the 3-dilated triangle

    // against direct interior counting, n = 1..3
    for (const auto& s : {"cube:3", "standard_simplex:3", "zero_one_octahedron", "square_pyramid",
                          "bipyramid", "prism", "cube_minus_corner", "cyclic:5,2", "cube:4"}) {
        auto P = generate(parse_zoo_spec(s));
        auto prof = ehrhart_polynomial(P);
        for (int n = 1; n <= 3; ++n) {
            CAPTURE(s);
            CAPTURE(n);
            CHECK(interior_count_via_reciprocity(prof, Int(n)) ==
                  Rat(P.count_lattice_points(Int(n), true)));
        }
    }
}

TEST_CASE("generating numerator") {
    CHECK(generating_numerator(profile_of("standard_simplex:4")) == Polynomial::constant(Rat(1)));
    CHECK(generating_numerator(profile_of("cube:3")) == Polynomial::from_ints({1, 4, 1}));
    CHECK(generating_numerator(profile_of("zero_one_octahedron")) == Polynomial::from_ints({1, 2, 1}));

    // f(x) expanded against the series sum_m i_P(m) x^m up to 2d+2:
    // sum_j a_j * C(m + d - j, d) = i_P(m)
    for (const auto& s : {"cube:3", "zero_one_octahedron", "cyclic:5,3"}) {
        auto P = generate(parse_zoo_spec(s));
        auto prof = ehrhart_polynomial(P);
        Polynomial f = generating_numerator(prof);
        for (int m = 0; m <= 2 * prof.d + 2; ++m) {
            Rat coeff(0);
            for (int j = 0; j <= f.degree(); ++j)
                coeff += f.coeff(j) * Rat(binomial(Int(m - j + prof.d), static_cast<unsigned>(prof.d)));
            CAPTURE(s);
            CAPTURE(m);
            CHECK(coeff == Rat(P.count_lattice_points(Int(m))));
        }
    }
}

TEST_CASE("evaluate") {
    auto cube = profile_of("cube:3");
    CHECK(evaluate(cube, Rat(-1)) == 0);
    CHECK(evaluate(cube, Rat(0)) == 1);
    auto penta = profile_of("cyclic:5,2");
    CHECK(evaluate(penta, Rat(2)) == 49);
    CHECK(evaluate(penta, Rat(1, 2)) == Rat(10, 4) + Rat(2) + 1);
}

TEST_CASE("out-of-sample agreement at n = d+1 .. d+3") {
    for (const auto& s : {"cube:3", "standard_simplex:3", "zero_one_octahedron", "prism",
                          "square_pyramid", "bipyramid", "cube_minus_corner", "fat_tetrahedron",
                          "nameless", "cyclic:5,2", "cyclic:6,3", "order_polytope:3"}) {
        auto P = generate(parse_zoo_spec(s));
        auto prof = ehrhart_polynomial(P);
        for (int n = prof.d + 1; n <= prof.d + 3; ++n) {
            CAPTURE(s);
            CAPTURE(n);
            CHECK(evaluate(prof, Rat(n)) == Rat(P.count_lattice_points(Int(n))));
        }
    }
}

TEST_CASE("h* integrality and nonnegativity, delta nonnegativity") {
    for (const auto& s : {"cube:3", "standard_simplex:4", "zero_one_octahedron", "prism",
                          "square_pyramid", "bipyramid", "cube_minus_corner", "fat_tetrahedron",
                          "cyclic:6,3", "cyclic:5,4", "order_polytope:4", "cross_polytope:3"}) {
        auto prof = profile_of(s);
        CAPTURE(s);
        for (const auto& aj : prof.a) {
            CHECK(is_integer(aj));
            CHECK(aj >= 0);
        }
        for (const auto& dk : prof.delta) CHECK(dk >= 0);
    }
}

TEST_CASE("volume and half surface area") {
    CHECK(profile_of("cube:3").volume() == 1);
    CHECK(profile_of("standard_simplex:4").volume() == Rat(1, 24));
    CHECK(profile_of("zero_one_octahedron").volume() == Rat(2, 3));
    // cube in dimension d: 2d unit facets, so c_{d-1} = d
    CHECK(profile_of("cube:3").surface_half() == 3);
    CHECK(profile_of("cube:4").surface_half() == 4);
}

TEST_CASE("profiles from raw coefficients") {
    auto p = EhrhartProfile::from_coefficients(rats({{1, 1}, {9, 2}, {9, 2}}));
    CHECK(p.d == 2);
    CHECK(p.volume() == Rat(9, 2));
    CHECK_THROWS_AS(EhrhartProfile::from_coefficients(rats({{2, 1}, {1, 1}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(EhrhartProfile::from_coefficients(rats({{1, 1}, {-1, 1}})),
                    std::invalid_argument);
}
