#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehrhart/audit.hpp"
#include "ehrhart/zoo.hpp"

using namespace ehrhart;

namespace {

EhrhartProfile profile_of(const std::string& spec) {
    return ehrhart_polynomial(generate(parse_zoo_spec(spec)));
}

const AuditEntry& entry(const AuditReport& rep, const std::string& id) {
    const AuditEntry* e = rep.find(id);
    REQUIRE(e != nullptr);
    return *e;
}

}  // namespace

TEST_CASE("betke-mcmullen right-hand sides") {
    CHECK(betke_mcmullen_rhs(2, 1, Rat(9, 2)) == Rat(11, 2));
    CHECK(betke_mcmullen_rhs(3, 2, Rat(1)) == Rat(7, 2));
    // equality for the standard simplex at d=3, r=1: c_1 = 11/6
    CHECK(betke_mcmullen_rhs(3, 1, Rat(1, 6)) == Rat(11, 6));
    CHECK_THROWS_AS(betke_mcmullen_rhs(3, 3, Rat(1)), std::out_of_range);
    CHECK_THROWS_AS(betke_mcmullen_rhs(3, 0, Rat(1)), std::out_of_range);
}

TEST_CASE("cube audit: everything holds, known slack") {
    auto rep = audit(profile_of("cube:3"));
    CHECK(rep.all_hold(false));
    CHECK(entry(rep, "DIFF_RATIO(0,1)").slack == Rat(4));  // 1*7 - 3*1
}

TEST_CASE("standard simplex: ITERATED is tight") {
    for (int d = 2; d <= 5; ++d) {
        auto rep = audit(profile_of("standard_simplex:" + std::to_string(d)));
        CHECK(rep.all_hold(false));
        for (int k = 0; k <= d; ++k) {
            const auto& e = entry(rep, "ITERATED(" + std::to_string(k) + ")");
            CHECK(e.holds);
            CHECK(e.slack == 0);
        }
    }
}

TEST_CASE("exceptional triangle: Scott fails with the fingerprint note") {
    auto prof = EhrhartProfile::from_coefficients({Rat(1), Rat(9, 2), Rat(9, 2)});
    auto rep = audit_dim2(prof);
    const auto& scott = entry(rep, "SCOTT");
    CHECK_FALSE(scott.holds);
    CHECK(scott.slack == Rat(17, 4) - Rat(9, 2));
    CHECK(scott.note.find("exceptional") != std::string::npos);
    CHECK(rep.all_hold(true));
    CHECK_FALSE(rep.all_hold(false));
    // the exceptional triangle itself carries that profile
    CHECK(profile_of("exceptional_triangle").c == prof.c);
}

TEST_CASE("interior-free 2-polytopes: Pick boundary line") {
    auto rep = audit(profile_of("triangle:5"));
    const auto& pick = entry(rep, "PICK_BOUNDARY");
    CHECK(pick.holds);  // c1 = c2 + 1, I = 0
    const auto& scott = entry(rep, "SCOTT");
    CHECK(scott.holds);
    CHECK(scott.note.find("not applicable") != std::string::npos);
}

TEST_CASE("rectangle family sits on the Scott line") {
    auto prof = profile_of("rectangle:3");
    CHECK(prof.c == std::vector<Rat>{Rat(1), Rat(5), Rat(6)});
    auto rep = audit_dim2(prof);
    const auto& scott = entry(rep, "SCOTT");
    CHECK(scott.holds);
    CHECK(scott.slack == 0);
}

TEST_CASE("standard triangle meets both boundary lines") {
    auto prof = profile_of("standard_simplex:2");
    CHECK(prof.c == std::vector<Rat>{Rat(1), Rat(3, 2), Rat(1, 2)});
    auto rep = audit(prof);
    CHECK(entry(rep, "SURFACE").slack == 0);        // c1 = 3/2 lower bound tight
    CHECK(entry(rep, "PICK_BOUNDARY").holds);       // on the no-interior line
    CHECK(rep.all_hold(false));
}

TEST_CASE("audit_dim2 rejects other dimensions") {
    CHECK_THROWS_AS(audit_dim2(profile_of("cube:3")), NotDimension2);
}

TEST_CASE("specializations reproduce the general DIFF_RATIO rows exactly") {
    for (const auto& s : {"cube:3", "zero_one_octahedron", "cyclic:6,3", "square_pyramid",
                          "standard_simplex:4", "cyclic:5,4", "rectangle:2"}) {
        auto prof = profile_of(s);
        auto rep = audit(prof);
        int d = prof.d;
        CAPTURE(s);
        const auto& f1 = entry(rep, "FACET1");
        const auto& g1 = entry(rep, "DIFF_RATIO(" + std::to_string(d - 1) + "," + std::to_string(d) + ")");
        CHECK(f1.holds == g1.holds);
        CHECK(f1.slack == g1.slack);
        const auto& f2 = entry(rep, "FACET2");
        const auto& g2 = entry(rep, "DIFF_RATIO(0,1)");
        CHECK(f2.holds == g2.holds);
        CHECK(f2.slack == g2.slack);
        // FACET2 equals the direct form sum_i c_i >= d+1
        Rat csum(0);
        for (const auto& c : prof.c) csum += c;
        CHECK(f2.slack == csum - (d + 1));
        for (int l = 1; l <= d; ++l) {
            const auto& it = entry(rep, "ITERATED(" + std::to_string(l) + ")");
            const auto& gr = entry(rep, "DIFF_RATIO(0," + std::to_string(l) + ")");
            CHECK(it.holds == gr.holds);
            CHECK(it.slack == gr.slack);
        }
    }
}

TEST_CASE("redundancy implications across the report") {
    for (const auto& s : {"cube:3", "cyclic:6,3", "order_polytope:4", "bipyramid"}) {
        auto rep = audit(profile_of(s));
        bool a_all = true;
        for (const auto& e : rep.entries)
            if (e.id.rfind("A_NONNEG", 0) == 0 && !e.holds) a_all = false;
        if (a_all) CHECK(entry(rep, "ALTERNATING").holds);
        auto prof = profile_of(s);
        if (entry(rep, "ITERATED(" + std::to_string(prof.d) + ")").holds)
            CHECK(entry(rep, "VOLUME").holds);
    }
}

TEST_CASE("hibi a1 rows appear only when a_d is nonzero") {
    auto cube = profile_of("cube:3");  // a = (1,4,1,0): no HIBI_A1 rows
    auto rep = audit(cube);
    CHECK(rep.find("HIBI_A1(2)") == nullptr);

    auto cross = profile_of("cross_polytope:3");  // a = (1,3,3,1)
    auto rep2 = audit(cross);
    CHECK(rep2.find("HIBI_A1(2)") != nullptr);
    CHECK(entry(rep2, "HIBI_A1(2)").holds);
}

TEST_CASE("seeded random sweep, desk slice") {
    for (std::uint64_t k = 0; k < 60; ++k) {
        auto P = sample_random_polytope(3, 20240817, k);
        auto rep = audit(ehrhart_polynomial(P));
        CAPTURE(k);
        CHECK(rep.all_hold(true));
    }
    for (std::uint64_t k = 0; k < 40; ++k) {
        auto P = sample_random_polytope(2, 99, k);
        auto rep = audit(ehrhart_polynomial(P));
        CAPTURE(k);
        CHECK(rep.all_hold(true));
    }
}

TEST_CASE("every slack is an exact rational, catalog complete per dimension") {
    auto prof = profile_of("zero_one_octahedron");
    auto rep = audit(prof);
    int d = prof.d;
    int diff_ratio_rows = 0;
    for (const auto& e : rep.entries)
        if (e.id.rfind("DIFF_RATIO", 0) == 0) ++diff_ratio_rows;
    CHECK(diff_ratio_rows == (d + 1) * d / 2);
    for (int i = 0; i <= d; ++i) CHECK(rep.find("A_NONNEG(" + std::to_string(i) + ")"));
    for (int r = 1; r <= d - 1; ++r) CHECK(rep.find("BM(" + std::to_string(r) + ")"));
    CHECK(rep.find("SCOTT") == nullptr);  // d = 3: no dimension-2 rows
}
