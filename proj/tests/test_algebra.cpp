#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehrhart/polynomial.hpp"
#include "ehrhart/sequences.hpp"
#include "ehrhart/sturm.hpp"

#include <random>

using namespace ehrhart;

namespace {

// Pascal-triangle oracle, independent of the product-formula implementation.
Int pascal_binomial(int n, int k) {
    if (k == 0) return 1;
    if (n >= 0 && k > n) return 0;
    if (n < 0) {
        // C(n,k) = (-1)^k C(k-n-1, k)
        Int v = pascal_binomial(k - n - 1, k);
        return k % 2 == 0 ? v : Int(-v);
    }
    std::vector<Int> row{Int(1)};
    for (int i = 1; i <= n; ++i) {
        std::vector<Int> next(static_cast<size_t>(i) + 1, Int(1));
        for (int j = 1; j < i; ++j) next[static_cast<size_t>(j)] = row[static_cast<size_t>(j) - 1] + row[static_cast<size_t>(j)];
        row = std::move(next);
    }
    return row[static_cast<size_t>(k)];
}

Polynomial random_polynomial(std::mt19937_64& rng, int degree) {
    std::vector<Rat> c(static_cast<size_t>(degree) + 1);
    for (auto& q : c) {
        long long num = static_cast<long long>(rng() % 41) - 20;
        long long den = 1 + static_cast<long long>(rng() % 7);
        q = Rat(num, den);
    }
    if (c.back() == 0) c.back() = Rat(1);
    return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("generalized binomial") {
    CHECK(binomial(Int(5), 2) == 10);
    CHECK(binomial(Int(-3), 2) == 6);
    CHECK(binomial(Int(7), 0) == 1);
    CHECK(binomial(Int(3), 5) == 0);
    for (int n = -8; n <= 8; ++n)
        for (int k = 0; k <= 8; ++k) CHECK(binomial(Int(n), static_cast<unsigned>(k)) == pascal_binomial(n, k));
}

TEST_CASE("stirling numbers of the first kind") {
    CHECK(stirling_first(3, 2) == -3);
    CHECK(stirling_first(3, 1) == 2);
    CHECK(stirling_first(4, 2) == 11);
    CHECK_THROWS_AS(stirling_first(3, 4), std::out_of_range);

    // row encodes x(x-1)...(x-d+1); at x = d the falling factorial is d!
    for (unsigned d = 1; d <= 12; ++d) {
        Int sum = 0;
        Int power = 1;
        for (unsigned r = 0; r <= d; ++r) {
            sum += stirling_first(d, r) * power;
            power *= d;
        }
        CHECK(sum == factorial(d));
    }
}

TEST_CASE("bernoulli polynomials") {
    CHECK(bernoulli_polynomial(1) == Polynomial({Rat(-1, 2), Rat(1)}));
    CHECK(bernoulli_polynomial(2) == Polynomial({Rat(1, 6), Rat(-1), Rat(1)}));

    // (B_3(5) - B_3(0))/3 = 1^2 + 2^2 + 3^2 + 4^2 = 30
    Polynomial b3 = bernoulli_polynomial(3);
    CHECK((b3(Rat(5)) - b3(Rat(0))) / Rat(3) == Rat(30));

    // classical identity against direct summation, d <= 20, n <= 50
    for (unsigned d = 1; d <= 20; ++d) {
        Polynomial bd = bernoulli_polynomial(d);
        Rat b0 = bd(Rat(0));
        for (int n = 1; n <= 50; n += (n < 5 ? 1 : 9)) {
            Rat direct(0);
            for (int k = 0; k < n; ++k) {
                Int p = 1;
                for (unsigned e = 0; e + 1 < d; ++e) p *= k;
                direct += Rat(p);
            }
            CHECK((bd(Rat(n)) - b0) / Rat(static_cast<long>(d)) == direct);
        }
    }
}

TEST_CASE("binomial basis conversions") {
    // standard simplex: p = C(n+d, d) has a = (1, 0, ..., 0)
    for (int d = 1; d <= 6; ++d) {
        auto b = BinomialBasisPolynomial::from_polynomial(binomial_coefficient_polynomial(d, d));
        CHECK(b.a[0] == 1);
        for (int j = 1; j <= d; ++j) CHECK(b.a[static_cast<size_t>(j)] == 0);
    }

    // cube: (n+1)^3 has a = (1, 4, 1, 0)
    Polynomial cube = Polynomial::from_ints({1, 3, 3, 1});
    auto bc = BinomialBasisPolynomial::from_polynomial(cube);
    CHECK(bc.a == std::vector<Rat>{Rat(1), Rat(4), Rat(1), Rat(0)});

    // 0/1 octahedron: values (1, 6, 19, 44) give a = (1, 2, 1, 0)
    Polynomial octa({Rat(1), Rat(7, 3), Rat(2), Rat(2, 3)});
    auto bo = BinomialBasisPolynomial::from_polynomial(octa);
    CHECK(bo.a == std::vector<Rat>{Rat(1), Rat(2), Rat(1), Rat(0)});

    // exact round trip on random rational polynomials
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial p = random_polynomial(rng, 1 + static_cast<int>(rng() % 10));
        auto b = BinomialBasisPolynomial::from_polynomial(p);
        CHECK(b.to_polynomial() == p);
    }
}

TEST_CASE("forward differences") {
    Polynomial cube = Polynomial::from_ints({1, 3, 3, 1});
    CHECK(forward_differences(cube) == std::vector<Rat>{Rat(1), Rat(7), Rat(12), Rat(6)});

    for (int d = 1; d <= 6; ++d) {
        auto deltas = forward_differences(binomial_coefficient_polynomial(d, d));
        for (int k = 0; k <= d; ++k) CHECK(deltas[static_cast<size_t>(k)] == Rat(binomial(Int(d), static_cast<unsigned>(k))));
    }

    CHECK(forward_differences(Polynomial::constant(Rat(1))) == std::vector<Rat>{Rat(1)});

    // delta_d = d! * leading coefficient, and the a-form of the differences:
    // D^k p(0) = sum_j a_j C(d-j, d-k)
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial p = random_polynomial(rng, 1 + static_cast<int>(rng() % 8));
        int d = p.degree();
        auto deltas = forward_differences(p);
        CHECK(deltas[static_cast<size_t>(d)] == Rat(factorial(static_cast<unsigned>(d))) * p.leading());
        auto b = BinomialBasisPolynomial::from_polynomial(p);
        for (int k = 0; k <= d; ++k) {
            Rat expect(0);
            for (int j = 0; j <= d; ++j)
                expect += b.a[static_cast<size_t>(j)] * Rat(binomial(Int(d - j), static_cast<unsigned>(d - k)));
            CHECK(deltas[static_cast<size_t>(k)] == expect);
        }
        // sum of a equals d! * leading coefficient
        Rat asum(0);
        for (const auto& q : b.a) asum += q;
        CHECK(asum == Rat(factorial(static_cast<unsigned>(d))) * p.leading());
    }
}

TEST_CASE("polynomial division, gcd, squarefree") {
    Polynomial p = Polynomial::from_ints({-2, 0, 1});        // n^2 - 2
    Polynomial q = Polynomial::from_ints({1, 1});            // n + 1
    auto [quo, rem] = p.divmod(q);
    CHECK(quo * q + rem == p);
    CHECK(rem.degree() < q.degree());

    Polynomial a = Polynomial::from_ints({1, 2, 1});         // (n+1)^2
    Polynomial b = Polynomial::from_ints({2, 3, 1});         // (n+1)(n+2)
    CHECK(Polynomial::gcd(a, b) == Polynomial::from_ints({1, 1}));

    Polynomial cube = Polynomial::from_ints({1, 3, 3, 1});   // (n+1)^3
    CHECK(cube.squarefree_part() == Polynomial::from_ints({1, 1}));
    auto decomp = cube.squarefree_decomposition();
    REQUIRE(decomp.size() == 1);
    CHECK(decomp[0].second == 3);

    Polynomial mixed = a * Polynomial::from_ints({-3, 1});   // (n+1)^2 (n-3)
    auto dm = mixed.squarefree_decomposition();
    REQUIRE(dm.size() == 2);
    CHECK(dm[0].first == Polynomial::from_ints({-3, 1}));
    CHECK(dm[0].second == 1);
    CHECK(dm[1].first == Polynomial::from_ints({1, 1}));
    CHECK(dm[1].second == 2);
}

TEST_CASE("taylor shift") {
    Polynomial p = Polynomial::from_ints({1, 3, 3, 1});  // (n+1)^3
    CHECK(p.shifted(Rat(-1)) == Polynomial::from_ints({0, 0, 0, 1}));
    Polynomial b3 = bernoulli_polynomial(3);
    CHECK(b3.shifted(Rat(2))(Rat(-1)) == b3(Rat(1)));
}

TEST_CASE("sturm isolation") {
    // one irrational root in (0, 2)
    Polynomial p = Polynomial::from_ints({-2, 0, 1});
    auto roots = sturm_real_roots(p, Rat(0), Rat(2), Rat(1, 1000));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].lo < roots[0].hi);
    CHECK(roots[0].hi - roots[0].lo < Rat(1, 1000));
    CHECK(roots[0].approx() == doctest::Approx(1.41421356).epsilon(1e-3));

    // factored input: (n+1)(n+2) on (-3, 0)
    Polynomial q = Polynomial::from_ints({2, 3, 1});
    auto r2 = sturm_real_roots(q, Rat(-3), Rat(0), Rat(1, 1000));
    REQUIRE(r2.size() == 2);
    CHECK(r2[0].is_point());
    CHECK(r2[0].lo == Rat(-2));
    CHECK(r2[1].is_point());
    CHECK(r2[1].lo == Rat(-1));

    // standard simplex d=3: integer roots at -3, -2, -1
    Polynomial simplex = binomial_coefficient_polynomial(3, 3);
    auto r3 = sturm_real_roots(simplex, Rat(-4), Rat(0), Rat(1, 1000));
    REQUIRE(r3.size() == 3);
    CHECK(r3[0].lo == Rat(-3));
    CHECK(r3[1].lo == Rat(-2));
    CHECK(r3[2].lo == Rat(-1));

    // isolation count equals the Sturm variation difference
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial f = random_polynomial(rng, 1 + static_cast<int>(rng() % 7));
        Polynomial sf = f.squarefree_part();
        SturmChain chain(sf);
        Rat lo(-30), hi(30);
        if (sf(lo) == 0 || sf(hi) == 0) continue;
        auto ivs = sturm_real_roots(f, lo, hi, Rat(1, 1 << 20));
        CHECK(static_cast<int>(ivs.size()) == chain.count_roots(lo, hi));
        CHECK(static_cast<int>(ivs.size()) == total_real_roots(f));
        // intervals: disjoint, sorted, exactly one root each (by sign change
        // or exact hit), and integer-free when not a point
        for (size_t i = 0; i < ivs.size(); ++i) {
            if (i > 0) CHECK(ivs[i - 1].hi <= ivs[i].lo);
            if (!ivs[i].is_point()) {
                CHECK(sign(sf(ivs[i].lo)) * sign(sf(ivs[i].hi)) == -1);
                CHECK(rat_floor(ivs[i].lo) + 1 > rat_ceil(ivs[i].hi) - 1);
            }
        }
    }

    // half-open window semantics: root at the left endpoint excluded,
    // right endpoint included
    Polynomial lin = Polynomial::from_ints({2, 3, 1});
    CHECK(sturm_real_roots(lin, Rat(-2), Rat(0), Rat(1, 100)).size() == 1);
    CHECK(sturm_real_roots(lin, Rat(-3), Rat(-2), Rat(1, 100)).size() == 1);

    CHECK_THROWS_AS(sturm_real_roots(Polynomial(), Rat(0), Rat(1), Rat(1, 10)),
                    std::invalid_argument);
}
