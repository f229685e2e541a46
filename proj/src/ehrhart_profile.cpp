#include "ehrhart/ehrhart_profile.hpp"
#include "ehrhart/sequences.hpp"

#include <stdexcept>

namespace ehrhart {

EhrhartProfile EhrhartProfile::from_polynomial(const Polynomial& p) {
    if (p.is_zero() || p.degree() < 1) throw std::invalid_argument("profile: degree >= 1 required");
    if (p.coeff(0) != 1) throw std::invalid_argument("profile: constant term must be 1");
    if (!(p.leading() > 0)) throw std::invalid_argument("profile: leading coefficient must be positive");
    EhrhartProfile out;
    out.d = p.degree();
    out.c = p.coeffs();
    out.a = BinomialBasisPolynomial::from_polynomial(p).a;
    out.delta = forward_differences(p);
    return out;
}

EhrhartProfile EhrhartProfile::from_coefficients(std::vector<Rat> c) {
    return from_polynomial(Polynomial(std::move(c)));
}

EhrhartProfile ehrhart_polynomial(const LatticePolytope& P) {
    const int d = P.dimension();
    // Newton forward-difference form through the exact counts at 0..d:
    // i_P(n) = sum_k delta_k * C(n, k).
    std::vector<Rat> values(static_cast<size_t>(d) + 1);
    for (int n = 0; n <= d; ++n) values[static_cast<size_t>(n)] = Rat(P.count_lattice_points(Int(n)));

    std::vector<Rat> deltas;
    deltas.reserve(values.size());
    std::vector<Rat> row = values;
    deltas.push_back(row[0]);
    for (int k = 1; k <= d; ++k) {
        for (int i = 0; i + k <= d; ++i) row[static_cast<size_t>(i)] = row[static_cast<size_t>(i) + 1] - row[static_cast<size_t>(i)];
        deltas.push_back(row[0]);
    }

    Polynomial p;
    for (int k = 0; k <= d; ++k) {
        if (deltas[static_cast<size_t>(k)] == 0) continue;
        p = p + binomial_coefficient_polynomial(0, k) * deltas[static_cast<size_t>(k)];
    }

    EhrhartProfile out;
    out.d = d;
    out.c = p.coeffs();
    out.c.resize(static_cast<size_t>(d) + 1, Rat(0));  // guard: counting errors only
    if (out.c[0] != 1 || !(out.c[static_cast<size_t>(d)] > 0))
        throw std::logic_error("ehrhart_polynomial: interpolation produced a non-Ehrhart shape");
    out.a = BinomialBasisPolynomial::from_polynomial(p).a;
    out.delta = std::move(deltas);
    return out;
}

Rat interior_count_via_reciprocity(const EhrhartProfile& profile, const Int& n) {
    if (n < 1) throw std::invalid_argument("reciprocity: n >= 1 required");
    Rat v = evaluate(profile, Rat(-n));
    return profile.d % 2 == 0 ? v : Rat(-v);
}

Polynomial generating_numerator(const EhrhartProfile& profile) { return Polynomial(profile.a); }

Rat evaluate(const EhrhartProfile& profile, const Rat& n) { return profile.polynomial()(n); }

}  // namespace ehrhart
