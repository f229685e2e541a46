#include "ehrhart/roots.hpp"
#include "ehrhart/sequences.hpp"

#include <algorithm>
#include <cmath>

namespace ehrhart {

Rat cauchy_bound(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("cauchy_bound: zero polynomial");
    Rat best(0);
    const Rat& lead = p.leading();
    for (int j = 0; j < p.degree(); ++j) {
        Rat r = p.coeff(j) / lead;
        if (r < 0) r = -r;
        if (r > best) best = r;
    }
    return best + 1;
}

double marden_max_root(const std::vector<Rat>& bounds) {
    const int d = static_cast<int>(bounds.size());
    if (d == 0) throw std::invalid_argument("marden_max_root: empty bound list");
    bool all_zero = true;
    double maxb = 0.0;
    for (const auto& b : bounds) {
        if (b < 0) throw std::invalid_argument("marden_max_root: bounds must be nonnegative");
        if (b != 0) all_zero = false;
        maxb = std::max(maxb, to_double(b));
    }
    if (all_zero) return 0.0;

    auto f = [&](double t) {
        double v = 1.0;  // monic leading term, Horner over degree d
        for (int j = d - 1; j >= 0; --j) v = v * t - to_double(bounds[static_cast<size_t>(j)]);
        return v;
    };
    auto fp = [&](double t) {
        double v = static_cast<double>(d);
        for (int j = d - 1; j >= 1; --j)
            v = v * t - static_cast<double>(j) * to_double(bounds[static_cast<size_t>(j)]);
        return v;
    };

    double lo = 0.0, hi = 1.0 + maxb;  // Cauchy bound of the auxiliary polynomial
    while (f(hi) <= 0.0) hi *= 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        double m = 0.5 * (lo + hi);
        (f(m) > 0.0 ? hi : lo) = m;
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 8; ++it) {
        double der = fp(x);
        if (der == 0.0) break;
        double step = f(x) / der;
        x -= step;
        if (std::abs(step) < 1e-12) break;
    }
    return x;
}

double dimension_bound_table(int d) {
    if (d < 2 || d > 9) throw std::out_of_range("dimension_bound_table: d in 2..9");
    std::vector<Rat> bounds(static_cast<size_t>(d));
    bounds[0] = Rat(factorial(static_cast<unsigned>(d)));  // 1/c_d <= d!
    for (int j = 1; j <= d - 1; ++j) {
        Int sj = abs(stirling_first(static_cast<unsigned>(d), static_cast<unsigned>(j)));
        Int sj1 = abs(stirling_first(static_cast<unsigned>(d), static_cast<unsigned>(j) + 1));
        bounds[static_cast<size_t>(j)] = Rat(sj + d * sj1);
    }
    return marden_max_root(bounds);
}

bool newton_bound_holds(const Polynomial& p, const Rat& B) {
    if (p.is_zero()) return false;
    Polynomial f = p;
    while (!f.is_zero()) {
        if (!(f(B) > 0)) return false;
        f = f.derivative();
    }
    return true;
}

namespace {

struct AberthOutcome {
    std::vector<std::complex<double>> roots;
    bool converged = false;
};

AberthOutcome aberth_ehrlich(const std::vector<double>& monic, double radius, int max_sweeps,
                             double step_tol) {
    const int d = static_cast<int>(monic.size());
    AberthOutcome out;
    out.roots.resize(static_cast<size_t>(d));
    const double pi = 3.14159265358979323846;
    for (int k = 0; k < d; ++k) {
        double theta = 2.0 * pi * (k + 0.5) / d + 0.45;
        out.roots[static_cast<size_t>(k)] = std::polar(radius, theta);
    }
    auto eval_both = [&](std::complex<double> z) {
        std::complex<double> p(1.0, 0.0), dp(0.0, 0.0);
        for (int j = d - 1; j >= 0; --j) {
            dp = dp * z + p;
            p = p * z + monic[static_cast<size_t>(j)];
        }
        return std::pair(p, dp);
    };
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool done = true;
        for (int k = 0; k < d; ++k) {
            std::complex<double>& z = out.roots[static_cast<size_t>(k)];
            auto [p, dp] = eval_both(z);
            if (!std::isfinite(std::abs(p)) || !std::isfinite(std::abs(dp))) {
                z *= 0.5;  // overflow on the start circle: pull inward
                done = false;
                continue;
            }
            if (p == std::complex<double>(0.0, 0.0)) continue;
            if (dp == std::complex<double>(0.0, 0.0)) {
                z += std::complex<double>(1e-8, 1e-8) * (1.0 + std::abs(z));
                done = false;
                continue;
            }
            std::complex<double> w = p / dp;
            std::complex<double> s(0.0, 0.0);
            for (int j = 0; j < d; ++j) {
                if (j == k) continue;
                std::complex<double> diff = z - out.roots[static_cast<size_t>(j)];
                if (diff == std::complex<double>(0.0, 0.0))
                    diff = std::complex<double>(1e-14, 1e-14);
                s += 1.0 / diff;
            }
            std::complex<double> denom = 1.0 - w * s;
            std::complex<double> dz = (denom == std::complex<double>(0.0, 0.0)) ? w : w / denom;
            z -= dz;
            if (std::abs(dz) >= step_tol * (1.0 + std::abs(z))) done = false;
        }
        if (done) {
            out.converged = true;
            break;
        }
    }
    return out;
}

}  // namespace

RootReport find_roots(const Polynomial& p, const Rat& eps) {
    if (p.is_zero() || p.degree() < 1)
        throw std::invalid_argument("find_roots: degree >= 1 required");
    const int d = p.degree();
    RootReport rep;
    rep.degree = d;
    rep.cauchy_bound = cauchy_bound(p);
    rep.factorial_bound = Rat(factorial(static_cast<unsigned>(d) + 1) + 1);

    // Real side: certified. The window starts at [-(d+1), d+1] and doubles
    // (capped by the Cauchy disc, which provably contains every root) until
    // the isolation count matches the total real-root count, so no real
    // root can be missed even for hand-entered polynomials.
    if (!(eps > 0)) throw std::invalid_argument("find_roots: eps > 0 required");
    for (const auto& [factor, mult] : p.squarefree_decomposition()) {
        if (factor.degree() < 1) continue;
        const int total = total_real_roots(factor);
        Int m(d + 1);
        const Int cap = rat_ceil(cauchy_bound(factor));
        std::vector<RootInterval> ivs;
        while (true) {
            ivs = sturm_real_roots(factor, Rat(-m), Rat(m), eps);
            if (static_cast<int>(ivs.size()) == total || m >= cap) break;
            m = std::min(Int(m * 2), cap);
        }
        for (const auto& iv : ivs) rep.real_roots.push_back(RealRoot{iv, iv.approx(), mult});
    }
    std::sort(rep.real_roots.begin(), rep.real_roots.end(),
              [](const RealRoot& x, const RealRoot& y) { return x.interval.lo < y.interval.lo; });

    // Complex side: numerical, monic-normalized to keep the float image sane.
    std::vector<double> monic(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) monic[static_cast<size_t>(j)] = to_double(Rat(p.coeff(j) / p.leading()));
    double radius = to_double(rep.cauchy_bound);
    if (!std::isfinite(radius)) radius = 1e100;
    AberthOutcome ab = aberth_ehrlich(monic, radius, 500, 1e-12);
    rep.converged = ab.converged;

    // A root of multiplicity m is only a cluster of radius ~eps^(1/m) to the
    // float solver; the certified real enclosures know those roots to 1e-12
    // or exactly, so near-real cluster members snap onto them.
    std::vector<bool> snapped(ab.roots.size(), false);
    for (const auto& r : rep.real_roots) {
        const double v = r.interval.approx();
        const double radius_ok = 1e-3 * (1.0 + std::abs(v));
        for (int t = 0; t < r.multiplicity; ++t) {
            int best = -1;
            double best_dist = radius_ok;
            for (size_t j = 0; j < ab.roots.size(); ++j) {
                if (snapped[j]) continue;
                double dist = std::hypot(ab.roots[j].real() - v, ab.roots[j].imag());
                if (dist < best_dist) {
                    best_dist = dist;
                    best = static_cast<int>(j);
                }
            }
            if (best < 0) break;
            ab.roots[static_cast<size_t>(best)] = std::complex<double>(v, 0.0);
            snapped[static_cast<size_t>(best)] = true;
        }
    }

    for (const auto& z : ab.roots) {
        std::complex<double> val(1.0, 0.0);
        for (int j = d - 1; j >= 0; --j) val = val * z + monic[static_cast<size_t>(j)];
        rep.complex_roots.push_back(ComplexRoot{z.real(), z.imag(), std::abs(val)});
    }
    std::sort(rep.complex_roots.begin(), rep.complex_roots.end(), [](const ComplexRoot& x, const ComplexRoot& y) {
        return std::tie(x.re, x.im) < std::tie(y.re, y.im);
    });

    auto [norm_ok, interval_ok] = check_root_bounds(rep, d);
    rep.real_interval_ok = interval_ok;
    (void)norm_ok;
    rep.re_conjecture_ok = true;
    for (const auto& z : rep.complex_roots)
        if (z.re < -d - 1e-9 || z.re > d - 1 + 1e-9) rep.re_conjecture_ok = false;
    return rep;
}

std::pair<bool, bool> check_root_bounds(const RootReport& report, int d) {
    const double bound = to_double(Rat(factorial(static_cast<unsigned>(d) + 1) + 1));
    bool norm_ok = true;
    for (const auto& z : report.complex_roots)
        if (std::hypot(z.re, z.im) >= bound) norm_ok = false;

    // Certified half-open window [-d, floor(d/2)). Point intervals compare
    // directly; open intervals contain no integer, so endpoint comparisons
    // against the integer thresholds decide exactly.
    const Rat lo_bound(-d);
    const Rat hi_bound(d / 2);
    bool interval_ok = true;
    for (const auto& r : report.real_roots) {
        const auto& iv = r.interval;
        bool ok = iv.is_point() ? (iv.lo >= lo_bound && iv.lo < hi_bound)
                                : (iv.lo >= lo_bound && iv.hi <= hi_bound);
        if (!ok) interval_ok = false;
    }
    return {norm_ok, interval_ok};
}

bool dim2_root_region_member(double re, double im, double tol) {
    const double strip_im = std::sqrt(15.0) / 6.0;
    if (std::abs(im) <= tol) {
        if (std::abs(re + 2.0) <= tol || std::abs(re + 1.0) <= tol ||
            std::abs(re + 2.0 / 3.0) <= tol)
            return true;
        return re >= -0.5 - tol && re < 0.0;
    }
    return std::abs(im) <= strip_im + tol && re >= -0.5 - tol && re < 0.0;
}

bool dim2_root_region_member_exact(const Rat& x) {
    if (x == Rat(-2) || x == Rat(-1) || x == Rat(-2, 3)) return true;
    return x >= Rat(-1, 2) && x < 0;
}

Int gi_value(int d, int i, const Int& n, int l) {
    if (l < 0 || l > d) throw std::out_of_range("gi_value: 0 <= l <= d required");
    const int size = d - l;
    Int total = 0;
    std::vector<int> idx(static_cast<size_t>(size));
    for (int t = 0; t < size; ++t) idx[static_cast<size_t>(t)] = t;
    while (true) {
        Int prod = 1;
        for (int t = 0; t < size; ++t) prod *= n + d - i - idx[static_cast<size_t>(t)];
        total += prod;
        if (size == 0) break;
        int pos = size - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == d - size + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
        for (int j = pos + 1; j < size; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j) - 1] + 1;
    }
    return total;
}

GiTable build_gi_table(int d) {
    GiTable t;
    t.d = d;
    t.B = d / 2;
    t.g.assign(static_cast<size_t>(d) + 1, std::vector<Int>(static_cast<size_t>(d) + 1));
    for (int i = 0; i <= d; ++i)
        for (int l = 0; l <= d; ++l) t.g[static_cast<size_t>(i)][static_cast<size_t>(l)] = gi_value(d, i, Int(t.B), l);
    for (int l = 0; l <= d - 1; ++l) {
        Int diff = gi_value(d, t.B, Int(t.B), l) - gi_value(d, t.B + 1, Int(t.B), l);
        t.lambda.push_back(Rat(diff, 2));
    }
    for (int i = 0; i <= d; ++i) t.s.push_back(Int(d - 2 * i + 1));
    return t;
}

MachineryResult verify_proof_machinery(int d) {
    if (d < 1) throw std::out_of_range("verify_proof_machinery: d >= 1 required");
    const int B = d / 2;
    auto fail = [](std::string why) { return MachineryResult{false, std::move(why)}; };

    for (int l = 0; l <= d; ++l) {
        for (int i = 0; i <= B + 1; ++i) {
            Int g = gi_value(d, i, Int(B), l);
            // positivity; the single boundary equality g_{B+1}(B, 0) = 0 is
            // the zero factor k = d-1 in the full product
            if (l == 0 && i == B + 1) {
                if (g != 0) return fail("g_{B+1}(B,0) != 0 at d=" + std::to_string(d));
            } else if (!(g > 0)) {
                return fail("g_i(B,l) <= 0 at d=" + std::to_string(d) + " i=" + std::to_string(i) +
                            " l=" + std::to_string(l));
            }
            // increments: weakly concave-to-linear shape everywhere, strict
            // away from the linear tail cases l in {d-1, d}
            Int g1 = gi_value(d, i + 1, Int(B), l);
            Int g2 = gi_value(d, i + 2, Int(B), l);
            Int lhs = g - g1, rhs = g1 - g2;
            if (lhs < rhs)
                return fail("increment inequality fails at d=" + std::to_string(d) +
                            " i=" + std::to_string(i) + " l=" + std::to_string(l));
            if (l <= d - 2 && i <= B && !(lhs > rhs))
                return fail("strict increment inequality fails at d=" + std::to_string(d) +
                            " i=" + std::to_string(i) + " l=" + std::to_string(l));
        }
    }

    for (int l = 0; l <= d - 1; ++l) {
        Int two_lambda = gi_value(d, B, Int(B), l) - gi_value(d, B + 1, Int(B), l);
        if (!(two_lambda > 0)) return fail("lambda(l) <= 0 at l=" + std::to_string(l));
        // cross-check the closed form (d/2) sum over (d-l-1)-subsets of
        // {1..d-1} of prod (d-k)
        const int size = d - l - 1;
        Int sum = 0;
        std::vector<int> idx(static_cast<size_t>(size));
        for (int t = 0; t < size; ++t) idx[static_cast<size_t>(t)] = t + 1;
        while (true) {
            Int prod = 1;
            for (int t = 0; t < size; ++t) prod *= Int(d - idx[static_cast<size_t>(t)]);
            sum += prod;
            if (size == 0) break;
            int pos = size - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == d - size + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
            for (int j = pos + 1; j < size; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j) - 1] + 1;
        }
        if (two_lambda != Int(d) * sum)
            return fail("lambda closed forms disagree at d=" + std::to_string(d) +
                        " l=" + std::to_string(l));
        // g(i) >= lambda * s(i), scaled by 2 to stay in integers
        for (int i = 0; i <= d; ++i) {
            Int g = gi_value(d, i, Int(B), l);
            Int s = Int(d - 2 * i + 1);
            if (!(2 * g >= two_lambda * s))
                return fail("g(i) >= lambda*s(i) fails at d=" + std::to_string(d) +
                            " i=" + std::to_string(i) + " l=" + std::to_string(l));
        }
    }
    return MachineryResult{};
}

bool check_dim_le_4_real_roots(const RootReport& report, int d) {
    if (d > 4) throw DimensionTooLarge("check_dim_le_4_real_roots: d <= 4 required");
    for (const auto& r : report.real_roots) {
        const auto& iv = r.interval;
        bool ok = iv.is_point() ? iv.lo < 1 : iv.hi <= 1;
        if (!ok) return false;
    }
    return true;
}

}  // namespace ehrhart
