#include "ehrhart/sturm.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace ehrhart {

namespace {

Polynomial linear_root_factor(const Rat& r) {
    // x - r
    return Polynomial({-r, Rat(1)});
}

}  // namespace

SturmChain::SturmChain(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm chain of zero polynomial");
    chain_.push_back(p.primitive_integer_scaled());
    if (p.degree() == 0) return;
    chain_.push_back(p.derivative().primitive_integer_scaled());
    while (chain_.back().degree() > 0) {
        Polynomial r = chain_[chain_.size() - 2].divmod(chain_.back()).second;
        if (r.is_zero()) break;  // non-squarefree input: chain ends at the gcd
        chain_.push_back((-r).primitive_integer_scaled());
    }
}

int SturmChain::variations(const Rat& x) const {
    int count = 0;
    int prev = 0;
    for (const auto& f : chain_) {
        int s = sign(f(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int SturmChain::variations_at_infinity(int inf_sign) const {
    int count = 0;
    int prev = 0;
    for (const auto& f : chain_) {
        if (f.is_zero()) continue;
        int s = sign(f.leading());
        if (inf_sign < 0 && f.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int SturmChain::count_roots(const Rat& lo, const Rat& hi) const {
    return variations(lo) - variations(hi);
}

int total_real_roots(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("total_real_roots: zero polynomial");
    if (p.degree() == 0) return 0;
    SturmChain chain(p.squarefree_part());
    return chain.variations_at_infinity(-1) - chain.variations_at_infinity(+1);
}

namespace {

/// Bisection refinement of an isolating interval with a guaranteed sign
/// change; splits at interior integers first so the final interval either
/// pins the root exactly or contains no integer.
RootInterval refine(const Polynomial& q, Rat a, Rat b, const Rat& eps) {
    int sa = sign(q(a));
    while (b - a >= eps || rat_floor(a) + 1 <= rat_ceil(b) - 1) {
        Rat mid = (a + b) / 2;
        Int ilo = rat_floor(a) + 1;  // smallest integer > a
        Int ihi = rat_ceil(b) - 1;   // largest integer < b
        Rat m;
        if (ilo <= ihi) {
            Int pick = rat_floor(mid);
            if (pick < ilo) pick = ilo;
            if (pick > ihi) pick = ihi;
            m = Rat(pick);
        } else {
            m = mid;
        }
        int sm = sign(q(m));
        if (sm == 0) return {m, m};
        if (sm != sa)
            b = m;
        else {
            a = m;
            sa = sm;
        }
    }
    return {a, b};
}

}  // namespace

std::vector<RootInterval> sturm_real_roots(const Polynomial& p, const Rat& lo, const Rat& hi,
                                           const Rat& eps) {
    if (p.is_zero()) throw std::invalid_argument("sturm_real_roots: zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("sturm_real_roots: requires lo < hi");
    if (!(eps > 0)) throw std::invalid_argument("sturm_real_roots: requires eps > 0");

    std::vector<RootInterval> roots;
    Polynomial q = p.squarefree_part();

    // Exact roots at the window endpoints: lo is excluded by half-openness,
    // hi is included.
    while (q.degree() > 0 && q(lo) == 0) q = q.exact_div(linear_root_factor(lo));
    if (q.degree() > 0 && q(hi) == 0) {
        roots.push_back({hi, hi});
        q = q.exact_div(linear_root_factor(hi));
    }

    bool rescan = true;
    while (rescan && q.degree() > 0) {
        rescan = false;
        SturmChain chain(q);
        struct Seg {
            Rat a, b;
            int va, vb;
        };
        std::deque<Seg> work;
        work.push_back({lo, hi, chain.variations(lo), chain.variations(hi)});
        // Kept separate: if a subdivision point turns out to be an exact
        // rational root, q is deflated and the scan restarts, which would
        // re-discover intervals already collected in this pass.
        std::vector<RootInterval> pass;
        while (!work.empty()) {
            Seg s = work.front();
            work.pop_front();
            int cnt = s.va - s.vb;
            if (cnt == 0) continue;
            if (cnt == 1) {
                // One simple root strictly inside (a, b): endpoints are
                // certified non-roots, so a sign change is present.
                pass.push_back(refine(q, s.a, s.b, eps));
                continue;
            }
            Rat m = (s.a + s.b) / 2;
            if (q(m) == 0) {
                roots.push_back({m, m});
                q = q.exact_div(linear_root_factor(m));
                rescan = true;
                break;
            }
            int vm = chain.variations(m);
            work.push_back({s.a, m, s.va, vm});
            work.push_back({m, s.b, vm, s.vb});
        }
        if (!rescan) roots.insert(roots.end(), pass.begin(), pass.end());
    }

    std::sort(roots.begin(), roots.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return roots;
}

}  // namespace ehrhart
