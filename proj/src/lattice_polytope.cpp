#include "ehrhart/lattice_polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>

namespace ehrhart {

namespace {

using std::int64_t;

int64_t floor_div_ll(int64_t a, int64_t b) {
    int64_t q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

int64_t ceil_div_ll(int64_t a, int64_t b) {
    int64_t q = a / b;
    if (a % b != 0 && ((a < 0) == (b < 0))) ++q;
    return q;
}

/// Fraction-free (Bareiss) determinant; T is int64_t or Int.
template <typename T>
T bareiss_det(std::vector<std::vector<T>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return T(1);
    T prev(1);
    T det_sign(1);
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return T(0);
            std::swap(m[k], m[pivot]);
            det_sign = -det_sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return det_sign * m[n - 1][n - 1];
}

/// Primitive normal of the hyperplane through k affinely independent points
/// (cofactor expansion of the singular k x k system), or empty if dependent.
template <typename T>
std::vector<T> hyperplane_normal(const std::vector<const std::vector<T>*>& pts) {
    const int k = static_cast<int>(pts.size());
    std::vector<T> normal(k);
    bool nonzero = false;
    for (int omit = 0; omit < k; ++omit) {
        std::vector<std::vector<T>> minor(k - 1, std::vector<T>(k - 1));
        for (int r = 1; r < k; ++r) {
            int cc = 0;
            for (int c = 0; c < k; ++c) {
                if (c == omit) continue;
                minor[r - 1][cc++] = (*pts[r])[c] - (*pts[0])[c];
            }
        }
        T v = bareiss_det(minor);
        if (omit % 2 == 1) v = -v;
        normal[omit] = v;
        if (v != 0) nonzero = true;
    }
    if (!nonzero) return {};
    return normal;
}

template <typename T>
void make_primitive(std::vector<T>& v) {
    T g(0);
    for (const T& x : v) g = boost::multiprecision::gcd(Int(g), Int(x)).convert_to<T>();
    if (g > 1)
        for (T& x : v) x = x / g;
}

template <>
void make_primitive<int64_t>(std::vector<int64_t>& v) {
    int64_t g = 0;
    for (int64_t x : v) {
        x = x < 0 ? -x : x;
        while (x) {
            int64_t t = g % x;
            g = x;
            x = t;
        }
    }
    if (g > 1)
        for (int64_t& x : v) x /= g;
}

template <typename T>
std::vector<Facet> scan_facets(const std::vector<std::vector<T>>& pts, int k) {
    const int npts = static_cast<int>(pts.size());
    std::set<std::pair<std::vector<T>, T>> seen;
    std::vector<Facet> out;

    std::vector<int> idx(static_cast<size_t>(k));
    std::vector<const std::vector<T>*> subset(static_cast<size_t>(k));

    auto consider = [&]() {
        for (int i = 0; i < k; ++i) subset[static_cast<size_t>(i)] = &pts[static_cast<size_t>(idx[static_cast<size_t>(i)])];
        std::vector<T> a = hyperplane_normal(subset);
        if (a.empty()) return;
        make_primitive(a);
        T b(0);
        for (int c = 0; c < k; ++c) b += a[static_cast<size_t>(c)] * (*subset[0])[static_cast<size_t>(c)];
        // canonical sign for dedup only; orientation fixed by the side test
        std::vector<T> key = a;
        T keyb = b;
        for (const T& x : key) {
            if (x > 0) break;
            if (x < 0) {
                for (T& y : key) y = -y;
                keyb = -keyb;
                break;
            }
        }
        if (!seen.emplace(key, keyb).second) return;
        bool all_le = true, all_ge = true;
        for (const auto& p : pts) {
            T dot(0);
            for (int c = 0; c < k; ++c) dot += key[static_cast<size_t>(c)] * p[static_cast<size_t>(c)];
            if (dot > keyb) all_le = false;
            if (dot < keyb) all_ge = false;
            if (!all_le && !all_ge) return;
        }
        Facet f;
        f.normal.resize(static_cast<size_t>(k));
        if (all_le) {
            for (int c = 0; c < k; ++c) f.normal[static_cast<size_t>(c)] = Int(key[static_cast<size_t>(c)]);
            f.offset = Int(keyb);
        } else {
            for (int c = 0; c < k; ++c) f.normal[static_cast<size_t>(c)] = Int(-key[static_cast<size_t>(c)]);
            f.offset = Int(-keyb);
        }
        out.push_back(std::move(f));
    };

    // all k-subsets of the point list
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    if (npts < k) return out;
    while (true) {
        consider();
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == npts - k + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
        for (int j = pos + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j) - 1] + 1;
    }
    return out;
}

std::vector<std::vector<Int>> project_dedup(const std::vector<std::vector<Int>>& pts, int k) {
    std::set<std::vector<Int>> s;
    for (const auto& p : pts) s.emplace(p.begin(), p.begin() + k);
    return {s.begin(), s.end()};
}

/// True when every (k-1)x(k-1) minor of the difference matrix and every
/// point/normal dot product provably fits in int64.
bool int64_scan_safe(const std::vector<std::vector<Int>>& pts, int k) {
    Int maxabs = 0;
    for (const auto& p : pts)
        for (int c = 0; c < k; ++c) maxabs = std::max(maxabs, Int(abs(p[static_cast<size_t>(c)])));
    // squared Hadamard bound on minors of the difference matrix
    Int h2 = 1;
    Int rowsq = Int(k) * (2 * maxabs) * (2 * maxabs);
    for (int i = 0; i < k - 1; ++i) h2 *= rowsq;
    return h2 < (Int(1) << 61);
}

struct LevelFacet {
    std::vector<Int> head;  // coefficients on x_1..x_{k-1}
    Int last;               // coefficient on x_k, nonzero
    Int offset;
};

template <typename T>
struct LevelFacetT {
    std::vector<T> head;
    T last;
    T offset;  // already scaled by the dilation factor
};

template <typename T>
class CountWalker {
public:
    CountWalker(const std::vector<std::vector<LevelFacetT<T>>>& levels, int d, bool interior,
                bool collect)
        : levels_(levels), d_(d), interior_(interior), collect_(collect) {
        prefix_.resize(static_cast<size_t>(d));
    }

    void run() { descend(0); }

    Int count = 0;
    std::vector<std::vector<Int>> points;

private:
    void descend(int level) {
        bool have_lo = false, have_hi = false;
        T lo{}, hi{};
        for (const auto& f : levels_[static_cast<size_t>(level)]) {
            T rhs = f.offset;
            for (size_t j = 0; j < f.head.size(); ++j) rhs -= f.head[j] * prefix_[j];
            if (interior_) rhs -= 1;
            if (f.last > 0) {
                T v = div_floor(rhs, f.last);
                if (!have_hi || v < hi) hi = v;
                have_hi = true;
            } else {
                T v = div_ceil(rhs, f.last);
                if (!have_lo || v > lo) lo = v;
                have_lo = true;
            }
        }
        // a compact polytope bounds every fiber in both directions
        if (!have_lo || !have_hi || lo > hi) return;
        if (level == d_ - 1 && !collect_) {
            count += Int(hi) - Int(lo) + 1;
            return;
        }
        for (T x = lo; x <= hi; ++x) {
            prefix_[static_cast<size_t>(level)] = x;
            if (level == d_ - 1) {
                ++count;
                std::vector<Int> pt(static_cast<size_t>(d_));
                for (int j = 0; j < d_; ++j) pt[static_cast<size_t>(j)] = Int(prefix_[static_cast<size_t>(j)]);
                points.push_back(std::move(pt));
            } else {
                descend(level + 1);
            }
        }
    }

    static T div_floor(const T& a, const T& b) {
        if constexpr (std::is_same_v<T, int64_t>)
            return floor_div_ll(a, b);
        else
            return floor_div(a, b);
    }
    static T div_ceil(const T& a, const T& b) {
        if constexpr (std::is_same_v<T, int64_t>)
            return ceil_div_ll(a, b);
        else
            return ceil_div(a, b);
    }

    const std::vector<std::vector<LevelFacetT<T>>>& levels_;
    int d_;
    bool interior_;
    bool collect_;
    std::vector<T> prefix_;
};

}  // namespace

int affine_rank(const std::vector<std::vector<Int>>& points) {
    if (points.empty()) return -1;
    const int d = static_cast<int>(points[0].size());
    std::vector<std::vector<Rat>> rows;
    for (size_t i = 1; i < points.size(); ++i) {
        std::vector<Rat> r(static_cast<size_t>(d));
        for (int c = 0; c < d; ++c) r[static_cast<size_t>(c)] = Rat(points[i][static_cast<size_t>(c)] - points[0][static_cast<size_t>(c)]);
        rows.push_back(std::move(r));
    }
    int rank = 0;
    for (int col = 0; col < d && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[static_cast<size_t>(r)][static_cast<size_t>(col)] == 0) continue;
            Rat f = rows[static_cast<size_t>(r)][static_cast<size_t>(col)] / rows[static_cast<size_t>(rank)][static_cast<size_t>(col)];
            for (int c = col; c < d; ++c)
                rows[static_cast<size_t>(r)][static_cast<size_t>(c)] -= f * rows[static_cast<size_t>(rank)][static_cast<size_t>(c)];
        }
        ++rank;
    }
    return rank;
}

std::vector<Facet> facet_enumeration(const std::vector<std::vector<Int>>& points) {
    if (points.empty()) throw DegeneratePolytope("empty point set");
    const int k = static_cast<int>(points[0].size());
    std::vector<std::vector<Int>> pts = project_dedup(points, k);
    if (affine_rank(pts) != k)
        throw DegeneratePolytope("point set spans a lower-dimensional affine hull");

    std::vector<Facet> facets;
    if (int64_scan_safe(pts, k)) {
        std::vector<std::vector<int64_t>> small;
        small.reserve(pts.size());
        for (const auto& p : pts) {
            std::vector<int64_t> q(static_cast<size_t>(k));
            for (int c = 0; c < k; ++c) q[static_cast<size_t>(c)] = p[static_cast<size_t>(c)].convert_to<int64_t>();
            small.push_back(std::move(q));
        }
        facets = scan_facets(small, k);
    } else {
        facets = scan_facets(pts, k);
    }
    std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
        return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
    });
    return facets;
}

LatticePolytope LatticePolytope::build(std::vector<std::vector<Int>> points) {
    if (points.empty()) throw std::invalid_argument("build: empty vertex list");
    const int d = static_cast<int>(points[0].size());
    if (d < 1) throw std::invalid_argument("build: zero-dimensional coordinates");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != d)
            throw std::invalid_argument("build: inconsistent coordinate lengths");

    LatticePolytope P;
    P.d_ = d;
    P.tower_.resize(static_cast<size_t>(d));
    for (int k = 1; k <= d; ++k) {
        auto proj = project_dedup(points, k);
        if (affine_rank(proj) != k) {
            if (k == d) throw DegeneratePolytope("vertex set is not full-dimensional");
            // projections of a full-dimensional set are full-dimensional,
            // so reaching this means the input itself is degenerate
            throw DegeneratePolytope("vertex set is not full-dimensional");
        }
        P.tower_[static_cast<size_t>(k) - 1] = facet_enumeration(proj);
    }

    // vertex = point whose tight facet normals span R^d; prepending the
    // origin turns the affine-rank helper into a linear-rank test
    const auto& facets = P.tower_.back();
    std::set<std::vector<Int>> uniq(points.begin(), points.end());
    for (const auto& p : uniq) {
        std::vector<std::vector<Int>> active{std::vector<Int>(static_cast<size_t>(d), Int(0))};
        for (const auto& f : facets) {
            Int dot = 0;
            for (int c = 0; c < d; ++c) dot += f.normal[static_cast<size_t>(c)] * p[static_cast<size_t>(c)];
            if (dot == f.offset) active.push_back(f.normal);
        }
        if (static_cast<int>(active.size()) < d + 1) continue;
        if (affine_rank(active) == d) P.vertices_.push_back(p);
    }
    return P;
}

LatticePolytope LatticePolytope::dilate(const Int& n) const {
    if (n < 1) throw std::invalid_argument("dilate: n >= 1 required");
    LatticePolytope P;
    P.d_ = d_;
    P.vertices_ = vertices_;
    for (auto& v : P.vertices_)
        for (auto& c : v) c *= n;
    P.tower_ = tower_;
    for (auto& level : P.tower_)
        for (auto& f : level) f.offset *= n;
    return P;
}

bool LatticePolytope::contains(const std::vector<Rat>& x, bool strict) const {
    if (static_cast<int>(x.size()) != d_) throw std::invalid_argument("contains: wrong dimension");
    for (const auto& f : facets()) {
        Rat dot(0);
        for (int c = 0; c < d_; ++c) dot += Rat(f.normal[static_cast<size_t>(c)]) * x[static_cast<size_t>(c)];
        if (strict ? !(dot < Rat(f.offset)) : !(dot <= Rat(f.offset))) return false;
    }
    return true;
}

namespace {

template <typename T>
std::vector<std::vector<LevelFacetT<T>>> scaled_levels(const std::vector<std::vector<Facet>>& tower,
                                                       const Int& n) {
    std::vector<std::vector<LevelFacetT<T>>> levels(tower.size());
    for (size_t k = 0; k < tower.size(); ++k) {
        for (const auto& f : tower[k]) {
            const Int& last = f.normal.back();
            if (last == 0) continue;  // implied by the projection one level down
            LevelFacetT<T> lf;
            lf.head.resize(f.normal.size() - 1);
            for (size_t j = 0; j + 1 < f.normal.size(); ++j) lf.head[j] = f.normal[j].convert_to<T>();
            lf.last = last.convert_to<T>();
            lf.offset = Int(f.offset * n).convert_to<T>();
            levels[k].push_back(std::move(lf));
        }
    }
    return levels;
}

template <>
std::vector<std::vector<LevelFacetT<Int>>> scaled_levels<Int>(
    const std::vector<std::vector<Facet>>& tower, const Int& n) {
    std::vector<std::vector<LevelFacetT<Int>>> levels(tower.size());
    for (size_t k = 0; k < tower.size(); ++k) {
        for (const auto& f : tower[k]) {
            if (f.normal.back() == 0) continue;
            LevelFacetT<Int> lf;
            lf.head.assign(f.normal.begin(), f.normal.end() - 1);
            lf.last = f.normal.back();
            lf.offset = f.offset * n;
            levels[k].push_back(std::move(lf));
        }
    }
    return levels;
}

/// Conservative: every partial sum during the walk fits in int64.
bool int64_walk_safe(const LatticePolytope& P, const Int& n) {
    Int coordmax = 1;
    for (const auto& v : P.vertices())
        for (const auto& c : v) coordmax = std::max(coordmax, Int(abs(c) * n));
    Int bound = 0;
    for (const auto& level : P.tower())
        for (const auto& f : level) {
            Int s = abs(f.offset * n) + 1;
            for (const auto& a : f.normal) s += abs(a) * coordmax;
            bound = std::max(bound, s);
        }
    return bound < (Int(1) << 61);
}

}  // namespace

Int LatticePolytope::count_lattice_points(const Int& n, bool interior) const {
    if (n < 0) throw std::invalid_argument("count_lattice_points: n >= 0 required");
    if (int64_walk_safe(*this, n)) {
        auto levels = scaled_levels<int64_t>(tower_, n);
        CountWalker<int64_t> w(levels, d_, interior, false);
        w.run();
        return w.count;
    }
    auto levels = scaled_levels<Int>(tower_, n);
    CountWalker<Int> w(levels, d_, interior, false);
    w.run();
    return w.count;
}

std::vector<std::vector<Int>> LatticePolytope::enumerate_lattice_points(const Int& n,
                                                                        bool interior) const {
    if (n < 0) throw std::invalid_argument("enumerate_lattice_points: n >= 0 required");
    auto levels = scaled_levels<Int>(tower_, n);
    CountWalker<Int> w(levels, d_, interior, true);
    w.run();
    return w.points;
}

}  // namespace ehrhart
