#include "latgon/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>

#include "gauss_legendre.hpp"
#include "latgon/errors.hpp"
#include "latgon/polygon.hpp"

namespace latgon {

namespace {

// Tolerance used when deciding lattice membership against a real-valued
// boundary; boundary points count as inside.
double membership_eps(const std::vector<Vec2>& region) {
    double scale = 1.0;
    for (const Vec2& p : region) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    return 1e-9 * scale;
}

// 0 for angles in [0, pi), 1 for [pi, 2 pi). (1,0) is in the first half,
// (-1,0) in the second.
int angular_half(LatticeVector v) {
    if (v.y > 0 || (v.y == 0 && v.x > 0)) return 0;
    return 1;
}

}  // namespace

bool is_primitive(LatticeVector v) {
    if (v.is_zero()) return false;
    return std::gcd(std::abs(v.x), std::abs(v.y)) == 1;
}

bool same_direction(LatticeVector a, LatticeVector b) {
    return icross(a, b) == 0 && idot(a, b) > 0;
}

bool SlopeLess::operator()(LatticeVector a, LatticeVector b) const {
    const int ha = angular_half(a), hb = angular_half(b);
    if (ha != hb) return ha < hb;
    const __int128 cr = icross(a, b);
    if (cr != 0) return cr > 0;
    if (idot(a, b) > 0) return norm_sq(a) < norm_sq(b);  // same direction: shorter first
    return false;  // opposite directions cannot share a half-plane
}

std::vector<LatticeVector> slope_order(std::vector<LatticeVector> vectors) {
    for (const LatticeVector& v : vectors)
        if (v.is_zero()) throw ValidationError("slope_order: zero vector");
    std::stable_sort(vectors.begin(), vectors.end(), SlopeLess{});
    return vectors;
}

LatticePolygon::LatticePolygon(std::vector<LatticeVector> vertices)
    : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3) throw ValidationError("lattice polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i) {
        const LatticeVector e0 = vertices_[(i + 1) % n] - vertices_[i];
        const LatticeVector e1 = vertices_[(i + 2) % n] - vertices_[(i + 1) % n];
        if (e0.is_zero()) throw ValidationError("lattice polygon has repeated vertex");
        if (icross(e0, e1) <= 0)
            throw ValidationError("lattice polygon must be strictly convex anticlockwise");
    }
    // Canonical rotation: first outgoing edge is the slope-order minimum.
    std::size_t start = 0;
    SlopeLess less;
    for (std::size_t i = 1; i < n; ++i) {
        const LatticeVector ei = vertices_[(i + 1) % n] - vertices_[i];
        const LatticeVector es = vertices_[(start + 1) % n] - vertices_[start];
        if (less(ei, es)) start = i;
    }
    std::rotate(vertices_.begin(), vertices_.begin() + static_cast<std::ptrdiff_t>(start),
                vertices_.end());
}

std::vector<LatticeVector> LatticePolygon::edges() const {
    std::vector<LatticeVector> out;
    out.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        out.push_back(vertices_[(i + 1) % vertices_.size()] - vertices_[i]);
    return out;
}

std::int64_t LatticePolygon::doubled_area() const {
    __int128 s = 0;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        s += icross(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
    return static_cast<std::int64_t>(s);
}

LatticePolygon increasing_slope_construct(std::vector<LatticeVector> vectors, int* merges) {
    LatticeVector sum{0, 0};
    for (const LatticeVector& v : vectors) {
        if (v.is_zero()) throw ValidationError("edge set contains the zero vector");
        sum = sum + v;
    }
    if (!sum.is_zero()) throw NonZeroSum("edge vectors do not sum to zero");

    // Merge positive multiples pairwise until all directions are distinct.
    int merged = 0;
    std::vector<LatticeVector> dirs;
    dirs.reserve(vectors.size());
    for (const LatticeVector& v : vectors) {
        bool absorbed = false;
        for (LatticeVector& d : dirs) {
            if (same_direction(d, v)) {
                d = d + v;
                ++merged;
                absorbed = true;
                break;
            }
        }
        if (!absorbed) dirs.push_back(v);
    }
    if (merges) *merges = merged;
    if (dirs.size() < 3) throw EmptyEdgeSet("fewer than 3 edge directions after merging");

    dirs = slope_order(std::move(dirs));
    std::vector<LatticeVector> verts;
    verts.reserve(dirs.size());
    LatticeVector p{0, 0};
    for (const LatticeVector& d : dirs) {
        verts.push_back(p);
        p = p + d;
    }
    return LatticePolygon(std::move(verts));
}

// ---------------------------------------------------------------------------
// Counting
// ---------------------------------------------------------------------------

namespace {

// x-interval cut by the horizontal line y = yline; empty when it misses.
bool row_interval(const std::vector<Vec2>& region, double yline, double& xlo, double& xhi) {
    xlo = std::numeric_limits<double>::infinity();
    xhi = -xlo;
    const std::size_t n = region.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = region[i], b = region[(i + 1) % n];
        if ((a.y - yline) * (b.y - yline) > 0.0) continue;
        if (a.y == b.y) {  // horizontal edge on the line
            if (a.y == yline) {
                xlo = std::min({xlo, a.x, b.x});
                xhi = std::max({xhi, a.x, b.x});
            }
            continue;
        }
        const double t = (yline - a.y) / (b.y - a.y);
        if (t < 0.0 || t > 1.0) continue;
        const double x = a.x + t * (b.x - a.x);
        xlo = std::min(xlo, x);
        xhi = std::max(xhi, x);
    }
    return xlo <= xhi;
}

template <typename PerPoint>
void scan_region(const std::vector<Vec2>& region, PerPoint&& per_point) {
    if (region.size() < 3) throw ValidationError("counting region needs at least 3 vertices");
    const double eps = membership_eps(region);
    double ymin = std::numeric_limits<double>::infinity(), ymax = -ymin;
    for (const Vec2& p : region) {
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const auto ylo = static_cast<std::int64_t>(std::ceil(ymin - eps));
    const auto yhi = static_cast<std::int64_t>(std::floor(ymax + eps));
    for (std::int64_t y = ylo; y <= yhi; ++y) {
        double xlo, xhi;
        if (!row_interval(region, static_cast<double>(y), xlo, xhi)) continue;
        auto xa = static_cast<std::int64_t>(std::ceil(xlo - eps));
        auto xb = static_cast<std::int64_t>(std::floor(xhi + eps));
        // Trim the float interval against the membership predicate so the
        // scanline agrees exactly with per-point tests.
        while (xa <= xb &&
               !point_in_convex_polygon(region, {static_cast<double>(xa), static_cast<double>(y)}, eps))
            ++xa;
        while (xa <= xb &&
               !point_in_convex_polygon(region, {static_cast<double>(xb), static_cast<double>(y)}, eps))
            --xb;
        for (std::int64_t x = xa; x <= xb; ++x) per_point(LatticeVector{x, y});
    }
}

}  // namespace

CountEstimate count_lattice_points(const std::vector<Vec2>& region) {
    CountEstimate out;
    scan_region(region, [&](LatticeVector) { ++out.count; });
    out.reference = polygon_area(region);
    out.bound = 2.0 * polygon_perimeter(region);
    return out;
}

CountEstimate count_primitive_points(const std::vector<Vec2>& region) {
    CountEstimate out;
    scan_region(region, [&](LatticeVector v) {
        if (is_primitive(v)) ++out.count;
    });
    const double L = polygon_perimeter(region);
    out.reference = 6.0 / (std::numbers::pi * std::numbers::pi) * polygon_area(region);
    out.bound = 3.0 * L * std::log(L);  // natural log; weakest nontrivial reading
    return out;
}

HomogeneousSum homogeneous_sum(PointSet set, const std::vector<Vec2>& region,
                               const std::function<double(Vec2)>& f) {
    // Spot-check positive 1-homogeneity on random rays.
    {
        std::mt19937_64 rng(0x1a7906u);
        std::uniform_real_distribution<double> coord(-7.0, 7.0), lam(0.0, 4.0);
        for (int i = 0; i < 16; ++i) {
            const Vec2 x{coord(rng), coord(rng)};
            const double l = lam(rng);
            const double lhs = f(l * x), rhs = l * f(x);
            if (std::abs(lhs - rhs) > 1e-9 * (1.0 + std::abs(rhs)))
                throw ValidationError("homogeneous_sum: f is not positively 1-homogeneous");
        }
    }

    HomogeneousSum out;
    double max_abs = 0.0;
    scan_region(region, [&](LatticeVector v) {
        const double val = f(v.to_vec2());
        if (set == PointSet::lattice || is_primitive(v)) out.sum += val;
        max_abs = std::max(max_abs, std::abs(val));
    });
    // M = max |f| over the region; for vertices of a convex region this is
    // exact for convex f, otherwise the boundary sampling below tightens it.
    for (std::size_t i = 0; i < region.size(); ++i) {
        const Vec2 a = region[i], b = region[(i + 1) % region.size()];
        for (int k = 0; k <= 64; ++k) {
            const double t = static_cast<double>(k) / 64.0;
            max_abs = std::max(max_abs, std::abs(f(a + t * (b - a))));
        }
    }

    // Sector reduction: for 1-homogeneous f and the origin-fan triangle
    // {0, A, B},  integral f = cross(A,B)/3 * integral_0^1 f(A + t(B-A)) dt.
    // Summed with signs this covers regions not containing the origin too.
    double integral = 0.0;
    for (std::size_t i = 0; i < region.size(); ++i) {
        const Vec2 a = region[i], b = region[(i + 1) % region.size()];
        const double line = detail::integrate([&](double t) { return f(a + t * (b - a)); }, 0.0,
                                              1.0, 20, 16);
        integral += cross(a, b) / 3.0 * line;
    }

    const double L = polygon_perimeter(region);
    if (set == PointSet::lattice) {
        out.reference = integral;
        out.bound = 2.0 * max_abs * L;
    } else {
        out.reference = 6.0 / (std::numbers::pi * std::numbers::pi) * integral;
        out.bound = 3.0 * max_abs * L * std::log(L);
    }
    return out;
}

std::vector<LatticeVector> primitive_vectors_in(const std::function<bool(Vec2)>& region,
                                                double radius_bound) {
    if (!(radius_bound >= 0.0) || radius_bound > 1e6)
        throw ValidationError("primitive_vectors_in: radius bound must be in [0, 1e6]");
    const auto r = static_cast<std::int64_t>(std::ceil(radius_bound));
    std::vector<LatticeVector> out;
    for (std::int64_t y = -r; y <= r; ++y)
        for (std::int64_t x = -r; x <= r; ++x) {
            const LatticeVector v{x, y};
            if (!is_primitive(v)) continue;
            if (region(v.to_vec2())) out.push_back(v);
        }
    std::sort(out.begin(), out.end(), SlopeLess{});
    return out;
}

}  // namespace latgon
