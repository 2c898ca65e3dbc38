#include "latgon/polygon.hpp"

#include <algorithm>
#include <cmath>

#include "latgon/errors.hpp"

namespace latgon {

double polygon_signed_area(const std::vector<Vec2>& poly) {
    double s = 0.0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) s += cross(poly[i], poly[(i + 1) % n]);
    return 0.5 * s;
}

double polygon_area(const std::vector<Vec2>& poly) { return std::abs(polygon_signed_area(poly)); }

double polygon_perimeter(const std::vector<Vec2>& poly) {
    double s = 0.0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) s += (poly[(i + 1) % n] - poly[i]).norm();
    return s;
}

Vec2 polygon_centroid(const std::vector<Vec2>& poly) {
    double a = 0.0;
    Vec2 c{0.0, 0.0};
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 p = poly[i], q = poly[(i + 1) % n];
        const double w = cross(p, q);
        a += w;
        c += w * (p + q);
    }
    return c / (3.0 * a);
}

double polygon_diameter(const std::vector<Vec2>& poly) {
    double best = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i)
        for (std::size_t j = i + 1; j < poly.size(); ++j)
            best = std::max(best, (poly[i] - poly[j]).norm());
    return best;
}

bool polygon_is_convex_ccw(const std::vector<Vec2>& poly, double eps) {
    const std::size_t n = poly.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e0 = poly[(i + 1) % n] - poly[i];
        const Vec2 e1 = poly[(i + 2) % n] - poly[(i + 1) % n];
        if (cross(e0, e1) < -eps) return false;
    }
    return polygon_signed_area(poly) > 0.0;
}

bool point_in_convex_polygon(const std::vector<Vec2>& poly, Vec2 p, double eps) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = poly[i];
        const Vec2 d = poly[(i + 1) % n] - a;
        const double len = d.norm();
        if (len == 0.0) continue;
        // signed distance of p from the edge line; inside is non-negative
        if (cross(d, p - a) / len < -eps) return false;
    }
    return true;
}

std::vector<Vec2> convex_hull(std::vector<Vec2> points) {
    std::sort(points.begin(), points.end(), [](Vec2 a, Vec2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const std::size_t n = points.size();
    if (n < 3) return points;
    std::vector<Vec2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], points[i] - hull[k - 2]) <= 0.0) --k;
        hull[k++] = points[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], points[i] - hull[k - 2]) <= 0.0) --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);
    return hull;
}

std::vector<Vec2> sample_polygon_boundary(const std::vector<Vec2>& poly, std::size_t min_points) {
    if (poly.size() < 2) throw ValidationError("cannot sample a degenerate boundary");
    const double total = polygon_perimeter(poly);
    std::vector<Vec2> out;
    out.reserve(min_points + poly.size());
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = poly[i], b = poly[(i + 1) % n];
        const double len = (b - a).norm();
        const std::size_t pieces =
            1 + static_cast<std::size_t>(std::ceil(len / total * static_cast<double>(min_points)));
        for (std::size_t k = 0; k < pieces; ++k) {
            const double t = static_cast<double>(k) / static_cast<double>(pieces);
            out.push_back(a + t * (b - a));
        }
    }
    return out;
}

}  // namespace latgon
