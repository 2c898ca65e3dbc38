#include "latgon/body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "latgon/errors.hpp"
#include "latgon/polygon.hpp"

namespace latgon {

namespace {

// Distance from the origin to the segment [a, b].
double origin_segment_distance(Vec2 a, Vec2 b) {
    const Vec2 d = b - a;
    const double len2 = d.norm_sq();
    if (len2 == 0.0) return a.norm();
    double t = -a.dot(d) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return (a + t * d).norm();
}

void validate_polygon_body(const std::vector<Vec2>& v) {
    if (v.size() < 3) throw ValidationError("polygon body needs at least 3 vertices");
    for (const Vec2& p : v)
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw ValidationError("polygon body has non-finite vertex");
    const double two_area = 2.0 * polygon_signed_area(v);
    if (!(two_area > 0.0))
        throw ValidationError("polygon body must be anticlockwise with positive area");
    double scale = 0.0;
    for (const Vec2& p : v) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    const double eps = 1e-12 * scale * scale;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e0 = v[(i + 1) % n] - v[i];
        const Vec2 e1 = v[(i + 2) % n] - v[(i + 1) % n];
        if (cross(e0, e1) < -eps) throw ValidationError("polygon body is not convex");
        // origin strictly left of every directed edge
        if (cross(e0, -v[i]) <= eps)
            throw ValidationError("origin must be strictly interior to the body");
    }
}

// Ray-edge intersection: the t >= 0 with x on t * boundary(D), i.e. the
// gauge norm of x. Exactly one edge of a convex polygon with 0 interior
// matches; we take the smallest valid t to be robust at vertices.
double polygon_gauge(const std::vector<Vec2>& v, Vec2 x) {
    const std::size_t n = v.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = v[i];
        const Vec2 d = v[(i + 1) % n] - a;
        const double den = cross(a, d);
        if (den == 0.0) continue;  // edge line through the origin; excluded by validation
        // x = t*a + w*d with w = u*t, u in [0,1]
        const double t = cross(x, d) / den;
        const double w = cross(a, x) / den;
        if (t <= 0.0) continue;
        const double slack = 1e-12 * t;
        if (w < -slack || w > t + slack) continue;
        best = std::min(best, t);
    }
    if (!std::isfinite(best))
        throw Error("gauge ray intersection failed; body invalid?");
    return best;
}

double ellipse_radial(double p, Vec2 e, double t) {
    return p / (1.0 + e.x * std::cos(t) + e.y * std::sin(t));
}

}  // namespace

ConvexBody::ConvexBody(Representation rep) : rep_(std::move(rep)) {
    if (const auto* poly = std::get_if<PolygonRep>(&rep_)) {
        validate_polygon_body(poly->vertices);
        area_ = polygon_area(poly->vertices);
        centroid_ = polygon_centroid(poly->vertices);
        r_in_ = std::numeric_limits<double>::infinity();
        r_out_ = 0.0;
        const auto& v = poly->vertices;
        for (std::size_t i = 0; i < v.size(); ++i) {
            r_in_ = std::min(r_in_, origin_segment_distance(v[i], v[(i + 1) % v.size()]));
            r_out_ = std::max(r_out_, v[i].norm());
        }
    } else if (const auto* rad = std::get_if<RadialRep>(&rep_)) {
        const RadialFunction& rf = rad->rf;
        area_ = latgon::area(rf);
        centroid_ = latgon::centroid(rf);
        // For the piecewise-linear-in-r interpolant both extremes are
        // attained at samples.
        r_in_ = *std::min_element(rf.samples().begin(), rf.samples().end());
        r_out_ = *std::max_element(rf.samples().begin(), rf.samples().end());
    } else {
        const auto& el = std::get<EllipseFocusRep>(rep_);
        if (!(el.p > 0.0)) throw ValidationError("ellipse_focus needs semi-latus p > 0");
        const double e2 = el.e.norm_sq();
        if (!(e2 < 1.0)) throw ValidationError("ellipse_focus needs |e| < 1");
        const double one_m = 1.0 - e2;
        area_ = std::numbers::pi * el.p * el.p / (one_m * std::sqrt(one_m));
        centroid_ = -(el.p / one_m) * el.e;  // ellipse centre, relative to the focus
        const double e_len = std::sqrt(e2);
        r_in_ = el.p / (1.0 + e_len);
        r_out_ = el.p / (1.0 - e_len);
    }
}

ConvexBody ConvexBody::polygon(std::vector<Vec2> vertices) {
    return ConvexBody(PolygonRep{std::move(vertices)});
}

ConvexBody ConvexBody::radial(RadialFunction rf) { return ConvexBody(RadialRep{std::move(rf)}); }

ConvexBody ConvexBody::ellipse_focus(double p, Vec2 e) { return ConvexBody(EllipseFocusRep{p, e}); }

ConvexBody ConvexBody::disk(double radius) { return ellipse_focus(radius, {0.0, 0.0}); }

double norm_eval(const ConvexBody& body, Vec2 x) {
    if (x.x == 0.0 && x.y == 0.0) return 0.0;
    if (const auto* poly = std::get_if<ConvexBody::PolygonRep>(&body.representation()))
        return polygon_gauge(poly->vertices, x);
    if (const auto* rad = std::get_if<ConvexBody::RadialRep>(&body.representation()))
        return x.norm() / rad->rf.eval(x.angle());
    const auto& el = std::get<ConvexBody::EllipseFocusRep>(body.representation());
    return (x.norm() + el.e.dot(x)) / el.p;
}

double radial_eval(const ConvexBody& body, double t) {
    if (const auto* poly = std::get_if<ConvexBody::PolygonRep>(&body.representation()))
        return 1.0 / polygon_gauge(poly->vertices, unit_dir(t));
    if (const auto* rad = std::get_if<ConvexBody::RadialRep>(&body.representation()))
        return rad->rf.eval(t);
    const auto& el = std::get<ConvexBody::EllipseFocusRep>(body.representation());
    return ellipse_radial(el.p, el.e, t);
}

ConvexBody scale(const ConvexBody& body, double s) {
    if (!(s > 0.0) || !std::isfinite(s)) throw ValidationError("scale factor must be positive");
    if (const auto* poly = std::get_if<ConvexBody::PolygonRep>(&body.representation())) {
        std::vector<Vec2> v = poly->vertices;
        for (Vec2& p : v) p *= s;
        return ConvexBody::polygon(std::move(v));
    }
    if (const auto* rad = std::get_if<ConvexBody::RadialRep>(&body.representation()))
        return ConvexBody::radial(rad->rf.scaled(s));
    const auto& el = std::get<ConvexBody::EllipseFocusRep>(body.representation());
    return ConvexBody::ellipse_focus(el.p * s, el.e);
}

ConvexBody scale_to_unit_area(const ConvexBody& body) {
    return scale(body, 1.0 / std::sqrt(body.area()));
}

ConvexBody reflect(const ConvexBody& body) {
    if (const auto* poly = std::get_if<ConvexBody::PolygonRep>(&body.representation())) {
        std::vector<Vec2> v = poly->vertices;
        for (Vec2& p : v) p = -p;  // point reflection preserves orientation
        return ConvexBody::polygon(std::move(v));
    }
    if (const auto* rad = std::get_if<ConvexBody::RadialRep>(&body.representation())) {
        const auto& s = rad->rf.samples();
        std::vector<double> out(s.size());
        for (std::size_t j = 0; j < s.size(); ++j) out[j] = s[(j + s.size() / 2) % s.size()];
        return ConvexBody::radial(RadialFunction(std::move(out)));
    }
    const auto& el = std::get<ConvexBody::EllipseFocusRep>(body.representation());
    return ConvexBody::ellipse_focus(el.p, -el.e);
}

RadialFunction to_radial(const ConvexBody& body, std::size_t n) {
    std::vector<double> samples(n);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) samples[j] = radial_eval(body, step * static_cast<double>(j));
    return RadialFunction(std::move(samples));
}

}  // namespace latgon
