#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "latgon/radial.hpp"
#include "latgon/vec2.hpp"

namespace latgon {

// Convex compact unit body D with the origin strictly interior. Induces the
// (possibly asymmetric) gauge norm ||x|| = min{ t >= 0 : x in t*D }.
//
// Three representations:
//   polygon       - ordered anticlockwise vertex list, evaluated exactly by
//                   ray-edge intersection;
//   radial        - sampled radial function, evaluated by periodic linear
//                   interpolation;
//   ellipse_focus - conic r(t) = p / (1 + e_x cos t + e_y sin t), an ellipse
//                   with one focus at the origin (|e| < 1), evaluated in
//                   closed form. A disk centred at the origin is e = 0.
class ConvexBody {
public:
    struct PolygonRep { std::vector<Vec2> vertices; };
    struct RadialRep { RadialFunction rf; };
    struct EllipseFocusRep { double p; Vec2 e; };
    using Representation = std::variant<PolygonRep, RadialRep, EllipseFocusRep>;

    static ConvexBody polygon(std::vector<Vec2> vertices);
    static ConvexBody radial(RadialFunction rf);
    static ConvexBody ellipse_focus(double p, Vec2 e);
    // Disk of the given radius centred at the origin. The default radius
    // 1/sqrt(pi) makes the area exactly 1.
    static ConvexBody disk(double radius = 0.56418958354775628695);

    const Representation& representation() const { return rep_; }
    bool is_polygon() const { return std::holds_alternative<PolygonRep>(rep_); }
    bool is_radial() const { return std::holds_alternative<RadialRep>(rep_); }
    bool is_ellipse_focus() const { return std::holds_alternative<EllipseFocusRep>(rep_); }

    double area() const { return area_; }
    Vec2 centroid() const { return centroid_; }
    // Largest ball centred at the origin contained in the body.
    double inradius() const { return r_in_; }
    // Smallest ball centred at the origin containing the body.
    double circumradius() const { return r_out_; }

private:
    explicit ConvexBody(Representation rep);

    Representation rep_;
    double area_ = 0.0;
    Vec2 centroid_;
    double r_in_ = 0.0;
    double r_out_ = 0.0;
};

// Gauge norm ||x||_D. Total on finite inputs; zero iff x = 0.
double norm_eval(const ConvexBody& body, Vec2 x);

// Boundary distance r(t) in direction u(t) = (cos t, sin t).
double radial_eval(const ConvexBody& body, double t);

// Body scaled by area^{-1/2}; idempotent on unit-area bodies.
ConvexBody scale_to_unit_area(const ConvexBody& body);

// Body scaled by s > 0 about the origin.
ConvexBody scale(const ConvexBody& body, double s);

// Point reflection -D. Minimizing the anticlockwise perimeter under -D is
// the same as minimizing the clockwise perimeter under D.
ConvexBody reflect(const ConvexBody& body);

// Sample radial_eval on an N-point uniform grid (exact ray-edge intersection
// for polygon bodies).
RadialFunction to_radial(const ConvexBody& body, std::size_t n);

}  // namespace latgon
