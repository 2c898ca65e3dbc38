#pragma once

#include <cmath>

namespace latgon {

// Plain 2D vector, double precision. Used for body vertices, boundary
// samples and everything else that is not an exact lattice quantity.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double xx, double yy) : x(xx), y(yy) {}

    constexpr Vec2 operator+(Vec2 r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(Vec2 r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    friend constexpr Vec2 operator*(double s, Vec2 v) { return {v.x * s, v.y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }

    Vec2& operator+=(Vec2 r) { x += r.x; y += r.y; return *this; }
    Vec2& operator-=(Vec2 r) { x -= r.x; y -= r.y; return *this; }
    Vec2& operator*=(double s) { x *= s; y *= s; return *this; }

    constexpr bool operator==(const Vec2&) const = default;

    constexpr double dot(Vec2 r) const { return x * r.x + y * r.y; }
    constexpr double cross(Vec2 r) const { return x * r.y - y * r.x; }
    double norm() const { return std::hypot(x, y); }
    constexpr double norm_sq() const { return x * x + y * y; }

    // Polar angle in [0, 2*pi).
    double angle() const {
        double t = std::atan2(y, x);
        if (t < 0.0) t += 6.283185307179586476925286766559;
        return t;
    }
};

inline double dot(Vec2 a, Vec2 b) { return a.dot(b); }
inline double cross(Vec2 a, Vec2 b) { return a.cross(b); }

// Unit vector u(t) = (cos t, sin t).
inline Vec2 unit_dir(double t) { return {std::cos(t), std::sin(t)}; }

}  // namespace latgon
