#pragma once

#include <cstddef>
#include <vector>

#include "latgon/vec2.hpp"

namespace latgon {

// Radial function of a starshaped set, sampled on a uniform angular grid:
// sample j is r(2*pi*j / N). Periodicity is implicit; there is no duplicated
// endpoint. N must be a power of two so grid-refinement studies nest exactly.
class RadialFunction {
public:
    explicit RadialFunction(std::vector<double> samples);

    // Constant function r(t) = value on an N-point grid.
    static RadialFunction constant(double value, std::size_t n);

    std::size_t size() const { return samples_.size(); }
    const std::vector<double>& samples() const { return samples_; }
    double operator[](std::size_t j) const { return samples_[j]; }

    // Angle of grid node j.
    double angle(std::size_t j) const;
    // Grid spacing 2*pi/N.
    double step() const;

    // Periodic linear interpolation at an arbitrary angle.
    double eval(double t) const;

    // Boundary point r(t_j) * u(t_j) at grid node j.
    Vec2 boundary_point(std::size_t j) const;

    // Pointwise scaling by s > 0.
    RadialFunction scaled(double s) const;

private:
    std::vector<double> samples_;
};

// Area of the starshaped set: (1/2) * integral of r^2 over [0, 2*pi],
// by the periodic rectangle rule (spectrally accurate for smooth r).
double area(const RadialFunction& rf);

// The pair (integral r^3 cos t dt, integral r^3 sin t dt). The centroid of
// the set is this vector divided by 3 * area.
Vec2 centroid_moment(const RadialFunction& rf);

Vec2 centroid(const RadialFunction& rf);

// True iff the discrete curvature-sign quantity (1/r)'' + 1/r is >= -tol at
// every grid node, with tol = 1e-8 * max(1/r). Certifies that rf is the
// radial function of a convex set (up to grid resolution).
bool convexity_certificate(const RadialFunction& rf);

}  // namespace latgon
