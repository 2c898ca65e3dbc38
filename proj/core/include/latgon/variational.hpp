#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>

#include "latgon/body.hpp"
#include "latgon/radial.hpp"

namespace latgon {

// Solution of the constrained minimization
//
//   minimize   integral r^3 / r0
//   subject to integral r^3 cos = 0, integral r^3 sin = 0,
//              (1/2) integral r^2 = 1,
//
// over positive periodic r, where r0 is the (unit-area-scaled) radial
// function of the body. The minimizer has the closed form
// 1/r = a/r0 + b cos t + c sin t with a > 0; only (a, b, c) are unknown.
struct VPSolution {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    RadialFunction r;           // the solution (radial function of the limit shape)
    RadialFunction r0;          // unit-area-scaled input it was solved against
    double objective = 0.0;     // integral r^3 / r0
    double alpha = 0.0;         // pi/(3 sqrt 6) * objective
    std::array<double, 3> residuals{};  // constraint violations at the solution
    int iterations = 0;
};

// Objective integral r^3 / r0 by the periodic rectangle rule.
// Throws GridMismatch when the grids differ.
double vp_objective(const RadialFunction& r, const RadialFunction& r0);

// (integral r^3 cos, integral r^3 sin, (1/2) integral r^2 - 1).
std::array<double, 3> constraint_residuals(const RadialFunction& r);

struct SolveOptions {
    int max_iterations = 100;
    double tolerance = 1e-10;
    double fd_step = 1e-6;  // relative finite-difference step for the Jacobian
    // Optional starting point (a, b, c); defaults to the area-feasible
    // (sqrt((1/2) integral r0^2), 0, 0).
    std::optional<std::array<double, 3>> initial;
};

// Damped Newton iteration on the three constraint residuals of the solution
// family. The input is rescaled to unit area first (only the shape of the
// body matters). Throws NoConvergence on stagnation, NonPositive when no
// positive iterate is reachable, ValidationError when r0 fails the convexity
// certificate.
VPSolution solve_vp(const RadialFunction& r0, const SolveOptions& options = {});
VPSolution solve_vp(const ConvexBody& body, std::size_t grid = 2048,
                    const SolveOptions& options = {});

// The constant alpha computed two algebraically equal ways:
//   first  = pi/sqrt(6) * integral over the limit shape of ||x||_D dx,
//            by genuine 2-D polar quadrature through norm_eval;
//   second = pi/(3 sqrt 6) * integral r^3 / r0, the sector-reduced form.
// The body is rescaled to unit area internally to match the solution.
std::pair<double, double> alpha_two_ways(const VPSolution& sol, const ConvexBody& body);

// Scale limit of the minimizing polygons themselves: the closed convex curve
// P(t) = integral_0^t (r(s)^3 / 3) u(s) ds, translated so the minimal-x
// point sits at the origin (ties resolved by minimal y).
struct LimitPolygon {
    std::vector<Vec2> boundary;  // P at the grid angles, translated
    Vec2 translation;            // offset that was subtracted
};

// Throws NotClosed if the curve fails to close to 1e-6 (an unconverged
// solution would do that).
LimitPolygon limit_polygon(const VPSolution& sol);

// True iff the limit shape of the body is a disk, i.e. 1/r0 lies in
// span{1, cos t, sin t} (the body is an ellipse with a focus at the origin).
// Decided by the projection residual at tolerance 1e-8 * max(1/r0).
bool is_circle_limit(const ConvexBody& body, std::size_t grid = 2048);

}  // namespace latgon
