#include "latgon/variational.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gauss_legendre.hpp"
#include "latgon/errors.hpp"

namespace latgon {

namespace {

constexpr double kAlphaFactor = std::numbers::pi / (3.0 * 2.4494897427831780982);  // pi/(3 sqrt 6)

// r(t) = 1 / (a / r0(t) + b cos t + c sin t); empty when the denominator is
// not strictly positive everywhere.
bool family_radial(const RadialFunction& r0, double a, double b, double c,
                   std::vector<double>& out) {
    const std::size_t n = r0.size();
    out.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double t = r0.angle(j);
        const double den = a / r0[j] + b * std::cos(t) + c * std::sin(t);
        if (!(den > 0.0)) return false;
        out[j] = 1.0 / den;
    }
    return true;
}

std::array<double, 3> residuals_of_samples(const std::vector<double>& r, double step) {
    double mx = 0.0, my = 0.0, a2 = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) {
        const double t = step * static_cast<double>(j);
        const double r3 = r[j] * r[j] * r[j];
        mx += r3 * std::cos(t);
        my += r3 * std::sin(t);
        a2 += r[j] * r[j];
    }
    return {mx * step, my * step, 0.5 * a2 * step - 1.0};
}

double max_abs(const std::array<double, 3>& v) {
    return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
}

// Solve the 3x3 system J dx = -f by Gaussian elimination with partial
// pivoting.
std::array<double, 3> solve3(std::array<std::array<double, 3>, 3> J, std::array<double, 3> f) {
    std::array<double, 3> rhs{-f[0], -f[1], -f[2]};
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int row = col + 1; row < 3; ++row)
            if (std::abs(J[row][col]) > std::abs(J[piv][col])) piv = row;
        std::swap(J[col], J[piv]);
        std::swap(rhs[col], rhs[piv]);
        if (J[col][col] == 0.0) throw NoConvergence("singular Jacobian in Newton step");
        for (int row = col + 1; row < 3; ++row) {
            const double m = J[row][col] / J[col][col];
            for (int k = col; k < 3; ++k) J[row][k] -= m * J[col][k];
            rhs[row] -= m * rhs[col];
        }
    }
    std::array<double, 3> x{};
    for (int row = 2; row >= 0; --row) {
        double acc = rhs[row];
        for (int k = row + 1; k < 3; ++k) acc -= J[row][k] * x[k];
        x[row] = acc / J[row][row];
    }
    return x;
}

}  // namespace

double vp_objective(const RadialFunction& r, const RadialFunction& r0) {
    if (r.size() != r0.size()) throw GridMismatch("vp_objective: grids differ");
    double sum = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) sum += r[j] * r[j] * r[j] / r0[j];
    return sum * r.step();
}

std::array<double, 3> constraint_residuals(const RadialFunction& r) {
    const Vec2 m = centroid_moment(r);
    return {m.x, m.y, area(r) - 1.0};
}

VPSolution solve_vp(const RadialFunction& r0_in, const SolveOptions& options) {
    if (!convexity_certificate(r0_in))
        throw ValidationError("solve_vp: input radial function fails the convexity certificate");

    // Only the shape of the body matters; normalize to unit area first.
    const RadialFunction r0 = r0_in.scaled(1.0 / std::sqrt(area(r0_in)));
    const double step = r0.step();

    std::array<double, 3> x{std::sqrt(area(r0)), 0.0, 0.0};
    if (options.initial) x = *options.initial;

    std::vector<double> r;
    if (!family_radial(r0, x[0], x[1], x[2], r))
        throw NonPositive("solve_vp: initial iterate is not positive");
    std::array<double, 3> f = residuals_of_samples(r, step);

    int it = 0;
    for (; it < options.max_iterations && max_abs(f) >= options.tolerance; ++it) {
        // Finite-difference Jacobian, one column per parameter.
        std::array<std::array<double, 3>, 3> J{};
        std::vector<double> rj;
        for (int j = 0; j < 3; ++j) {
            double h = options.fd_step * std::max(1.0, std::abs(x[j]));
            std::array<double, 3> xj = x;
            xj[j] += h;
            if (!family_radial(r0, xj[0], xj[1], xj[2], rj)) {
                xj[j] = x[j] - h;  // backward difference if forward leaves positivity
                h = -h;
                if (!family_radial(r0, xj[0], xj[1], xj[2], rj))
                    throw NonPositive("solve_vp: cannot differentiate at the boundary");
            }
            const std::array<double, 3> fj = residuals_of_samples(rj, step);
            for (int i = 0; i < 3; ++i) J[i][j] = (fj[i] - f[i]) / h;
        }

        const std::array<double, 3> dx = solve3(J, f);

        // Damped step: halve while positivity fails or the residual grows.
        double s = 1.0;
        std::array<double, 3> xn{};
        std::array<double, 3> fn{};
        bool accepted = false;
        const double fnorm = max_abs(f);
        while (s > 1e-14) {
            xn = {x[0] + s * dx[0], x[1] + s * dx[1], x[2] + s * dx[2]};
            if (family_radial(r0, xn[0], xn[1], xn[2], r)) {
                fn = residuals_of_samples(r, step);
                if (max_abs(fn) < fnorm * (1.0 + 1e-12) || s < 1e-10) {
                    accepted = true;
                    break;
                }
            }
            s *= 0.5;
        }
        if (!accepted) throw NonPositive("solve_vp: no positive iterate along the damped path");
        x = xn;
        f = fn;
    }

    if (max_abs(f) >= options.tolerance)
        throw NoConvergence("solve_vp: residuals stagnated above tolerance");
    if (!(x[0] > 0.0)) throw NoConvergence("solve_vp: converged to a <= 0");

    family_radial(r0, x[0], x[1], x[2], r);
    VPSolution sol{x[0], x[1], x[2], RadialFunction(r), r0, 0.0, 0.0, f, it};
    sol.objective = vp_objective(sol.r, r0);
    sol.alpha = kAlphaFactor * sol.objective;
    if (!convexity_certificate(sol.r))
        throw NoConvergence("solve_vp: solution fails the convexity certificate");
    return sol;
}

VPSolution solve_vp(const ConvexBody& body, std::size_t grid, const SolveOptions& options) {
    return solve_vp(to_radial(body, grid), options);
}

std::pair<double, double> alpha_two_ways(const VPSolution& sol, const ConvexBody& body) {
    const ConvexBody unit = scale_to_unit_area(body);
    const std::size_t n = sol.r.size();
    const double step = sol.r.step();

    // 2-D polar quadrature of integral over C of ||x||_D dx on a midpoint
    // angular grid, radial direction by Gauss-Legendre, the norm evaluated
    // through the body's own gauge (ray-edge intersection for polygons).
    static thread_local std::vector<double> gx, gw;
    if (gx.empty()) {
        auto [xs, ws] = detail::gauss_legendre(8);
        gx = xs;
        gw = ws;
    }
    double outer = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double t = step * (static_cast<double>(k) + 0.5);
        const double den = sol.a / radial_eval(unit, t) + sol.b * std::cos(t) + sol.c * std::sin(t);
        if (!(den > 0.0)) throw NumericError("alpha_two_ways: solution not positive at midpoint");
        const double rc = 1.0 / den;
        const Vec2 u = unit_dir(t);
        double inner = 0.0;
        for (std::size_t m = 0; m < gx.size(); ++m) {
            const double rho = 0.5 * rc * (gx[m] + 1.0);
            inner += gw[m] * rho * norm_eval(unit, rho * u);
        }
        outer += 0.5 * rc * inner * step;
    }
    const double first = std::numbers::pi / std::sqrt(6.0) * outer;
    const double second = kAlphaFactor * vp_objective(sol.r, sol.r0);
    return {first, second};
}

LimitPolygon limit_polygon(const VPSolution& sol) {
    const std::size_t n = sol.r.size();
    const double step = sol.r.step();

    std::vector<Vec2> f(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double r3 = sol.r[j] * sol.r[j] * sol.r[j];
        f[j] = (r3 / 3.0) * unit_dir(sol.r.angle(j));
    }

    // Cumulative trapezoid; the closing defect equals the (zeroed) centroid
    // moment over 3, so a converged solution closes to solver tolerance.
    std::vector<Vec2> p(n);
    p[0] = {0.0, 0.0};
    for (std::size_t j = 1; j < n; ++j) p[j] = p[j - 1] + 0.5 * step * (f[j - 1] + f[j]);
    const Vec2 closure = p[n - 1] + 0.5 * step * (f[n - 1] + f[0]);
    if (closure.norm() > 1e-6)
        throw NotClosed("limit polygon failed to close; solution unconverged?");

    // One-signed turning.
    for (std::size_t j = 0; j < n; ++j) {
        const Vec2 d0 = p[(j + 1) % n] - p[j];
        const Vec2 d1 = p[(j + 2) % n] - p[(j + 1) % n];
        if (cross(d0, d1) < -1e-12 * (d0.norm() * d1.norm()))
            throw NumericError("limit polygon boundary is not convex");
    }

    // Translate the minimal-x point (ties: minimal y) to the origin.
    std::size_t arg = 0;
    for (std::size_t j = 1; j < n; ++j)
        if (p[j].x < p[arg].x || (p[j].x == p[arg].x && p[j].y < p[arg].y)) arg = j;
    const Vec2 offset = -p[arg];
    for (Vec2& q : p) q += offset;
    return LimitPolygon{std::move(p), offset};
}

bool is_circle_limit(const ConvexBody& body, std::size_t grid) {
    const RadialFunction r0 = to_radial(scale_to_unit_area(body), grid);
    const std::size_t n = r0.size();
    std::vector<double> q(n);
    double qmax = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        q[j] = 1.0 / r0[j];
        qmax = std::max(qmax, q[j]);
    }
    // Least-squares projection onto span{1, cos, sin}; the basis is
    // orthogonal on the uniform grid, so the coefficients are Fourier means.
    double c0 = 0.0, c1 = 0.0, c2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double t = r0.angle(j);
        c0 += q[j];
        c1 += q[j] * std::cos(t);
        c2 += q[j] * std::sin(t);
    }
    c0 /= static_cast<double>(n);
    c1 *= 2.0 / static_cast<double>(n);
    c2 *= 2.0 / static_cast<double>(n);
    double resid = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double t = r0.angle(j);
        resid = std::max(resid, std::abs(q[j] - (c0 + c1 * std::cos(t) + c2 * std::sin(t))));
    }
    return resid < 1e-8 * qmax;
}

}  // namespace latgon
