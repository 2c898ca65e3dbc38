#include "latgon/radial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "latgon/errors.hpp"

namespace latgon {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }
}  // namespace

RadialFunction::RadialFunction(std::vector<double> samples) : samples_(std::move(samples)) {
    if (samples_.size() < 8 || !power_of_two(samples_.size()))
        throw ValidationError("radial grid size must be a power of two, at least 8");
    for (double v : samples_)
        if (!(v > 0.0) || !std::isfinite(v))
            throw ValidationError("radial samples must be positive and finite");
}

RadialFunction RadialFunction::constant(double value, std::size_t n) {
    return RadialFunction(std::vector<double>(n, value));
}

double RadialFunction::angle(std::size_t j) const {
    return kTwoPi * static_cast<double>(j) / static_cast<double>(samples_.size());
}

double RadialFunction::step() const { return kTwoPi / static_cast<double>(samples_.size()); }

double RadialFunction::eval(double t) const {
    const double n = static_cast<double>(samples_.size());
    double u = t / kTwoPi * n;
    u -= std::floor(u / n) * n;  // wrap into [0, N)
    const std::size_t j = static_cast<std::size_t>(u) % samples_.size();
    const std::size_t k = (j + 1) % samples_.size();
    const double w = u - std::floor(u);
    return samples_[j] * (1.0 - w) + samples_[k] * w;
}

Vec2 RadialFunction::boundary_point(std::size_t j) const {
    return samples_[j] * unit_dir(angle(j));
}

RadialFunction RadialFunction::scaled(double s) const {
    if (!(s > 0.0)) throw ValidationError("radial scale factor must be positive");
    std::vector<double> out(samples_);
    for (double& v : out) v *= s;
    return RadialFunction(std::move(out));
}

double area(const RadialFunction& rf) {
    double sum = 0.0;
    for (double v : rf.samples()) sum += v * v;
    return 0.5 * rf.step() * sum;
}

Vec2 centroid_moment(const RadialFunction& rf) {
    double cx = 0.0, cy = 0.0;
    for (std::size_t j = 0; j < rf.size(); ++j) {
        const double r3 = rf[j] * rf[j] * rf[j];
        const double t = rf.angle(j);
        cx += r3 * std::cos(t);
        cy += r3 * std::sin(t);
    }
    return Vec2{cx, cy} * rf.step();
}

Vec2 centroid(const RadialFunction& rf) { return centroid_moment(rf) / (3.0 * area(rf)); }

bool convexity_certificate(const RadialFunction& rf) {
    const std::size_t n = rf.size();
    const double h = rf.step();
    std::vector<double> q(n);
    double qmax = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        q[j] = 1.0 / rf[j];
        qmax = std::max(qmax, q[j]);
    }
    const double tol = 1e-8 * qmax;
    for (std::size_t j = 0; j < n; ++j) {
        const double prev = q[(j + n - 1) % n];
        const double next = q[(j + 1) % n];
        const double second = (prev - 2.0 * q[j] + next) / (h * h);
        if (second + q[j] < -tol) return false;
    }
    return true;
}

}  // namespace latgon
