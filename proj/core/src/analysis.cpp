#include "latgon/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "latgon/body_io.hpp"
#include "latgon/errors.hpp"
#include "latgon/polygon.hpp"

namespace latgon {

void ExperimentConfig::validate() const {
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        if (n_values[i] < 3) throw ValidationError("n values must be at least 3");
        if (i > 0 && n_values[i] <= n_values[i - 1])
            throw ValidationError("n values must be strictly increasing");
    }
    const bool pow2 = grid != 0 && (grid & (grid - 1)) == 0;
    if (!pow2 || grid < 256 || grid > (std::size_t{1} << 20))
        throw ValidationError("grid must be a power of two in [256, 2^20]");
}

HausdorffResult hausdorff(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
    if (a.size() < 64 || b.size() < 64)
        throw ValidationError("hausdorff: boundaries need at least 64 samples");
    const auto one_sided = [](const std::vector<Vec2>& from, const std::vector<Vec2>& to) {
        double worst = 0.0;
        for (const Vec2& p : from) {
            double best = std::numeric_limits<double>::infinity();
            for (const Vec2& q : to) best = std::min(best, (p - q).norm_sq());
            worst = std::max(worst, best);
        }
        return std::sqrt(worst);
    };
    const auto max_gap = [](const std::vector<Vec2>& loop) {
        double g = 0.0;
        for (std::size_t i = 0; i < loop.size(); ++i)
            g = std::max(g, (loop[(i + 1) % loop.size()] - loop[i]).norm());
        return g;
    };
    HausdorffResult out;
    out.distance = std::max(one_sided(a, b), one_sided(b, a));
    out.sampling_gap = 0.5 * std::max(max_gap(a), max_gap(b));
    return out;
}

std::vector<Vec2> normalized_edge_hull_boundary(const std::vector<LatticeVector>& edges,
                                                std::size_t min_points) {
    std::vector<Vec2> pts;
    pts.reserve(edges.size());
    for (const LatticeVector& e : edges) pts.push_back(e.to_vec2());
    std::vector<Vec2> hull = convex_hull(std::move(pts));
    if (hull.size() < 3) throw ValidationError("edge hull is degenerate");
    const double s = 1.0 / std::sqrt(polygon_area(hull));
    for (Vec2& p : hull) p *= s;
    return sample_polygon_boundary(hull, min_points);
}

std::vector<Vec2> shape_boundary(const RadialFunction& rf) {
    const double s = 1.0 / std::sqrt(area(rf));
    std::vector<Vec2> out(rf.size());
    for (std::size_t j = 0; j < rf.size(); ++j) out[j] = s * rf.boundary_point(j);
    return out;
}

std::vector<Vec2> normalized_polygon_boundary(const LatticePolygon& polygon, int n,
                                              std::size_t min_points) {
    // Translate the minimal-x vertex (ties: minimal y) to the origin, exact
    // in integers, then scale by n^{-3/2} and normalize the area to 1.
    const auto& verts = polygon.vertices();
    LatticeVector anchor = verts[0];
    for (const LatticeVector& v : verts)
        if (v.x < anchor.x || (v.x == anchor.x && v.y < anchor.y)) anchor = v;
    std::vector<Vec2> shifted;
    shifted.reserve(verts.size());
    const double scale_n = std::pow(static_cast<double>(n), -1.5);
    for (const LatticeVector& v : verts) shifted.push_back(scale_n * (v - anchor).to_vec2());
    const double s = 1.0 / std::sqrt(polygon_area(shifted));
    for (Vec2& p : shifted) p *= s;
    return sample_polygon_boundary(shifted, min_points);
}

std::vector<Vec2> normalized_limit_boundary(const LimitPolygon& lp) {
    std::vector<Vec2> out = lp.boundary;
    const double s = 1.0 / std::sqrt(polygon_area(out));
    for (Vec2& p : out) p *= s;
    return out;
}

std::vector<ConvergenceRecord> run_convergence(const ConvexBody& body,
                                               const ExperimentConfig& config) {
    config.validate();
    const ConvexBody unit = scale_to_unit_area(body);
    const VPSolution sol = solve_vp(unit, config.grid);
    const LimitPolygon lp = limit_polygon(sol);
    const std::vector<Vec2> c_boundary = shape_boundary(sol.r);
    const std::vector<Vec2> p_boundary = normalized_limit_boundary(lp);

    std::vector<ConvergenceRecord> records;
    records.reserve(config.n_values.size());
    for (int n : config.n_values) {
        ConvergenceRecord rec;
        rec.n = n;
        rec.alpha_ref = sol.alpha;
        try {
            MinimizerResult res = [&] {
                switch (config.method) {
                    case Method::exact: return exact_minimizer(unit, n);
                    case Method::greedy: return greedy_polygon(unit, n);
                    case Method::shape_guided: return shape_guided_polygon(unit, sol.r, n);
                }
                throw ValidationError("unknown method");
            }();
            rec.perimeter = res.perimeter;
            rec.scaled = res.perimeter / std::pow(static_cast<double>(n), 1.5);
            double lower = 0.0;
            for (const LatticeVector& v : shortest_primitive_vectors(unit, n))
                lower += norm_eval(unit, v.to_vec2());
            rec.lower_scaled = lower / std::pow(static_cast<double>(n), 1.5);
            if (rec.scaled < rec.lower_scaled - 1e-9)
                throw NumericError("scaled perimeter fell below the density lower bound");
            // Hull of the primitive edges; the <= 2 synthetic closing edges
            // of a construction are artifacts and would spike the hull.
            std::vector<LatticeVector> hull_edges = res.polygon.edges();
            for (const LatticeVector& s : res.synthetic_edges) {
                const auto it = std::find(hull_edges.begin(), hull_edges.end(), s);
                if (it != hull_edges.end() && hull_edges.size() > 3) hull_edges.erase(it);
            }
            rec.hausdorff_C =
                hausdorff(normalized_edge_hull_boundary(hull_edges, 4096), c_boundary).distance;
            rec.hausdorff_P =
                hausdorff(normalized_polygon_boundary(res.polygon, n, 4096), p_boundary).distance;
            if (n <= 8 && config.method != Method::exact) {
                const MinimizerResult ex = exact_minimizer(unit, n);
                rec.exact_available = true;
                rec.exact_perimeter = ex.perimeter;
                rec.exact_scaled = ex.perimeter / std::pow(static_cast<double>(n), 1.5);
            }
        } catch (const Error& e) {
            rec.error = e.what();
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<ConvergenceRecord> run_convergence(const ExperimentConfig& config) {
    return run_convergence(load_body(config.body_path), config);
}

std::string convergence_table(const std::vector<ConvergenceRecord>& records) {
    std::string out =
        "     n    perimeter    per/n^1.5        alpha       dist_C       dist_P\n";
    char line[256];
    for (const ConvergenceRecord& r : records) {
        if (!r.error.empty()) {
            std::snprintf(line, sizeof line, "%6d    error: %s\n", r.n, r.error.c_str());
        } else {
            std::snprintf(line, sizeof line, "%6d %12.5f %12.7f %12.7f %12.6f %12.6f\n", r.n,
                          r.perimeter, r.scaled, r.alpha_ref, r.hausdorff_C, r.hausdorff_P);
        }
        out += line;
    }
    return out;
}

}  // namespace latgon
