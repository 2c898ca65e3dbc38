#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latgon/body.hpp"
#include "latgon/minimizer.hpp"
#include "latgon/variational.hpp"

namespace latgon {

struct ExperimentConfig {
    std::string body_path;
    std::vector<int> n_values;       // strictly increasing, each >= 3
    std::size_t grid = 2048;         // power of two in [256, 2^20]
    Method method = Method::shape_guided;
    std::uint64_t seed = 0;
    std::string output_dir;

    void validate() const;  // throws ValidationError
};

// One row of a convergence experiment. `scaled` is perimeter / n^{3/2} and
// should approach alpha_ref; the Hausdorff columns compare area-normalized
// shapes: the hull of the edge set against the limit shape, and the
// n^{-3/2}-scaled polygon against the limit polygon.
struct ConvergenceRecord {
    int n = 0;
    double perimeter = 0.0;
    double scaled = 0.0;
    double alpha_ref = 0.0;
    // Density principle: sum of the n smallest primitive norms over n^{3/2};
    // no n-gon scales below it.
    double lower_scaled = 0.0;
    double hausdorff_C = 0.0;
    double hausdorff_P = 0.0;
    // Exact minimizer data, filled for n <= 8.
    bool exact_available = false;
    double exact_perimeter = 0.0;
    double exact_scaled = 0.0;
    // Non-empty when this n failed; the sweep continues regardless.
    std::string error;
};

// Runs the configured construction for each n against the body's variational
// solution. Deterministic given the config.
std::vector<ConvergenceRecord> run_convergence(const ConvexBody& body,
                                               const ExperimentConfig& config);
// Convenience overload that loads the body from config.body_path.
std::vector<ConvergenceRecord> run_convergence(const ExperimentConfig& config);

struct HausdorffResult {
    double distance = 0.0;      // symmetric max-min over boundary samples
    double sampling_gap = 0.0;  // resolution limit of the sampled estimate
};

// Hausdorff distance between two convex boundaries given as closed sample
// loops (>= 64 points each).
HausdorffResult hausdorff(const std::vector<Vec2>& a, const std::vector<Vec2>& b);

// Boundary loop of the area-normalized hull of an edge multiset.
std::vector<Vec2> normalized_edge_hull_boundary(const std::vector<LatticeVector>& edges,
                                                std::size_t min_points = 512);

// Boundary loop of the limit shape (area-normalized radial function).
std::vector<Vec2> shape_boundary(const RadialFunction& rf);

// Polygon boundary scaled by n^{-3/2}, translated to the minimal-x
// normalization and then area-normalized.
std::vector<Vec2> normalized_polygon_boundary(const LatticePolygon& polygon, int n,
                                              std::size_t min_points = 512);

// Limit polygon boundary under the same normalization.
std::vector<Vec2> normalized_limit_boundary(const LimitPolygon& lp);

// Human-readable fixed-width table of convergence records.
std::string convergence_table(const std::vector<ConvergenceRecord>& records);

}  // namespace latgon
