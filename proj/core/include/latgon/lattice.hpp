#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "latgon/vec2.hpp"

namespace latgon {

// Exact integer vector. All combinatorial decisions (slope order, convexity)
// are made with integer arithmetic; floating point never breaks ties.
struct LatticeVector {
    std::int64_t x = 0;
    std::int64_t y = 0;

    constexpr bool operator==(const LatticeVector&) const = default;

    constexpr LatticeVector operator+(LatticeVector r) const { return {x + r.x, y + r.y}; }
    constexpr LatticeVector operator-(LatticeVector r) const { return {x - r.x, y - r.y}; }
    constexpr LatticeVector operator-() const { return {-x, -y}; }
    constexpr bool is_zero() const { return x == 0 && y == 0; }

    Vec2 to_vec2() const { return {static_cast<double>(x), static_cast<double>(y)}; }
};

inline __int128 icross(LatticeVector a, LatticeVector b) {
    return static_cast<__int128>(a.x) * b.y - static_cast<__int128>(a.y) * b.x;
}
inline __int128 idot(LatticeVector a, LatticeVector b) {
    return static_cast<__int128>(a.x) * b.x + static_cast<__int128>(a.y) * b.y;
}
inline __int128 norm_sq(LatticeVector a) { return idot(a, a); }

// gcd(|x|, |y|) == 1. The four unit vectors are primitive; zero is not.
bool is_primitive(LatticeVector v);

// Same direction: parallel and pointing the same way (positive multiples).
bool same_direction(LatticeVector a, LatticeVector b);

// Strict weak order by anticlockwise angle starting from angle 0 inclusive;
// equal directions are ordered by increasing Euclidean norm.
struct SlopeLess {
    bool operator()(LatticeVector a, LatticeVector b) const;
};

// Anticlockwise angular sort from angle 0, exact integer comparator.
std::vector<LatticeVector> slope_order(std::vector<LatticeVector> vectors);

// Convex lattice polygon, vertices anticlockwise, edges strictly convex
// (consecutive cross products > 0). The vertex list is rotated on
// construction so that the first outgoing edge is the slope-order minimum;
// edges then appear in increasing-slope order.
class LatticePolygon {
public:
    explicit LatticePolygon(std::vector<LatticeVector> vertices);

    const std::vector<LatticeVector>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }

    // Edge multiset: consecutive vertex differences, closing edge included.
    std::vector<LatticeVector> edges() const;

    // Twice the (positive) area.
    std::int64_t doubled_area() const;

    bool operator==(const LatticePolygon&) const = default;

private:
    std::vector<LatticeVector> vertices_;
};

// Rebuild the unique (up to translation) convex polygon whose edge multiset
// is `vectors`: sort by increasing slope and chain partial sums from the
// origin. Parallel same-direction vectors are merged by summation first
// (the count of such merges is reported through `merges` when non-null).
//
// Throws NonZeroSum if the vectors do not sum to zero, EmptyEdgeSet if fewer
// than three directions remain after merging.
LatticePolygon increasing_slope_construct(std::vector<LatticeVector> vectors,
                                          int* merges = nullptr);

// Exact count plus the reference value and error bound it should stay
// within: |count - reference| <= bound whenever the region's Euclidean
// perimeter exceeds 3.
struct CountEstimate {
    std::int64_t count = 0;
    double reference = 0.0;  // Area (lattice) or (6/pi^2) * Area (primitive)
    double bound = 0.0;      // 2L (lattice) or 3 L ln L (primitive)
};

// Exact scanline count of lattice points in a convex region given as a real
// polygon (boundary inclusive up to a small absolute slack).
CountEstimate count_lattice_points(const std::vector<Vec2>& region);

// Same, restricted to primitive vectors.
CountEstimate count_primitive_points(const std::vector<Vec2>& region);

enum class PointSet { lattice, primitive };

struct HomogeneousSum {
    double sum = 0.0;        // sum of f over the chosen point set
    double reference = 0.0;  // integral of f (lattice) or (6/pi^2) * integral (primitive)
    double bound = 0.0;      // 2 M L (lattice) or 3 M L ln L (primitive)
};

// Sum of a positively 1-homogeneous f over the lattice or primitive points
// of the region, with the comparison integral (sector-reduced, per-edge
// Gauss-Legendre) and the error bound. Homogeneity is spot-checked on random
// rays; a violation throws ValidationError.
HomogeneousSum homogeneous_sum(PointSet set, const std::vector<Vec2>& region,
                               const std::function<double(Vec2)>& f);

// All primitive vectors inside the region, which must be contained in the
// disk of radius `radius_bound`. Deterministic order: by angle, then norm.
// Throws ValidationError for radius_bound > 1e6 (memory guard).
std::vector<LatticeVector> primitive_vectors_in(const std::function<bool(Vec2)>& region,
                                                double radius_bound);

}  // namespace latgon
