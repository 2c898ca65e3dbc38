#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "latgon/body.hpp"
#include "latgon/lattice.hpp"

namespace latgon {

enum class Method { exact, greedy, shape_guided };

std::string method_name(Method m);

struct MinimizerResult {
    LatticePolygon polygon;
    double perimeter = 0.0;  // anticlockwise D-perimeter
    int n = 0;               // vertex count
    Method method = Method::greedy;
    // Closing edge z0 = -sum(z_i) of the greedy / shape-guided construction,
    // when one was needed.
    std::optional<LatticeVector> special_edge;
    // Edges of the final polygon that are not among the collected primitive
    // vectors: the special edge and/or the closure created by trimming.
    std::vector<LatticeVector> synthetic_edges;
    // False when a search budget ran out before optimality was proved.
    bool certified = true;
};

// Anticlockwise D-perimeter: sum of gauge norms of the edges. For asymmetric
// bodies this differs from the clockwise traversal; only the anticlockwise
// value is computed.
double perimeter(const LatticePolygon& polygon, const ConvexBody& body);

// The n shortest primitive vectors in D-norm. Ties broken by
// (norm, angle, Euclidean norm) for determinism.
std::vector<LatticeVector> shortest_primitive_vectors(const ConvexBody& body, int n);

// Greedy construction: n shortest primitive vectors plus the closing vector,
// increasing-slope construction, then trim to n vertices keeping both
// endpoints of the special edge.
MinimizerResult greedy_polygon(const ConvexBody& body, int n);

// Shape-guided construction: the primitive vectors of lambda * shape for the
// minimal lambda containing at least n of them, closed and trimmed the same
// way. `shape` must have unit area and centroid at the origin (tolerance
// 1e-6); otherwise InfeasibleShape is thrown.
MinimizerResult shape_guided_polygon(const ConvexBody& body, const RadialFunction& shape,
                                     int n);

struct ExactOptions {
    std::int64_t node_budget = 50'000'000;
    std::size_t max_candidates = 100'000;
};

// Certified global minimum of the D-perimeter over convex lattice n-gons,
// 3 <= n <= 10, by branch and bound over zero-sum subsets of primitive
// candidate vectors. Among ties the lexicographically smallest slope-sorted
// edge list is returned. If the node budget runs out the best incumbent is
// returned with certified = false; BudgetExceeded is thrown only when no
// feasible polygon was found at all.
MinimizerResult exact_minimizer(const ConvexBody& body, int n, ExactOptions options = {});

// Exchange-optimality certificate: for every pair a, b of edges with
// a != +-b and every two distinct primitive non-edge points x, y of the
// parallelogram {0, a, b, a+b} with x + y inside it, replacing {a, b} by
// {x, y, a+b-x-y} must not strictly shorten the polygon. Every perimeter
// minimizer passes; for strictly convex bodies no such x, y exist at all.
// Membership decisions are exact integer arithmetic.
bool edge_exchange_certificate(const LatticePolygon& polygon, const ConvexBody& body);

}  // namespace latgon
