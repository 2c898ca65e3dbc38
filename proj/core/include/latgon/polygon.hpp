#pragma once

#include <vector>

#include "latgon/vec2.hpp"

namespace latgon {

// Utilities on real-valued polygons given as plain vertex lists.
// Anticlockwise orientation is assumed where orientation matters.

double polygon_signed_area(const std::vector<Vec2>& poly);
double polygon_area(const std::vector<Vec2>& poly);
double polygon_perimeter(const std::vector<Vec2>& poly);
Vec2 polygon_centroid(const std::vector<Vec2>& poly);
double polygon_diameter(const std::vector<Vec2>& poly);

bool polygon_is_convex_ccw(const std::vector<Vec2>& poly, double eps = 1e-12);

// Closed-polygon membership with a small absolute slack: points within
// `eps` of the boundary count as inside. Convex anticlockwise input.
bool point_in_convex_polygon(const std::vector<Vec2>& poly, Vec2 p, double eps = 1e-9);

// Monotone-chain convex hull; collinear points are dropped. Returns the hull
// anticlockwise.
std::vector<Vec2> convex_hull(std::vector<Vec2> points);

// Resample the closed polygon boundary to at least `min_points` points,
// distributing samples along edges proportionally to edge length. Vertices
// are always included.
std::vector<Vec2> sample_polygon_boundary(const std::vector<Vec2>& poly, std::size_t min_points);

}  // namespace latgon
