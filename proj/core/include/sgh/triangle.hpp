#pragma once

#include "sgh/sphere.hpp"

namespace sgh {

/// Side lengths of a spherical triangle. `a` is the side joining the two
/// far vertices (the geodesic/segment side); `b` and `c` are the distances
/// from the opposite vertex to its endpoints.
struct TriangleSides {
  double a, b, c;
  TriangleSides(double a, double b, double c);
};

/// Spherical cosine rule: the side opposite the angle `angle_a` enclosed by
/// sides of length b and c.
double triangle_third_side(double b, double c, double angle_a);

/// Maximum distance from the opposite vertex to any point of the full great
/// circle through the two far vertices.
double max_dist_to_geodesic(const TriangleSides& t);

/// Maximum distance from the opposite vertex to the closed segment between
/// the two far vertices. Sides are treated as upper bounds: the returned
/// value is the maximum over all triangles with sides up to (a, b, c).
/// Returns pi when a + b + c >= 2*pi (the antipode may lie on the segment).
double max_dist_to_segment(const TriangleSides& t);

}  // namespace sgh
