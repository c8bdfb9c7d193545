#include "sgh/triangle.hpp"

#include <algorithm>
#include <cmath>

namespace sgh {

TriangleSides::TriangleSides(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
  const double tol = 1e-12;
  for (double s : {a, b, c}) {
    if (!(s >= -tol && s <= kPi + tol)) {
      throw Error("TriangleSides: side outside [0, pi]");
    }
  }
  if (a > b + c + tol || b > a + c + tol || c > a + b + tol) {
    throw Error("TriangleSides: triangle inequality violated");
  }
}

double triangle_third_side(double b, double c, double angle_a) {
  if (!(b > 0 && b < kPi && c > 0 && c < kPi)) {
    throw DomainError("triangle_third_side: b, c must be in (0, pi)");
  }
  if (!(angle_a >= 0 && angle_a <= kPi)) {
    throw DomainError("triangle_third_side: angle outside [0, pi]");
  }
  double t = std::cos(b) * std::cos(c) + std::sin(b) * std::sin(c) * std::cos(angle_a);
  return std::acos(clamp_unit(t));
}

double max_dist_to_geodesic(const TriangleSides& t) {
  double s1 = std::sin(t.a);
  if (std::fabs(s1) < 1e-12) {
    throw SingularityError("max_dist_to_geodesic: sin(a) = 0");
  }
  double cb = std::cos(t.b), cc = std::cos(t.c), ca = std::cos(t.a);
  double rad = cb * cb + cc * cc - 2 * ca * cb * cc;
  if (rad < 0) rad = 0;  // analytic minimum is (|cb|-|cc|)^2 >= 0
  return std::acos(clamp_unit(-std::sqrt(rad) / s1));
}

double max_dist_to_segment(const TriangleSides& t) {
  if (t.a + t.b + t.c >= 2 * kPi) return kPi;
  double lo = std::min(t.b, t.c);
  double hi = std::max(t.b, t.c);
  if (lo + hi <= kPi) return hi;
  // Far-endpoint angle acute: the maximum over the segment sits at the
  // endpoint at distance hi; otherwise it is the interior geodesic maximum.
  // cos(angle) >= 0 iff cos(lo) >= cos(hi) cos(a); cos(hi) < 0 here.
  if (std::cos(t.a) >= std::cos(lo) / std::cos(hi)) return hi;
  return max_dist_to_geodesic(t);
}

}  // namespace sgh
