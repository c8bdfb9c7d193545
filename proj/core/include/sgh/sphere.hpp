#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sgh/errors.hpp"

namespace sgh {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline double clamp_unit(double t) { return t < -1.0 ? -1.0 : (t > 1.0 ? 1.0 : t); }

/// A point of the geodesic n-sphere, stored as a unit vector in R^{n+1}.
/// Coordinates are renormalized on construction; norms outside [0.9, 1.1]
/// indicate a bug upstream and are rejected.
class SpherePoint {
 public:
  explicit SpherePoint(std::vector<double> coords);

  /// k-th standard basis vector of R^{dim+1}, as a point of S^dim.
  static SpherePoint axis(std::size_t dim, std::size_t k);

  std::size_t dim() const { return coords_.size() - 1; }
  std::size_t ambient() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  double last() const { return coords_.back(); }
  std::span<const double> coords() const { return coords_; }

  SpherePoint operator-() const;

  /// Equatorial embedding into S^{dim+extra_zeros} (zeros appended).
  SpherePoint embedded(std::size_t extra_zeros) const;

 private:
  struct Unchecked {};
  SpherePoint(Unchecked, std::vector<double> coords) : coords_(std::move(coords)) {}

  std::vector<double> coords_;

  friend SpherePoint unchecked_point(std::vector<double>);
};

/// Internal fast path: caller guarantees the coordinates are unit norm.
SpherePoint unchecked_point(std::vector<double> coords);

double dot(const SpherePoint& x, const SpherePoint& y);

/// arccos of the clamped inner product; values in [0, pi].
double geodesic_dist(const SpherePoint& x, const SpherePoint& y);

/// The point z on the geodesic [x, y] with d(z, y) = lambda * d(x, y).
/// lambda = 1 gives x, lambda = 0 gives y. Antipodal inputs are rejected.
SpherePoint interpolate(const SpherePoint& x, const SpherePoint& y, double lambda);

/// Nearest point of the equatorial S^{n-1}: drop the last coordinate and
/// renormalize. Undefined at the poles.
SpherePoint project_equator(const SpherePoint& x);

struct PolarCoords {
  SpherePoint base;  // nearest point of the equatorial sphere
  double alpha;      // geodesic distance to the equator, in [0, pi/2]

  /// Distance to the north pole; the other latitude convention.
  double colatitude() const { return kPi / 2 - alpha; }

  /// Reconstruct the ambient point (cos(alpha) * base, sin(alpha)).
  SpherePoint point() const;
};

/// Decompose a point of the closed upper hemisphere (not the pole).
PolarCoords polar_decompose(const SpherePoint& x);

/// Build the ambient point of S^{base.dim()+1} at equatorial distance alpha
/// above `base`.
SpherePoint from_polar(const SpherePoint& base, double alpha);

}  // namespace sgh
