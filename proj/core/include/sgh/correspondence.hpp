#pragma once

#include <optional>
#include <utility>

#include "sgh/simplex.hpp"
#include "sgh/sphere.hpp"

namespace sgh {

/// |d_src - d_tgt| for distances in [0, pi].
double pair_distortion(double d_src, double d_tgt);

// --- circle helpers ------------------------------------------------------
// Points of S^1 are SpherePoints of dimension 1; arcs and interval tests go
// through angles normalized to [0, 2*pi).

double wrap_angle(double a);                       // into [0, 2*pi)
double circle_dist(double a, double b);            // geodesic distance of angles
SpherePoint circle_point(double angle);            // (cos a, sin a)
double circle_angle(const SpherePoint& p);         // inverse, in [0, 2*pi)

struct CircleArc {
  double center;       // angle
  double half_length;  // radians
  bool contains(double angle, double tol = 0.0) const;
};

/// Antipodal mirror of a source/target pair; appending mirrored pairs to a
/// relation never changes its distortion, which is what extends the maps
/// below from a hemisphere to the whole sphere.
std::pair<SpherePoint, SpherePoint> mirror_pair(const std::pair<SpherePoint, SpherePoint>& p);

// --- S^{2n} <-> S^1 relation ---------------------------------------------

/// Fiber of the even relation at a source point: a single root of unity for
/// cell interiors, the whole Voronoi arc for a simplex vertex, empty on cell
/// boundaries.
struct R2nFiber {
  enum class Kind { point, arc, empty };
  Kind kind = Kind::empty;
  double angle = 0;  // kind == point
  CircleArc arc{};   // kind == arc
};

/// Relation between the closed upper hemisphere of S^{2n} and S^1 built from
/// the Voronoi cells of a regular simplex inscribed in the equatorial
/// S^{2n-1} and the (2n+1)-th roots of unity. Distortion bound 2*pi*n/(2n+1).
class EvenCorrespondence {
 public:
  explicit EvenCorrespondence(int n);

  int n() const { return n_; }
  int cells() const { return 2 * n_ + 1; }
  double bound() const;                       // 2*pi*n/(2n+1)
  double root_angle(int k) const;             // 2*pi*k/(2n+1)
  const RegularSimplex& simplex() const { return simplex_; }

  R2nFiber eval(const SpherePoint& x) const;           // x in the upper hemisphere
  R2nFiber eval_extended(const SpherePoint& x) const;  // whole sphere via mirror

 private:
  int n_;
  RegularSimplex simplex_;  // inscribed in S^{2n-1}, embedded equatorially
};

// --- S^{2n+1} <-> S^1 map --------------------------------------------------

/// Map from a dense subset of the upper hemisphere of S^{2n+1} to S^1.
/// A point decomposes as (p, alpha) with p its nearest equatorial point and
/// alpha the distance to the equator. Bases in an upper cell map to the
/// cell's root of unity; bases in a mirrored lower cell rotate away from the
/// negated root by min(alpha, pi/(2n+1)). The image is the union of 2n+1
/// closed arcs of length pi/(2n+1). Distortion bound 2*pi*n/(2n+1).
class OddMap {
 public:
  explicit OddMap(int n);

  int n() const { return n_; }
  int cells() const { return 2 * n_ + 1; }
  double bound() const;
  double root_angle(int k) const;
  double arc_step() const;  // pi/(2n+1)
  const RegularSimplex& simplex() const { return simplex_; }

  std::optional<double> try_eval(const SpherePoint& x) const;  // angle, or rejection
  double eval(const SpherePoint& x) const;                     // throws NotInDomainError
  std::optional<double> try_eval_extended(const SpherePoint& x) const;

  /// Index of the image interval containing the angle, if any.
  std::optional<int> image_interval(double angle, double tol = 1e-12) const;

 private:
  int n_;
  RegularSimplex simplex_;  // inscribed in S^{2n-1}, embedded into S^{2n}
};

// --- S^{n+1} -> S^n map -----------------------------------------------------

/// Surjection from the upper half of S^{n+1} onto S^n: snap to the nearest
/// simplex vertex near the pole, equatorial projection at the equator, and a
/// geodesic interpolation between the two in the band in between, with blend
/// weight f(t) = max(0, t + 1 - pi/2) of the colatitude t.
class FnMap {
 public:
  explicit FnMap(int n);

  int n() const { return n_; }
  double bound() const;  // zeta(n), the target distortion
  const RegularSimplex& simplex() const { return simplex_; }

  static double blend(double colatitude);  // f(t) = max(0, t + 1 - pi/2)

  std::optional<SpherePoint> try_eval(const SpherePoint& x) const;
  SpherePoint eval(const SpherePoint& x) const;
  std::optional<SpherePoint> try_eval_extended(const SpherePoint& x) const;

  /// Cell of the equatorial projection, boundary when rejected.
  CellIndex cell_of(const SpherePoint& x) const;

 private:
  int n_;
  RegularSimplex simplex_;  // inscribed in S^n
};

}  // namespace sgh
