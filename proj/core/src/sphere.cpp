#include "sgh/sphere.hpp"

#include <cmath>

namespace sgh {

namespace {

double norm2(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return s;
}

}  // namespace

SpherePoint::SpherePoint(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) {
    throw DimensionError("SpherePoint needs at least 2 coordinates (dim >= 1)");
  }
  double n = std::sqrt(norm2(coords_));
  if (!(n >= 0.9 && n <= 1.1)) {
    throw DimensionError("SpherePoint norm " + std::to_string(n) + " outside [0.9, 1.1]");
  }
  for (double& x : coords_) x /= n;
}

SpherePoint SpherePoint::axis(std::size_t dim, std::size_t k) {
  if (dim < 1 || k > dim) throw DimensionError("axis index out of range");
  std::vector<double> c(dim + 1, 0.0);
  c[k] = 1.0;
  return SpherePoint(Unchecked{}, std::move(c));
}

SpherePoint SpherePoint::operator-() const {
  std::vector<double> c(coords_);
  for (double& x : c) x = -x;
  return SpherePoint(Unchecked{}, std::move(c));
}

SpherePoint SpherePoint::embedded(std::size_t extra_zeros) const {
  std::vector<double> c(coords_);
  c.resize(c.size() + extra_zeros, 0.0);
  return SpherePoint(Unchecked{}, std::move(c));
}

SpherePoint unchecked_point(std::vector<double> coords) {
  return SpherePoint(SpherePoint::Unchecked{}, std::move(coords));
}

double dot(const SpherePoint& x, const SpherePoint& y) {
  if (x.ambient() != y.ambient()) {
    throw DimensionError("dot: ambient dimensions differ");
  }
  double s = 0;
  for (std::size_t i = 0; i < x.ambient(); ++i) s += x[i] * y[i];
  return s;
}

double geodesic_dist(const SpherePoint& x, const SpherePoint& y) {
  return std::acos(clamp_unit(dot(x, y)));
}

SpherePoint interpolate(const SpherePoint& x, const SpherePoint& y, double lambda) {
  if (x.ambient() != y.ambient()) {
    throw DimensionError("interpolate: ambient dimensions differ");
  }
  if (lambda < -1e-12 || lambda > 1 + 1e-12) {
    throw Error("interpolate: lambda outside [0, 1]");
  }
  lambda = lambda < 0 ? 0 : (lambda > 1 ? 1 : lambda);
  double t = clamp_unit(dot(x, y));
  if (t <= -1 + 1e-12) {
    throw DegenerateGeodesicError("interpolate: antipodal endpoints");
  }
  double theta = std::acos(t);
  if (theta < 1e-15) return x;
  double s = std::sin(theta);
  double wx = std::sin(lambda * theta) / s;
  double wy = std::sin((1 - lambda) * theta) / s;
  std::vector<double> c(x.ambient());
  double n2 = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = wx * x[i] + wy * y[i];
    n2 += c[i] * c[i];
  }
  double n = std::sqrt(n2);
  for (double& v : c) v /= n;
  return unchecked_point(std::move(c));
}

SpherePoint project_equator(const SpherePoint& x) {
  if (x.ambient() < 3) {
    throw DimensionError("project_equator: needs dim >= 2");
  }
  std::vector<double> c(x.coords().begin(), x.coords().end() - 1);
  double n = std::sqrt([&] {
    double s = 0;
    for (double v : c) s += v * v;
    return s;
  }());
  if (n < 1e-12) {
    throw PoleError("project_equator: point is a pole");
  }
  for (double& v : c) v /= n;
  return unchecked_point(std::move(c));
}

SpherePoint PolarCoords::point() const { return from_polar(base, alpha); }

PolarCoords polar_decompose(const SpherePoint& x) {
  double h = x.last();
  if (h < -1e-12) {
    throw DomainError("polar_decompose: point is in the open southern hemisphere");
  }
  SpherePoint base = project_equator(x);  // throws PoleError at the pole
  double alpha = std::asin(clamp_unit(h < 0 ? 0.0 : h));
  return PolarCoords{std::move(base), alpha};
}

SpherePoint from_polar(const SpherePoint& base, double alpha) {
  if (alpha < -1e-12 || alpha > kPi / 2 + 1e-12) {
    throw DomainError("from_polar: alpha outside [0, pi/2]");
  }
  double ca = std::cos(alpha), sa = std::sin(alpha);
  std::vector<double> c(base.ambient() + 1);
  for (std::size_t i = 0; i < base.ambient(); ++i) c[i] = ca * base[i];
  c.back() = sa;
  return unchecked_point(std::move(c));
}

}  // namespace sgh
