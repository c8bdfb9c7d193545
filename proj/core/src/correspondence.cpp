#include "sgh/correspondence.hpp"

#include <cmath>

namespace sgh {

double pair_distortion(double d_src, double d_tgt) {
  const double tol = 1e-12;
  if (d_src < -tol || d_src > kPi + tol || d_tgt < -tol || d_tgt > kPi + tol) {
    throw DomainError("pair_distortion: distances must lie in [0, pi]");
  }
  return std::fabs(d_src - d_tgt);
}

double wrap_angle(double a) {
  double w = std::fmod(a, 2 * kPi);
  if (w < 0) w += 2 * kPi;
  return w;
}

double circle_dist(double a, double b) { return std::fabs(std::remainder(a - b, 2 * kPi)); }

SpherePoint circle_point(double angle) {
  return unchecked_point({std::cos(angle), std::sin(angle)});
}

double circle_angle(const SpherePoint& p) {
  if (p.ambient() != 2) throw DimensionError("circle_angle: not an S^1 point");
  return wrap_angle(std::atan2(p[1], p[0]));
}

bool CircleArc::contains(double angle, double tol) const {
  return circle_dist(angle, center) <= half_length + tol;
}

std::pair<SpherePoint, SpherePoint> mirror_pair(const std::pair<SpherePoint, SpherePoint>& p) {
  return {-p.first, -p.second};
}

// --- EvenCorrespondence ----------------------------------------------------

EvenCorrespondence::EvenCorrespondence(int n)
    : n_(n), simplex_(RegularSimplex::build(2 * std::size_t(n) - 1).embedded(1)) {
  if (n < 1) throw Error("EvenCorrespondence: n >= 1 required");
}

double EvenCorrespondence::bound() const { return 2 * kPi * n_ / (2.0 * n_ + 1.0); }

double EvenCorrespondence::root_angle(int k) const { return 2 * kPi * k / (2.0 * n_ + 1.0); }

R2nFiber EvenCorrespondence::eval(const SpherePoint& x) const {
  if (x.ambient() != simplex_.vertex(0).ambient()) {
    throw DimensionError("EvenCorrespondence: point dimension mismatch");
  }
  if (x.last() < -1e-12) {
    throw DomainError("EvenCorrespondence: point below the upper hemisphere");
  }
  for (int i = 0; i < cells(); ++i) {
    if (geodesic_dist(x, simplex_.vertex(i)) < 1e-12) {
      return R2nFiber{R2nFiber::Kind::arc, 0.0, CircleArc{root_angle(i), kPi / (2.0 * n_ + 1.0)}};
    }
  }
  CellIndex cell = classify(x, simplex_);
  if (cell.boundary()) return R2nFiber{};
  return R2nFiber{R2nFiber::Kind::point, root_angle(int(*cell.index)), CircleArc{}};
}

R2nFiber EvenCorrespondence::eval_extended(const SpherePoint& x) const {
  if (x.last() >= 0) return eval(x);
  R2nFiber f = eval(-x);
  switch (f.kind) {
    case R2nFiber::Kind::point:
      f.angle = wrap_angle(f.angle + kPi);
      break;
    case R2nFiber::Kind::arc:
      f.arc.center = wrap_angle(f.arc.center + kPi);
      break;
    case R2nFiber::Kind::empty:
      break;
  }
  return f;
}

// --- OddMap ------------------------------------------------------------------

OddMap::OddMap(int n)
    : n_(n), simplex_(RegularSimplex::build(2 * std::size_t(n) - 1).embedded(1)) {
  if (n < 1) throw Error("OddMap: n >= 1 required");
}

double OddMap::bound() const { return 2 * kPi * n_ / (2.0 * n_ + 1.0); }
double OddMap::root_angle(int k) const { return 2 * kPi * k / (2.0 * n_ + 1.0); }
double OddMap::arc_step() const { return kPi / (2.0 * n_ + 1.0); }

std::optional<double> OddMap::try_eval(const SpherePoint& x) const {
  if (x.ambient() != simplex_.vertex(0).ambient() + 1) {
    throw DimensionError("OddMap: point dimension mismatch");
  }
  if (x.last() < -1e-12) {
    throw DomainError("OddMap: point below the upper hemisphere");
  }
  double equatorial = 0;
  for (std::size_t i = 0; i + 1 < x.ambient(); ++i) equatorial += x[i] * x[i];
  if (equatorial < 1e-24) return std::nullopt;  // pole
  PolarCoords pc = polar_decompose(x);
  const SpherePoint& p = pc.base;
  // Upper equatorial base: the cell's root. Lower: rotate from the negated
  // root by min(alpha, pi/(2n+1)).
  if (p.last() >= 0) {
    CellIndex cell = classify(p, simplex_);
    if (cell.boundary()) return std::nullopt;
    return root_angle(int(*cell.index));
  }
  CellIndex cell = classify(-p, simplex_);
  if (cell.boundary()) return std::nullopt;
  double adv = std::min(pc.alpha, arc_step());
  return wrap_angle(root_angle(int(*cell.index)) + kPi + adv);
}

double OddMap::eval(const SpherePoint& x) const {
  auto a = try_eval(x);
  if (!a) throw NotInDomainError("OddMap: pole, or base on a cell boundary");
  return *a;
}

std::optional<double> OddMap::try_eval_extended(const SpherePoint& x) const {
  if (x.last() >= 0) return try_eval(x);
  auto a = try_eval(-x);
  if (!a) return std::nullopt;
  return wrap_angle(*a + kPi);
}

std::optional<int> OddMap::image_interval(double angle, double tol) const {
  const int m = cells();
  double a = wrap_angle(angle);
  for (int k = 0; k < m; ++k) {
    double lo = kPi * (2 * k - 1) / double(m);
    double hi = 2 * kPi * k / double(m);
    double center = (lo + hi) / 2;
    double half = (hi - lo) / 2;
    if (circle_dist(a, center) <= half + tol) return k;
  }
  return std::nullopt;
}

// --- FnMap -------------------------------------------------------------------

FnMap::FnMap(int n) : n_(n), simplex_(RegularSimplex::build(std::size_t(n))) {
  if (n < 1) throw Error("FnMap: n >= 1 required");
}

double FnMap::bound() const { return zeta(std::size_t(n_)); }

double FnMap::blend(double colatitude) {
  double f = colatitude + 1 - kPi / 2;
  return f < 0 ? 0 : (f > 1 ? 1 : f);
}

CellIndex FnMap::cell_of(const SpherePoint& x) const {
  SpherePoint sigma = project_equator(x);
  return classify(sigma, simplex_);
}

std::optional<SpherePoint> FnMap::try_eval(const SpherePoint& x) const {
  if (x.ambient() != simplex_.vertex(0).ambient() + 1) {
    throw DimensionError("FnMap: point dimension mismatch");
  }
  if (x.last() < -1e-12) {
    throw DomainError("FnMap: point below the upper half");
  }
  double equatorial = 0;
  for (std::size_t i = 0; i + 1 < x.ambient(); ++i) equatorial += x[i] * x[i];
  if (equatorial < 1e-24) return std::nullopt;  // pole
  SpherePoint sigma = project_equator(x);
  CellIndex cell = classify(sigma, simplex_);
  if (cell.boundary()) return std::nullopt;
  double colat = std::acos(clamp_unit(x.last()));
  double f = blend(colat);
  if (f <= 0) return simplex_.vertex(*cell.index);
  if (f >= 1) return sigma;
  return interpolate(simplex_.vertex(*cell.index), sigma, 1 - f);
}

SpherePoint FnMap::eval(const SpherePoint& x) const {
  auto y = try_eval(x);
  if (!y) throw NotInDomainError("FnMap: pole or boundary base");
  return *y;
}

std::optional<SpherePoint> FnMap::try_eval_extended(const SpherePoint& x) const {
  if (x.last() >= 0) return try_eval(x);
  auto y = try_eval(-x);
  if (!y) return std::nullopt;
  return -*y;
}

}  // namespace sgh
