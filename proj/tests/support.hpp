#pragma once

// Test-side oracles, independent of the library code paths they check.

#include <cmath>
#include <vector>

#include "sgh/rng.hpp"
#include "sgh/simplex.hpp"
#include "sgh/sphere.hpp"
#include "sgh/triangle.hpp"

namespace sgh_test {

using sgh::kPi;

// Deterministic realization of a spherical triangle in S^2: v at the north
// pole, w on the y=0 meridian, u solved from the cosine rule with positive
// second coordinate. Sides: a = d(v,w), b = d(u,w), c = d(u,v).
struct Realized {
  sgh::SpherePoint u, v, w;
};

inline Realized realize_triangle(const sgh::TriangleSides& t) {
  auto v = sgh::unchecked_point({0, 0, 1});
  auto w = sgh::unchecked_point({std::sin(t.a), 0, std::cos(t.a)});
  double cos_phi = 1.0;
  if (std::sin(t.a) * std::sin(t.c) > 1e-15) {
    cos_phi = (std::cos(t.b) - std::cos(t.a) * std::cos(t.c)) / (std::sin(t.a) * std::sin(t.c));
  }
  cos_phi = sgh::clamp_unit(cos_phi);
  double sin_phi = std::sqrt(std::max(0.0, 1 - cos_phi * cos_phi));
  auto u = sgh::unchecked_point(
      {std::sin(t.c) * cos_phi, std::sin(t.c) * sin_phi, std::cos(t.c)});
  return Realized{u, v, w};
}

// Brute-force maximum distance from u to the great circle through v, w of the
// realization above (the y = 0 circle), sampled at `steps` points.
inline double brute_force_geodesic_max(const sgh::TriangleSides& t, std::size_t steps) {
  Realized r = realize_triangle(t);
  double ux = r.u[0], uz = r.u[2];
  double best = 0;
  for (std::size_t i = 0; i < steps; ++i) {
    double s = 2 * kPi * double(i) / double(steps);
    double d = std::acos(sgh::clamp_unit(ux * std::sin(s) + uz * std::cos(s)));
    if (d > best) best = d;
  }
  return best;
}

// Same, over the closed segment from v to w only (endpoints included).
inline double brute_force_segment_max(const sgh::TriangleSides& t, std::size_t steps) {
  Realized r = realize_triangle(t);
  double ux = r.u[0], uz = r.u[2];
  double best = 0;
  for (std::size_t i = 0; i <= steps; ++i) {
    double s = t.a * double(i) / double(steps);
    double d = std::acos(sgh::clamp_unit(ux * std::sin(s) + uz * std::cos(s)));
    if (d > best) best = d;
  }
  return best;
}

// Feasible random triangle: realize two random sides through an actual
// configuration so the triangle inequalities hold by construction.
inline sgh::TriangleSides random_triangle(sgh::SplitMix64& g) {
  for (;;) {
    double a = sgh::uniform_in(g, 0.3, kPi - 0.3);
    sgh::SpherePoint u = sgh::draw_sphere_point(g, 2);
    auto v = sgh::unchecked_point({0, 0, 1});
    auto w = sgh::unchecked_point({std::sin(a), 0, std::cos(a)});
    double b = sgh::geodesic_dist(u, w);
    double c = sgh::geodesic_dist(u, v);
    if (b > 0.05 && b < kPi - 0.05 && c > 0.05 && c < kPi - 0.05) {
      return sgh::TriangleSides(a, b, c);
    }
  }
}

// Two points at colatitude x/2 from the pole with azimuth separation kappa,
// realized in S^4; the geometric route to the source-distance lower bound.
inline double two_point_oracle(double x, double kappa) {
  double colat = x / 2;
  auto u = sgh::unchecked_point(
      {std::sin(colat), 0, 0, 0, std::cos(colat)});
  auto v = sgh::unchecked_point({std::sin(colat) * std::cos(kappa),
                                 std::sin(colat) * std::sin(kappa), 0, 0, std::cos(colat)});
  return sgh::geodesic_dist(u, v);
}

// Rejection-sample a point of S^dim whose nearest simplex vertex is `cell`.
inline sgh::SpherePoint sample_in_cell(sgh::SplitMix64& g, const sgh::RegularSimplex& s,
                                       std::size_t cell) {
  for (;;) {
    sgh::SpherePoint x = sgh::draw_sphere_point(g, s.vertex(0).dim());
    auto c = sgh::classify(x, s);
    if (!c.boundary() && *c.index == cell) return x;
  }
}

}  // namespace sgh_test
