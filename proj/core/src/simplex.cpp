#include "sgh/simplex.hpp"

#include <algorithm>
#include <cmath>

namespace sgh {

double zeta(std::size_t n) {
  if (n < 1) throw Error("zeta: n >= 1 required");
  return std::acos(-1.0 / (double(n) + 1.0));
}

double eta(std::size_t n) {
  if (n < 1) throw Error("eta: n >= 1 required");
  double dn = double(n);
  if (n % 2 == 1) return std::acos(-(dn + 1) / (dn + 3));
  return std::acos(-std::sqrt(dn / (dn + 4)));
}

RegularSimplex RegularSimplex::build(std::size_t n) {
  if (n < 1) throw Error("RegularSimplex: n >= 1 unsupported below 1");
  const std::size_t m = n + 2;
  // Helmert basis b_k of the sum-zero hyperplane of R^m:
  //   b_k[i] = 1/sqrt((k+1)(k+2)) for i <= k,  -(k+1)/sqrt((k+1)(k+2)) at i = k+1.
  // Vertex i is (e_i - centroid)/s expressed in that basis, s^2 = (n+1)/(n+2):
  // coordinate k of vertex i is b_k[i]/s.
  const double scale = std::sqrt(double(m) / (double(m) - 1.0));
  std::vector<SpherePoint> verts;
  verts.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> c(n + 1, 0.0);
    for (std::size_t k = 0; k < n + 1; ++k) {
      double denom = std::sqrt(double(k + 1) * double(k + 2));
      double bki;
      if (i <= k) {
        bki = 1.0 / denom;
      } else if (i == k + 1) {
        bki = -double(k + 1) / denom;
      } else {
        bki = 0.0;
      }
      c[k] = bki * scale;
    }
    verts.push_back(SpherePoint(std::move(c)));
  }
  return RegularSimplex(n, std::move(verts));
}

RegularSimplex RegularSimplex::embedded(std::size_t extra_zeros) const {
  std::vector<SpherePoint> v;
  v.reserve(vertices_.size());
  for (const auto& p : vertices_) v.push_back(p.embedded(extra_zeros));
  return RegularSimplex(n_ + extra_zeros, std::move(v));
}

CellIndex classify(const SpherePoint& x, const RegularSimplex& s, double tie_tol) {
  if (x.ambient() != s.vertex(0).ambient()) {
    throw DimensionError("classify: point and simplex ambient dimensions differ");
  }
  std::size_t best = 0, second = 1;
  double d_best = geodesic_dist(x, s.vertex(0));
  double d_second = geodesic_dist(x, s.vertex(1));
  if (d_second < d_best) {
    std::swap(best, second);
    std::swap(d_best, d_second);
  }
  for (std::size_t i = 2; i < s.count(); ++i) {
    double d = geodesic_dist(x, s.vertex(i));
    if (d < d_best) {
      second = best;
      d_second = d_best;
      best = i;
      d_best = d;
    } else if (d < d_second) {
      second = i;
      d_second = d;
    }
  }
  if (d_second - d_best < tie_tol) return CellIndex{std::nullopt};
  return CellIndex{best};
}

double cone_diameter(double base_diameter, std::size_t coning_steps) {
  if (coning_steps == 0) return base_diameter;
  return std::max(kPi / 2, base_diameter);
}

double cell_diameter_bound(std::size_t n, std::size_t coned) {
  return cone_diameter(eta(n), coned);
}

}  // namespace sgh
