#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sgh/sphere.hpp"

namespace sgh {

/// Mutual geodesic distance of the n+2 vertices of a regular simplex
/// inscribed in S^n: arccos(-1/(n+1)).
double zeta(std::size_t n);

/// Geodesic diameter of a Voronoi cell of the inscribed regular simplex.
/// arccos(-(n+1)/(n+3)) for odd n, arccos(-sqrt(n/(n+4))) for even n.
double eta(std::size_t n);

/// The n+2 vertices of a regular simplex inscribed in S^n, with pairwise
/// inner products -1/(n+1) and zero vertex sum.
///
/// Canonical construction: center and normalize the standard basis of
/// R^{n+2}, then map isometrically into R^{n+1} through the orthonormal
/// basis of the sum-zero hyperplane obtained by Gram-Schmidt on the
/// difference basis e_1-e_2, ..., e_{n+1}-e_{n+2} (the Helmert basis).
/// Deterministic across runs and platforms.
class RegularSimplex {
 public:
  static RegularSimplex build(std::size_t n);

  std::size_t dim() const { return n_; }
  std::size_t count() const { return vertices_.size(); }
  const std::vector<SpherePoint>& vertices() const { return vertices_; }
  const SpherePoint& vertex(std::size_t i) const { return vertices_[i]; }

  /// Equatorial embedding of every vertex into S^{n+extra_zeros}.
  RegularSimplex embedded(std::size_t extra_zeros) const;

 private:
  RegularSimplex(std::size_t n, std::vector<SpherePoint> v) : n_(n), vertices_(std::move(v)) {}
  std::size_t n_;
  std::vector<SpherePoint> vertices_;
};

/// Nearest-vertex cell of a point, or boundary when the two smallest vertex
/// distances are within the tie tolerance. Cells are open.
struct CellIndex {
  std::optional<std::size_t> index;
  bool boundary() const { return !index.has_value(); }
};

CellIndex classify(const SpherePoint& x, const RegularSimplex& s, double tie_tol = 1e-9);

/// Diameter after coning: coning caps the diameter below by pi/2 and
/// otherwise preserves it.
double cone_diameter(double base_diameter, std::size_t coning_steps);

/// Voronoi cell diameter of the S^n simplex after `coned` coning steps.
double cell_diameter_bound(std::size_t n, std::size_t coned);

}  // namespace sgh
