#include <doctest.h>

#include <cmath>

#include "sgh/triangle.hpp"
#include "support.hpp"

using namespace sgh;
using sgh_test::brute_force_geodesic_max;
using sgh_test::brute_force_segment_max;
using sgh_test::random_triangle;

TEST_CASE("TriangleSides validates ranges and inequalities") {
  CHECK_NOTHROW(TriangleSides(1.0, 2.0, 2.2));
  CHECK_THROWS_AS(TriangleSides(3.0, 1.0, 1.0), Error);
  CHECK_THROWS_AS(TriangleSides(-0.1, 1.0, 1.0), Error);
  CHECK_THROWS_AS(TriangleSides(1.0, 4.0, 1.0), Error);
}

TEST_CASE("triangle_third_side examples") {
  CHECK(triangle_third_side(kPi / 2, kPi / 2, kPi / 2) == doctest::Approx(kPi / 2).epsilon(1e-14));
  CHECK(triangle_third_side(1.1, 0.4, 0.0) == doctest::Approx(0.7).epsilon(1e-12));

  // Both legs (pi-1)/2 with cos(angle) = -1/(n+1) at n = 7.
  double leg = (kPi - 1) / 2;
  double angle = std::acos(-1.0 / 8.0);
  long double cl = std::cos((long double)leg);
  long double sl = std::sin((long double)leg);
  double expected = double(std::acos(cl * cl - sl * sl / 8.0L));
  CHECK(triangle_third_side(leg, leg, angle) == doctest::Approx(expected).epsilon(1e-13));
  CHECK(expected == doctest::Approx(1.4368).epsilon(1e-4));

  CHECK_THROWS_AS(triangle_third_side(0.0, 1.0, 1.0), DomainError);
}

TEST_CASE("max_dist_to_geodesic examples and oracle") {
  CHECK(max_dist_to_geodesic(TriangleSides(kPi / 2, kPi / 2, kPi / 2)) ==
        doctest::Approx(kPi / 2).epsilon(1e-14));

  // Isosceles apex distances are attained on the segment; the full geodesic
  // maximum can only be larger.
  TriangleSides iso(1.0, 1.9, 1.9);
  CHECK(max_dist_to_geodesic(iso) >= 1.9 - 1e-12);

  TriangleSides t(1.0, 2.0, 2.2);
  CHECK(std::fabs(max_dist_to_geodesic(t) - brute_force_geodesic_max(t, 1000000)) <= 1e-5);

  CHECK_THROWS_AS(max_dist_to_geodesic(TriangleSides(0.0, 1.0, 1.0)), SingularityError);
}

TEST_CASE("max_dist_to_segment branch cases") {
  // Far distance below the right angle threshold: the bound is just b.
  CHECK(max_dist_to_segment(TriangleSides(0.5, 1.0, 1.2)) == doctest::Approx(1.2)); // lo+hi < pi
  // Side sum past a full circle: the antipode may lie on the segment.
  CHECK(max_dist_to_segment(TriangleSides(2.2, 2.1, 2.1)) == kPi);

  TriangleSides t(1.2, 2.0, 2.4);
  CHECK(std::fabs(max_dist_to_segment(t) - brute_force_segment_max(t, 1000000)) <= 1e-5);
}

TEST_CASE("max distance formulas match brute force on random triangles") {
  SplitMix64 g(21);
  for (int i = 0; i < 100; ++i) {
    TriangleSides t = random_triangle(g);
    CHECK(std::fabs(max_dist_to_geodesic(t) - brute_force_geodesic_max(t, 200000)) <= 1e-5);
    if (t.a + t.b + t.c < 2 * kPi - 1e-6) {
      CHECK(std::fabs(max_dist_to_segment(t) - brute_force_segment_max(t, 200000)) <= 1e-5);
    }
  }
}
