#pragma once

#include <string_view>
#include <vector>

#include "sgh/errors.hpp"

namespace sgh::bounds {

/// arccos(-1/4), the simplex mutual distance in S^3.
double zeta3();
/// pi - zeta3 = arccos(1/4), the cell radius bound of the S^3 simplex.
double rho();

/// arccos with the documented clamp window: arguments within 1e-12 of
/// [-1, 1] are clamped, anything further out raises NumericIntegrityError.
double checked_acos(double t);
double checked_asin(double t);

// Two-variable bound functions take (x, kappa) with x = alpha + alpha' the
// sum of colatitudes and kappa the distance between the equatorial
// projections, unless noted otherwise.

/// Lower bound for the source distance: arccos(cos x (1-cos k)/2 + (1+cos k)/2).
double L(double x, double kappa);

/// Floor for cos of the distance from a cell center to the segment from the
/// opposite center to its projected point.
double C(double kappa);

/// Upper bound for the distance from a cell center to an interpolated image
/// point at blend parameter beta in the opposite cell.
double G(double kappa, double beta);

double kappa2(double x, double kappa);  // kappa + rho*(pi/2 - x/2)

/// Image-distance upper bounds.
double U1(double x, double kappa);  // two-branch arccos form, pi past the seam
double U2(double x, double kappa);  // rho*beta + G(kappa, beta), beta = x/2 - pi/2 + 1
double U3(double kappa);            // one-variable small-kappa bound
double U6(double x, double kappa);  // kappa + rho*(pi - x)
double U7(double x, double kappa);  // zeta3 + rho*(x - pi + 2)

/// Source-distance lower bounds for the one-sided case; both take
/// (alpha, kappa) with alpha a single colatitude.
double L1(double alpha, double kappa);
double L2(double alpha, double kappa);

/// Grid-checked inequality gaps; proven when < 0 everywhere.
double I_case1(double x, double kappa);      // min(U1,U2,U6) - L - zeta3
double I_k14(double x, double kappa);        // min(U6,U7) - L - zeta3
double I_case2(double alpha, double kappa);  // G(kappa, alpha-pi/2+1) - max(L1,L2) - zeta3

/// U3(kappa) - L(pi-2, kappa) - zeta3, the small-kappa exclusion gap.
double u3_gap(double kappa);

struct Rect {
  double x_lo, x_hi, y_lo, y_hi;
};

struct BoundFunction {
  std::string_view name;
  bool one_dim;  // evaluates (x); y ignored
  Rect domain;
  double (*eval)(double x, double y);
};

/// Registry lookup; nullptr when unknown. Accepts the canonical names
/// L, C, G, U1, U2, U3, U6, U7, L1, L2, I_case1, I_k14, I_case2, u3-minus-l.
const BoundFunction* find_bound(std::string_view name);
std::vector<std::string_view> bound_names();

}  // namespace sgh::bounds
