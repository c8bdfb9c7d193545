#include "sgh/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "sgh/sphere.hpp"

namespace sgh::bounds {

namespace {
const double kZeta3 = std::acos(-0.25);
const double kRho = kPi - kZeta3;
const double kSqrt15 = std::sqrt(15.0);
constexpr double kClampWindow = 1e-12;
constexpr double kBranchGuard = 1e-9;
}  // namespace

double zeta3() { return kZeta3; }
double rho() { return kRho; }

double checked_acos(double t) {
  if (t > 1 + kClampWindow || t < -1 - kClampWindow) {
    throw NumericIntegrityError("arccos argument " + std::to_string(t) +
                                " beyond the clamp window");
  }
  return std::acos(clamp_unit(t));
}

double checked_asin(double t) {
  if (t > 1 + kClampWindow || t < -1 - kClampWindow) {
    throw NumericIntegrityError("arcsin argument " + std::to_string(t) +
                                " beyond the clamp window");
  }
  return std::asin(clamp_unit(t));
}

double L(double x, double kappa) {
  double ck = std::cos(kappa);
  return checked_acos(std::cos(x) * (1 - ck) / 2 + (1 + ck) / 2);
}

double C(double kappa) {
  double u = std::cos(kZeta3 - kappa);
  return -std::sqrt(1 - 2 * u + 16 * u * u) / kSqrt15;
}

double G(double kappa, double beta) {
  double t = kRho * beta;
  double q = (16 * std::cos(kRho + kappa) + 1) / 15;
  return checked_acos(-0.25 * std::cos(t) + (kSqrt15 / 4) * std::sin(t) * q);
}

double kappa2(double x, double kappa) { return kappa + kRho * (kPi / 2 - x / 2); }

namespace {

// Point-to-geodesic maximum for sides (rho, arccos(cs), ck_side) given as
// cosines of the two apex sides; cos(rho_side) = 1/4 is folded in.
double geodesic_max_from_cosines(double cos_b, double cos_c) {
  double rad = cos_b * cos_b + cos_c * cos_c - 0.5 * cos_b * cos_c;
  if (rad < 0) rad = 0;
  return checked_acos(-(4 / kSqrt15) * std::sqrt(rad));
}

}  // namespace

double U1(double x, double kappa) {
  double c = C(kappa);
  double k2 = kappa2(x, kappa);
  if (kRho + std::acos(clamp_unit(c)) + k2 >= 2 * kPi - kBranchGuard) return kPi;
  return geodesic_max_from_cosines(c, std::cos(k2));
}

double U2(double x, double kappa) {
  double beta = x / 2 - kPi / 2 + 1;
  return kRho * beta + G(kappa, beta);
}

double U3(double kappa) { return geodesic_max_from_cosines(C(kappa), std::cos(kRho + kappa)); }

double U6(double x, double kappa) { return kappa + kRho * (kPi - x); }

double U7(double x, double kappa) {
  (void)kappa;
  return kZeta3 + kRho * (x - kPi + 2);
}

double L1(double alpha, double kappa) { return L(alpha, kappa); }

double L2(double alpha, double kappa) {
  if (kappa >= kPi / 2) return alpha;
  return checked_asin(std::sin(alpha) * std::sin(kappa));
}

double I_case1(double x, double kappa) {
  double u = std::min({U1(x, kappa), U2(x, kappa), U6(x, kappa)});
  return u - L(x, kappa) - kZeta3;
}

double I_k14(double x, double kappa) {
  double u = std::min(U6(x, kappa), U7(x, kappa));
  return u - L(x, kappa) - kZeta3;
}

double I_case2(double alpha, double kappa) {
  double g = G(kappa, alpha - kPi / 2 + 1);
  return g - std::max(L1(alpha, kappa), L2(alpha, kappa)) - kZeta3;
}

double u3_gap(double kappa) { return U3(kappa) - L(kPi - 2, kappa) - kZeta3; }

namespace {

double eval_L(double x, double y) { return L(x, y); }
double eval_C(double x, double) { return C(x); }
double eval_G(double x, double y) { return G(x, y); }  // (kappa, beta)
double eval_U1(double x, double y) { return U1(x, y); }
double eval_U2(double x, double y) { return U2(x, y); }
double eval_U3(double x, double) { return U3(x); }
double eval_U6(double x, double y) { return U6(x, y); }
double eval_U7(double x, double y) { return U7(x, y); }
double eval_L1(double x, double y) { return L1(x, y); }
double eval_L2(double x, double y) { return L2(x, y); }
double eval_I1(double x, double y) { return I_case1(x, y); }
double eval_Ik(double x, double y) { return I_k14(x, y); }
double eval_I2(double x, double y) { return I_case2(x, y); }
double eval_u3gap(double x, double) { return u3_gap(x); }

const double kPiM2 = kPi - 2;

const std::array<BoundFunction, 14>& registry() {
  static const std::array<BoundFunction, 14> fns = {{
      {"L", false, {0, kPi, 0, kPi}, eval_L},
      {"C", true, {0, kPi, 0, 0}, eval_C},
      {"G", false, {0.3, kPi, 0, 1}, eval_G},
      {"U1", false, {kPiM2, 2, 0.7, 1.4}, eval_U1},
      {"U2", false, {kPiM2, 2, 0.7, 1.4}, eval_U2},
      {"U3", true, {0.3, 0.7, 0, 0}, eval_U3},
      {"U6", false, {kPiM2, 2, 0.7, 1.4}, eval_U6},
      {"U7", false, {kPi / 2, 2, 1.4, kPi}, eval_U7},
      {"L1", false, {kPi / 2 - 1, kPi / 2, 0.3, kPi}, eval_L1},
      {"L2", false, {kPi / 2 - 1, kPi / 2, 0.3, kPi}, eval_L2},
      {"I_case1", false, {kPiM2, 2, 0.7, 1.4}, eval_I1},
      {"I_k14", false, {kPi / 2, 2, 1.4, kPi}, eval_Ik},
      {"I_case2", false, {kPi / 2 - 1, kPi / 2, 0.3, kPi}, eval_I2},
      {"u3-minus-l", true, {0.3, 0.7, 0, 0}, eval_u3gap},
  }};
  return fns;
}

}  // namespace

const BoundFunction* find_bound(std::string_view name) {
  std::string_view canon = name;
  if (canon == "u3_minus_l") canon = "u3-minus-l";
  for (const auto& f : registry()) {
    if (f.name == canon) return &f;
  }
  return nullptr;
}

std::vector<std::string_view> bound_names() {
  std::vector<std::string_view> names;
  for (const auto& f : registry()) names.push_back(f.name);
  return names;
}

}  // namespace sgh::bounds
