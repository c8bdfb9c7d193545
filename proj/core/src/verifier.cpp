#include "sgh/verifier.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>

#include "sgh/detail/fmt.hpp"
#include "sgh/parallel.hpp"
#include "sgh/sphere.hpp"

namespace sgh {

using bounds::Rect;

namespace {

// Plain-double interval ranges, used only to pick sound ledger constants
// over a rectangle. Not directed-rounding interval arithmetic.
struct Iv {
  double lo, hi;
};

Iv iv(double a, double b) { return a <= b ? Iv{a, b} : Iv{b, a}; }
double absmax(Iv v) { return std::max(std::fabs(v.lo), std::fabs(v.hi)); }
Iv add(Iv a, Iv b) { return {a.lo + b.lo, a.hi + b.hi}; }
Iv shift(Iv a, double c) { return {a.lo + c, a.hi + c}; }
Iv scale(Iv a, double c) { return c >= 0 ? Iv{c * a.lo, c * a.hi} : Iv{c * a.hi, c * a.lo}; }

Iv mul(Iv a, Iv b) {
  double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Iv cos_iv(Iv t) {
  double lo = std::min(std::cos(t.lo), std::cos(t.hi));
  double hi = std::max(std::cos(t.lo), std::cos(t.hi));
  double k_lo = std::ceil(t.lo / kPi);
  for (double k = k_lo; k * kPi <= t.hi; k += 1) {
    double v = std::cos(k * kPi);  // +-1
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi};
}

Iv sin_iv(Iv t) { return cos_iv(shift(t, -kPi / 2)); }

constexpr double kStepSlack = 1e-12;  // rounding slack per composed arccos/sqrt

void push(ContinuityBudget& b, std::string term, std::string kind, double value) {
  b.derivation.push_back(BudgetTerm{std::move(term), std::move(kind), value});
}

// Oscillation of arccos(y) when the argument moves by at most dy and y stays
// inside `range`: the smooth slope bound when the range clears the endpoints,
// and always the endpoint modulus arccos(1 - dy).
double acos_modulus(double dy, Iv range, ContinuityBudget& b, const std::string& who) {
  double endpoint = std::acos(clamp_unit(1 - std::min(dy, 2.0)));
  double worst = std::min(1.0, absmax(range) + dy);
  if (worst < 1) {
    double slope = 1 / std::sqrt(1 - worst * worst);
    double smooth = dy * slope;
    if (smooth < endpoint) {
      push(b, who + ".acos-slope", "lipschitz", slope);
      return smooth;
    }
  }
  push(b, who + ".acos-endpoint-modulus", "modulus", endpoint);
  return endpoint;
}

// L(x, kappa) moves both realized endpoints by dx/2 along meridians and one
// of them by at most dkappa along its parallel (radius <= 1).
double budget_L(double dx, double dk, ContinuityBudget& b, const std::string& who) {
  push(b, who + ".x-slope", "lipschitz", 1.0);
  push(b, who + ".kappa-slope", "lipschitz", 1.0);
  return dx + dk;
}

// L2 is 1-Lipschitz per axis: |d asin(sin a sin k)/da| <= sin k <= 1 and
// symmetrically in kappa; the alpha branch has slope 1.
double budget_L2(double dx, double dk, ContinuityBudget& b) {
  push(b, "L2.x-slope", "lipschitz", 1.0);
  push(b, "L2.kappa-slope", "lipschitz", 1.0);
  return dx + dk;
}

double budget_U6(double dx, double dk, ContinuityBudget& b) {
  push(b, "U6.x-slope", "lipschitz", bounds::rho());
  push(b, "U6.kappa-slope", "lipschitz", 1.0);
  return bounds::rho() * dx + dk;
}

double budget_U7(double dx, ContinuityBudget& b) {
  push(b, "U7.x-slope", "lipschitz", bounds::rho());
  return bounds::rho() * dx;
}

// G(kappa, beta): bound the inner-argument slopes over the rectangle, then
// apply the arccos modulus.
double budget_G(Iv kappa, Iv beta, double dbeta, double dkappa, ContinuityBudget& b,
                const std::string& who) {
  const double rho = bounds::rho();
  const double s15_4 = std::sqrt(15.0) / 4;
  Iv t = scale(beta, rho);
  Iv ct = cos_iv(t), st = sin_iv(t);
  Iv q = shift(scale(cos_iv(shift(kappa, rho)), 16.0 / 15.0), 1.0 / 15.0);
  Iv inner = add(scale(ct, -0.25), scale(mul(st, q), s15_4));
  double k_beta = rho * (0.25 * absmax(st) + s15_4 * absmax(ct) * absmax(q));
  double k_kappa = s15_4 * absmax(st) * (16.0 / 15.0) * absmax(sin_iv(shift(kappa, rho)));
  push(b, who + ".inner-beta-slope", "lipschitz", k_beta);
  push(b, who + ".inner-kappa-slope", "lipschitz", k_kappa);
  double dinner = k_beta * dbeta + k_kappa * dkappa;
  return acos_modulus(dinner, inner, b, who) + 2 * kStepSlack;
}

double budget_U2(Iv x, Iv kappa, double dx, double dk, ContinuityBudget& b) {
  const double rho = bounds::rho();
  Iv beta = shift(scale(x, 0.5), 1 - kPi / 2);
  push(b, "U2.linear-beta-slope", "lipschitz", rho / 2);
  return rho * dx / 2 + budget_G(kappa, beta, dx / 2, dk, b, "U2.G");
}

// Shared tail of the point-to-geodesic image bounds: the composed stage
// h(R) = arccos(-sqrt(16 R / 15)) over radicand range [r_min, r_hi] with
// per-grid-step radicand motion dr. h' falls then rises over the feasible
// range, so the sliding-window oscillation is maximized at one of the two
// ends; past 15/16 the value saturates at pi (the branch seam is continuous,
// so the same modulus covers seam-crossing pairs).
double radicand_window(double r_min, double r_hi, double dr, ContinuityBudget& b,
                       const std::string& who) {
  const double r_cap = 15.0 / 16.0;
  auto h = [&](double r) {
    r = std::min(std::max(r, 0.0), r_cap);
    return std::acos(clamp_unit(-std::sqrt(16 * r / 15)));
  };
  double r_top = std::min(r_cap, r_hi + dr);
  double top = h(r_top) - h(r_top - dr);
  double bottom = h(r_min + dr) - h(r_min);
  double eps = std::max(top, bottom) + 3 * kStepSlack;
  push(b, who + ".acos-sqrt-window", "modulus", eps);
  return eps;
}

struct RadicandRange {
  double c_absmax;  // max |C| over the kappa range
  double r_min, r_hi;
};

// Range of C(kappa)^2 via the monotone pieces of 16u^2 - 2u + 1 over
// u = cos(zeta3 - kappa), and the induced radicand floor (15/16) C_min^2.
RadicandRange radicand_range(Iv kappa, Iv cos_side, ContinuityBudget& b,
                             const std::string& who) {
  Iv u = cos_iv(shift(scale(kappa, -1.0), bounds::zeta3()));
  auto g_of = [](double v) { return 16 * v * v - 2 * v + 1; };
  double gmin = std::min(g_of(u.lo), g_of(u.hi));
  double gmax = std::max(g_of(u.lo), g_of(u.hi));
  if (u.lo < 1.0 / 16 && u.hi > 1.0 / 16) gmin = std::min(gmin, g_of(1.0 / 16));
  RadicandRange r;
  r.c_absmax = std::sqrt(gmax / 15);
  r.r_min = gmin / 16;  // (15/16)*C_min^2
  double cs = absmax(cos_side);
  r.r_hi = gmax / 15 + cs * cs + 0.5 * r.c_absmax * cs;
  push(b, who + ".radicand-floor", "floor", r.r_min);
  return r;
}

// U1: C is 1-Lipschitz on the case rectangle (max-slope checked in tests).
double budget_U1(Iv x, Iv kappa, double dx, double dk, ContinuityBudget& b) {
  const double rho = bounds::rho();
  push(b, "U1.C-lipschitz", "lipschitz", 1.0);
  double dC = dk;
  double dk2 = dk + (rho / 2) * dx;
  push(b, "U1.kappa2-slope", "lipschitz", 1.0 + rho / 2);

  Iv k2 = add(kappa, scale(shift(scale(x, -0.5), kPi / 2), rho));
  Iv cos_k2 = cos_iv(k2);
  RadicandRange rr = radicand_range(kappa, cos_k2, b, "U1");
  double cos_k2_absmax = absmax(cos_k2);
  double a1 = 2 * rr.c_absmax + 0.5 * cos_k2_absmax;
  double a2 = 2 * cos_k2_absmax + 0.5 * rr.c_absmax;
  push(b, "U1.radicand-C-slope", "lipschitz", a1);
  push(b, "U1.radicand-kappa2-slope", "lipschitz", a2);
  double dr = a1 * dC + a2 * dk2;
  push(b, "U1.radicand-step", "modulus", dr);
  return radicand_window(rr.r_min, rr.r_hi, dr, b, "U1");
}

// U3(kappa): the same composed stage with the side cosine cos(rho + kappa).
double budget_U3(Iv kappa, double dk, ContinuityBudget& b) {
  push(b, "U3.C-lipschitz", "lipschitz", 1.0);
  Iv cos_side = cos_iv(shift(kappa, bounds::rho()));
  RadicandRange rr = radicand_range(kappa, cos_side, b, "U3");
  double cs = absmax(cos_side);
  double a1 = 2 * rr.c_absmax + 0.5 * cs;
  double a2 = 2 * cs + 0.5 * rr.c_absmax;
  push(b, "U3.radicand-C-slope", "lipschitz", a1);
  push(b, "U3.radicand-side-slope", "lipschitz", a2);
  double dr = (a1 + a2) * dk;
  push(b, "U3.radicand-step", "modulus", dr);
  return radicand_window(rr.r_min, rr.r_hi, dr, b, "U3");
}

void require_within(Rect rect, Rect domain, std::string_view fn) {
  const double tol = 1e-9;
  if (rect.x_lo < domain.x_lo - tol || rect.x_hi > domain.x_hi + tol ||
      rect.y_lo < domain.y_lo - tol || rect.y_hi > domain.y_hi + tol) {
    throw ConfigError(std::string("budget ledger for ") + std::string(fn) +
                      " only covers its stated domain");
  }
}

}  // namespace

ContinuityBudget derive_budget(std::string_view fn_name, Rect rect, double spacing) {
  if (!(spacing > 0)) throw ConfigError("derive_budget: spacing must be positive");
  const bounds::BoundFunction* fn = bounds::find_bound(fn_name);
  if (!fn) throw ConfigError("derive_budget: unknown function " + std::string(fn_name));
  require_within(rect, fn->domain, fn_name);

  ContinuityBudget b;
  b.delta = spacing / 2;
  const double d = b.delta;
  Iv x = iv(rect.x_lo, rect.x_hi);
  Iv y = iv(rect.y_lo, rect.y_hi);

  if (fn_name == "L" || fn_name == "L1") {
    b.epsilon = budget_L(d, d, b, std::string(fn_name));
  } else if (fn_name == "L2") {
    b.epsilon = budget_L2(d, d, b);
  } else if (fn_name == "C") {
    push(b, "C.kappa-lipschitz", "lipschitz", 1.0);
    b.epsilon = d + kStepSlack;
  } else if (fn_name == "U6") {
    b.epsilon = budget_U6(d, d, b);
  } else if (fn_name == "U7") {
    b.epsilon = budget_U7(d, b);
  } else if (fn_name == "G") {
    b.epsilon = budget_G(x, y, d, d, b, "G");  // (kappa, beta) axes
  } else if (fn_name == "U2") {
    b.epsilon = budget_U2(x, y, d, d, b);
  } else if (fn_name == "U1") {
    b.epsilon = budget_U1(x, y, d, d, b);
  } else if (fn_name == "U3") {
    b.epsilon = budget_U3(x, d, b);
  } else if (fn_name == "u3-minus-l" || fn_name == "u3_minus_l") {
    // L enters with its first argument frozen, so only its kappa motion counts.
    push(b, "L.kappa-slope", "lipschitz", 1.0);
    double u3 = budget_U3(x, d, b);
    b.epsilon = d + u3 + kStepSlack;
  } else if (fn_name == "I_case1") {
    double l = budget_L(d, d, b, "L");
    double u1 = budget_U1(x, y, d, d, b);
    double u2 = budget_U2(x, y, d, d, b);
    double u6 = budget_U6(d, d, b);
    push(b, "min(U1,U2,U6)", "modulus", std::max({u1, u2, u6}));
    b.epsilon = l + std::max({u1, u2, u6}) + kStepSlack;
  } else if (fn_name == "I_k14") {
    double l = budget_L(d, d, b, "L");
    double u6 = budget_U6(d, d, b);
    double u7 = budget_U7(d, b);
    push(b, "min(U6,U7)", "modulus", std::max(u6, u7));
    b.epsilon = l + std::max(u6, u7) + kStepSlack;
  } else if (fn_name == "I_case2") {
    double l1 = budget_L(d, d, b, "L1");
    double l2 = budget_L2(d, d, b);
    Iv beta = shift(x, 1 - kPi / 2);
    double g = budget_G(y, beta, d, d, b, "G");
    push(b, "max(L1,L2)", "modulus", std::max(l1, l2));
    b.epsilon = std::max(l1, l2) + g + kStepSlack;
  } else {
    throw ConfigError("derive_budget: no ledger implemented for " + std::string(fn_name));
  }
  return b;
}

GridJob make_grid_job(std::string_view fn, Rect rect, double spacing,
                      std::optional<double> margin) {
  ContinuityBudget budget = derive_budget(fn, rect, spacing);
  double m = margin.value_or(budget.epsilon);
  if (m < budget.epsilon) {
    throw BudgetInfeasibleError(
        "margin " + detail::fmt17(m) + " below the oscillation bound " +
            detail::fmt17(budget.epsilon) + " at this spacing; tighten the grid",
        budget.epsilon);
  }
  return GridJob{std::string(fn), rect, spacing, m, std::move(budget)};
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::proven:
      return "proven";
    case Verdict::refuted:
      return "refuted";
    case Verdict::insufficient_margin:
      return "insufficient-margin";
  }
  return "?";
}

int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::proven:
      return 0;
    case Verdict::refuted:
      return 2;
    case Verdict::insufficient_margin:
      return 3;
  }
  return 1;
}

namespace {

struct Axis {
  double lo, hi, spacing;
  std::uint64_t count;
  double at(std::uint64_t i) const {
    double v = lo + double(i) * spacing;
    return i + 1 == count ? hi : (v > hi ? hi : v);
  }
};

Axis make_axis(double lo, double hi, double spacing) {
  if (hi < lo) throw ConfigError("grid axis reversed");
  double span = hi - lo;
  std::uint64_t steps = span <= 0 ? 0 : std::uint64_t(std::ceil(span / spacing - 1e-9));
  return Axis{lo, hi, spacing, steps + 1};
}

struct BandResult {
  double worst = -std::numeric_limits<double>::infinity();
  std::uint64_t worst_index = 0;
  bool has_witness = false;
  double witness_value = 0;
  std::uint64_t witness_index = 0;
};

}  // namespace

Certificate verify_grid(const GridJob& job, unsigned workers) {
  const bounds::BoundFunction* fn = bounds::find_bound(job.fn);
  if (!fn) throw ConfigError("verify_grid: unknown function " + job.fn);
  if (!(job.spacing > 0) || !(job.margin > 0)) {
    throw ConfigError("verify_grid: spacing and margin must be positive");
  }
  // Budget invariants are checked, not assumed.
  if (job.budget.delta < job.spacing / 2 - 1e-15) {
    throw ConfigError("verify_grid: budget delta below half the spacing");
  }
  if (job.budget.epsilon > job.margin + 1e-15) {
    throw ConfigError("verify_grid: budget epsilon exceeds the margin");
  }
  ContinuityBudget fresh = derive_budget(job.fn, job.rect, job.spacing);
  if (fresh.epsilon > job.budget.epsilon + 1e-12) {
    throw ConfigError("verify_grid: stale budget; recomputed epsilon is larger");
  }

  if (workers == 0) workers = default_workers();
  Axis ax = make_axis(job.rect.x_lo, job.rect.x_hi, job.spacing);
  Axis ay = fn->one_dim ? Axis{0, 0, 1, 1} : make_axis(job.rect.y_lo, job.rect.y_hi, job.spacing);

  auto t0 = std::chrono::steady_clock::now();
  unsigned bands = workers;
  std::vector<BandResult> results(bands);
  std::atomic<unsigned> first_witness_band{bands};

  for_each_band(ay.count, bands, [&](unsigned band, std::uint64_t row_begin, std::uint64_t row_end) {
    BandResult r;
    auto eval = fn->eval;
    for (std::uint64_t iy = row_begin; iy < row_end && !r.has_witness; ++iy) {
      if (first_witness_band.load(std::memory_order_relaxed) < band) break;
      double yv = ay.at(iy);
      for (std::uint64_t ix = 0; ix < ax.count; ++ix) {
        double v = eval(ax.at(ix), yv);
        std::uint64_t flat = iy * ax.count + ix;
        if (v > r.worst) {
          r.worst = v;
          r.worst_index = flat;
        }
        if (v >= 0 && !r.has_witness) {
          r.has_witness = true;
          r.witness_value = v;
          r.witness_index = flat;
          unsigned cur = first_witness_band.load(std::memory_order_relaxed);
          while (band < cur &&
                 !first_witness_band.compare_exchange_weak(cur, band, std::memory_order_relaxed)) {
          }
          break;
        }
      }
    }
    results[band] = r;
  });

  Certificate c;
  c.job = job;
  c.grid_nx = ax.count;
  c.grid_ny = ay.count;
  c.grid_points = ax.count * ay.count;
  c.workers = workers;

  bool witness_found = false;
  std::uint64_t witness_index = 0;
  double witness_value = 0;
  double worst = -std::numeric_limits<double>::infinity();
  std::uint64_t worst_index = 0;
  for (const BandResult& r : results) {  // band order: first witness is row-major first
    if (r.worst > worst) {
      worst = r.worst;
      worst_index = r.worst_index;
    }
    if (r.has_witness && !witness_found) {
      witness_found = true;
      witness_index = r.witness_index;
      witness_value = r.witness_value;
    }
  }

  auto locate = [&](std::uint64_t flat, double& xv, double& yv) {
    xv = ax.at(flat % ax.count);
    yv = ay.at(flat / ax.count);
  };

  if (witness_found) {
    c.verdict = Verdict::refuted;
    c.has_witness = true;
    c.witness_value = witness_value;
    locate(witness_index, c.witness_x, c.witness_y);
    // Bands past the witness may have been cancelled; report the witness as
    // the worst observed point so the certificate stays deterministic.
    c.worst_value = witness_value;
    c.worst_index = witness_index;
    c.worst_x = c.witness_x;
    c.worst_y = c.witness_y;
  } else {
    c.verdict = worst < -job.margin ? Verdict::proven : Verdict::insufficient_margin;
    c.worst_value = worst;
    c.worst_index = worst_index;
    locate(worst_index, c.worst_x, c.worst_y);
  }
  c.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

void write_certificate(const Certificate& c, std::ostream& os) {
  using detail::fmt17;
  os << "artifact=" << kArtifactVersion << "\n";
  os << "function=" << c.job.fn << "\n";
  os << "rect.x_lo=" << fmt17(c.job.rect.x_lo) << "\n";
  os << "rect.x_hi=" << fmt17(c.job.rect.x_hi) << "\n";
  os << "rect.y_lo=" << fmt17(c.job.rect.y_lo) << "\n";
  os << "rect.y_hi=" << fmt17(c.job.rect.y_hi) << "\n";
  os << "spacing=" << fmt17(c.job.spacing) << "\n";
  os << "margin=" << fmt17(c.job.margin) << "\n";
  os << "budget.delta=" << fmt17(c.job.budget.delta) << "\n";
  os << "budget.epsilon=" << fmt17(c.job.budget.epsilon) << "\n";
  os << "budget.terms=" << c.job.budget.derivation.size() << "\n";
  for (std::size_t i = 0; i < c.job.budget.derivation.size(); ++i) {
    const BudgetTerm& t = c.job.budget.derivation[i];
    os << "budget.term." << i << "=" << t.term << " " << t.kind << " " << fmt17(t.value) << "\n";
  }
  os << "grid.nx=" << c.grid_nx << "\n";
  os << "grid.ny=" << c.grid_ny << "\n";
  os << "grid.points=" << c.grid_points << "\n";
  os << "worst.value=" << fmt17(c.worst_value) << "\n";
  os << "worst.x=" << fmt17(c.worst_x) << "\n";
  os << "worst.y=" << fmt17(c.worst_y) << "\n";
  os << "worst.index=" << c.worst_index << "\n";
  os << "verdict=" << verdict_name(c.verdict) << "\n";
  if (c.has_witness) {
    os << "witness.x=" << fmt17(c.witness_x) << "\n";
    os << "witness.y=" << fmt17(c.witness_y) << "\n";
    os << "witness.value=" << fmt17(c.witness_value) << "\n";
  }
}

}  // namespace sgh
