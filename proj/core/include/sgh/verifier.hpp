#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sgh/bounds.hpp"

namespace sgh {

inline constexpr std::string_view kArtifactVersion = "sphere-gh 0.1.0";

struct BudgetTerm {
  std::string term;
  std::string kind;  // lipschitz | modulus | floor | slack
  double value;
};

/// Certifies that the target function oscillates by less than `epsilon`
/// between any point of the rectangle and its nearest grid point (each
/// coordinate within `delta`). `derivation` lists the per-term constants the
/// composition used.
struct ContinuityBudget {
  double delta = 0;
  double epsilon = 0;
  std::vector<BudgetTerm> derivation;
};

/// Composes per-term Lipschitz/modulus constants over the rectangle into a
/// budget for grid spacing `spacing` (delta = spacing/2). Throws ConfigError
/// for functions without a ledger.
ContinuityBudget derive_budget(std::string_view fn_name, bounds::Rect rect, double spacing);

struct GridJob {
  std::string fn;
  bounds::Rect rect{};
  double spacing = 0;
  double margin = 0;
  ContinuityBudget budget;
};

/// Builds a job with a validated budget. Without an explicit margin the
/// derived epsilon is used. An explicit margin below the derived epsilon is
/// rejected with the minimal feasible margin attached.
GridJob make_grid_job(std::string_view fn, bounds::Rect rect, double spacing,
                      std::optional<double> margin = std::nullopt);

enum class Verdict { proven, refuted, insufficient_margin };
std::string_view verdict_name(Verdict v);
int verdict_exit_code(Verdict v);  // 0 / 2 / 3

struct Certificate {
  GridJob job;
  std::uint64_t grid_nx = 0, grid_ny = 0, grid_points = 0;
  double worst_value = 0;
  double worst_x = 0, worst_y = 0;
  std::uint64_t worst_index = 0;  // row-major flat index
  Verdict verdict = Verdict::insufficient_margin;
  bool has_witness = false;
  double witness_x = 0, witness_y = 0, witness_value = 0;
  // Reporting only; excluded from the serialized certificate so identical
  // flags give byte-identical files and worker count never changes output.
  double wall_seconds = 0;
  unsigned workers = 0;
};

/// Evaluates the function at every grid point of the rectangle (corner
/// anchored, final row/column clamped to the edge). proven iff every value
/// is < -margin; refuted reports the first witness >= 0 in row-major order;
/// otherwise insufficient-margin. The verdict and all reported values are
/// independent of the worker count.
Certificate verify_grid(const GridJob& job, unsigned workers);

void write_certificate(const Certificate& c, std::ostream& os);

}  // namespace sgh
