#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "sgh/bounds.hpp"
#include "sgh/correspondence.hpp"

namespace sgh {

struct SampleOptions {
  bool helmet = true;        // evaluate through the antipodal extension
  unsigned workers = 0;      // 0: logical CPU count
  bool allow_large = false;  // lift the 100000-point cap
};

struct SampleReport {
  std::string map_name;
  int n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string probe;  // empty for plain sampling
  double max_distortion = 0;
  double bound = 0;
  double margin = 0;  // bound - max_distortion; negative means violated
  std::uint64_t pair_count = 0;
  // Witness pair achieving the maximum.
  std::vector<double> argmax_src_a, argmax_src_b;
  std::vector<double> argmax_tgt_a, argmax_tgt_b;
  double argmax_src_dist = 0;
  double argmax_tgt_dist = 0;
  // Reporting only; excluded from the serialized report.
  double wall_seconds = 0;
};

/// Draws `samples` source points (normalized Gaussians, one sub-stream per
/// point index), evaluates the named map, and returns the maximum pairwise
/// distortion with its witness pair. Rejected draws (boundary bases, poles)
/// are re-drawn from the same sub-stream; 100 consecutive rejections raise
/// SamplingStarvationError. Identical arguments give identical reports.
SampleReport sample_distortion(std::string_view map_name, int n, std::uint64_t samples,
                               std::uint64_t seed, const SampleOptions& opts = {});

/// Deterministic worst-case constructions:
///  - voronoi-straddle: a pair a hair apart across a Voronoi boundary whose
///    images are far apart (maps r2n, phi, fn);
///  - fig8-config: equatorial projections nearly at the opposite cell
///    centers with both colatitudes (pi-1)/2 (map fn only).
SampleReport adversarial_probe(std::string_view map_name, int n, std::string_view probe_kind);

void write_report(const SampleReport& r, std::ostream& os);

/// Row-major grid of fn over the rectangle, written as `x,y,value` records
/// with one header line and 17 significant digits. One-variable functions
/// emit y = 0. The rectangle must lie inside the function's stated domain.
void emit_surface(std::string_view fn_name, bounds::Rect rect, std::size_t resolution,
                  std::ostream& os);

/// The registry domain of a bound function (surface default).
bounds::Rect default_rect(std::string_view fn_name);

}  // namespace sgh
