// Command-line front end: simplex constants, seeded distortion sampling,
// certified grid verification, and surface export.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sgh/detail/fmt.hpp"
#include "sgh/distortion.hpp"
#include "sgh/parallel.hpp"
#include "sgh/simplex.hpp"
#include "sgh/verifier.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitBoundViolated = 4;

unsigned resolve_workers(unsigned flag_value) {
  if (flag_value > 0) return flag_value;  // flag wins
  if (const char* env = std::getenv("SGH_WORKERS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return unsigned(v);
  }
  return sgh::default_workers();
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw sgh::Error("cannot open output file " + path);
  return os;
}

int cmd_constants(unsigned n) {
  using sgh::detail::fmt17;
  double z = sgh::zeta(n);
  std::printf("n=%u\n", n);
  std::printf("zeta          %s\n", fmt17(z).c_str());
  std::printf("eta           %s\n", fmt17(sgh::eta(n)).c_str());
  std::printf("pi*n/(2n+1)   %s\n", fmt17(sgh::kPi * n / (2.0 * n + 1.0)).c_str());
  std::printf("pi-zeta       %s\n", fmt17(sgh::kPi - z).c_str());
  return 0;
}

int cmd_sample(const std::string& map, int n, std::uint64_t samples, std::uint64_t seed,
               const std::string& probe, unsigned workers, bool plain, bool allow_large,
               const std::string& out) {
  sgh::SampleReport report;
  if (!probe.empty()) {
    report = sgh::adversarial_probe(map, n, probe);
  } else {
    sgh::SampleOptions opts;
    opts.helmet = !plain;
    opts.workers = workers;
    opts.allow_large = allow_large;
    report = sgh::sample_distortion(map, n, samples, seed, opts);
  }
  if (!out.empty()) {
    auto os = open_out(out);
    sgh::write_report(report, os);
  } else {
    sgh::write_report(report, std::cout);
  }
  std::printf("map=%s n=%d pairs=%llu max=%.12g bound=%.12g margin=%.12g wall=%.3fs\n",
              report.map_name.c_str(), report.n, (unsigned long long)report.pair_count,
              report.max_distortion, report.bound, report.margin, report.wall_seconds);
  return report.margin >= 0 ? 0 : kExitBoundViolated;
}

int cmd_verify(const std::string& ineq, double spacing, std::optional<double> margin,
               unsigned workers, const std::string& out) {
  std::string fn;
  if (ineq == "case1") {
    fn = "I_case1";
  } else if (ineq == "k14") {
    fn = "I_k14";
  } else if (ineq == "case2") {
    fn = "I_case2";
  } else {
    fn = ineq;  // direct function name
  }
  sgh::bounds::Rect rect = sgh::default_rect(fn);
  sgh::GridJob job = sgh::make_grid_job(fn, rect, spacing, margin);
  sgh::Certificate cert = sgh::verify_grid(job, workers);
  if (!out.empty()) {
    auto os = open_out(out);
    sgh::write_certificate(cert, os);
  } else {
    sgh::write_certificate(cert, std::cout);
  }
  std::printf("function=%s verdict=%s worst=%.12g margin=%.12g epsilon=%.12g points=%llu "
              "workers=%u wall=%.3fs\n",
              fn.c_str(), std::string(sgh::verdict_name(cert.verdict)).c_str(), cert.worst_value,
              job.margin, job.budget.epsilon, (unsigned long long)cert.grid_points, cert.workers,
              cert.wall_seconds);
  return sgh::verdict_exit_code(cert.verdict);
}

int cmd_surface(const std::string& fn, std::size_t resolution,
                const std::vector<double>& rect_vals, const std::string& out) {
  sgh::bounds::Rect rect = sgh::default_rect(fn);
  if (!rect_vals.empty()) {
    if (rect_vals.size() != 4) throw CLI::ValidationError("--rect needs x_lo,x_hi,y_lo,y_hi");
    rect = {rect_vals[0], rect_vals[1], rect_vals[2], rect_vals[3]};
  }
  if (!out.empty()) {
    auto os = open_out(out);
    sgh::emit_surface(fn, rect, resolution, os);
  } else {
    sgh::emit_surface(fn, rect, resolution, std::cout);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical correspondence distortion lab and certified grid verifier"};
  app.require_subcommand(1);

  unsigned constants_n = 3;
  auto* constants = app.add_subcommand("constants", "Print the simplex constants for S^n");
  constants->add_option("--n", constants_n, "sphere dimension n >= 1")->required();

  std::string sample_map;
  int sample_n = 3;
  std::uint64_t sample_count = 2000, sample_seed = 0;
  std::string sample_probe, sample_out;
  unsigned sample_workers = 0;
  bool sample_plain = false, sample_allow_large = false;
  auto* sample = app.add_subcommand("sample", "Seeded Monte Carlo distortion estimate");
  sample->add_option("--map", sample_map, "r2n | phi | fn")->required();
  sample->add_option("--n", sample_n, "map parameter n >= 1")->required();
  sample->add_option("--samples", sample_count, "number of source points");
  sample->add_option("--seed", sample_seed, "64-bit RNG seed");
  sample->add_option("--probe", sample_probe, "voronoi-straddle | fig8 (skips sampling)");
  sample->add_option("--workers", sample_workers, "worker threads (default: CPUs or SGH_WORKERS)");
  sample->add_flag("--plain", sample_plain, "restrict to the upper domain, no antipodal extension");
  sample->add_flag("--allow-large", sample_allow_large, "lift the 100000-point cap");
  sample->add_option("--out", sample_out, "report file (default: stdout)");

  std::string verify_ineq, verify_out;
  double verify_spacing = 1e-3;
  std::optional<double> verify_margin;
  unsigned verify_workers = 0;
  auto* verify = app.add_subcommand("verify", "Certified grid check of a bound inequality");
  verify->add_option("--ineq", verify_ineq, "case1 | k14 | case2 (or a registry function)")
      ->required();
  verify->add_option("--spacing", verify_spacing, "grid spacing");
  verify->add_option("--margin", verify_margin,
                     "required margin (default: the derived oscillation bound)");
  verify->add_option("--workers", verify_workers, "worker threads (default: CPUs or SGH_WORKERS)");
  verify->add_option("--out", verify_out, "certificate file (default: stdout)");

  std::string surface_fn, surface_out;
  std::size_t surface_res = 200;
  std::vector<double> surface_rect;
  auto* surface = app.add_subcommand("surface", "Tabulate a bound function over a rectangle");
  surface->add_option("--fn", surface_fn, "registry function name")->required();
  surface->add_option("--res", surface_res, "points per axis");
  surface->add_option("--rect", surface_rect, "x_lo,x_hi,y_lo,y_hi")->delimiter(',');
  surface->add_option("--out", surface_out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return kExitUsage;
  }

  try {
    if (constants->parsed()) return cmd_constants(constants_n);
    if (sample->parsed()) {
      return cmd_sample(sample_map, sample_n, sample_count, sample_seed, sample_probe,
                        resolve_workers(sample_workers), sample_plain, sample_allow_large,
                        sample_out);
    }
    if (verify->parsed()) {
      return cmd_verify(verify_ineq, verify_spacing, verify_margin,
                        resolve_workers(verify_workers), verify_out);
    }
    if (surface->parsed()) return cmd_surface(surface_fn, surface_res, surface_rect, surface_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sgh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
