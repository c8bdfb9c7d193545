#include "sgh/distortion.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <optional>

#include "sgh/detail/fmt.hpp"
#include "sgh/parallel.hpp"
#include "sgh/rng.hpp"
#include "sgh/verifier.hpp"

namespace sgh {

namespace {

constexpr std::uint64_t kPointCap = 100000;
constexpr int kRejectionCap = 100;

struct MapHandle {
  std::string name;
  int n;
  std::size_t src_dim;
  double bound;
  std::function<std::optional<SpherePoint>(const SpherePoint&, bool helmet)> eval;
};

MapHandle make_map(std::string_view map_name, int n) {
  if (n < 1) throw Error("map parameter n must be >= 1");
  if (map_name == "r2n") {
    auto corr = std::make_shared<EvenCorrespondence>(n);
    return MapHandle{
        "r2n", n, std::size_t(2 * n), corr->bound(),
        [corr](const SpherePoint& x, bool helmet) -> std::optional<SpherePoint> {
          R2nFiber f = helmet ? corr->eval_extended(x) : corr->eval(x);
          switch (f.kind) {
            case R2nFiber::Kind::point:
              return circle_point(f.angle);
            case R2nFiber::Kind::arc:
              return circle_point(f.arc.center);
            case R2nFiber::Kind::empty:
              return std::nullopt;
          }
          return std::nullopt;
        }};
  }
  if (map_name == "phi") {
    auto map = std::make_shared<OddMap>(n);
    return MapHandle{"phi", n, std::size_t(2 * n + 1), map->bound(),
                     [map](const SpherePoint& x, bool helmet) -> std::optional<SpherePoint> {
                       auto a = helmet ? map->try_eval_extended(x) : map->try_eval(x);
                       if (!a) return std::nullopt;
                       return circle_point(*a);
                     }};
  }
  if (map_name == "fn") {
    auto map = std::make_shared<FnMap>(n);
    return MapHandle{"fn", n, std::size_t(n + 1), map->bound(),
                     [map](const SpherePoint& x, bool helmet) -> std::optional<SpherePoint> {
                       return helmet ? map->try_eval_extended(x) : map->try_eval(x);
                     }};
  }
  throw Error("unknown map name: " + std::string(map_name));
}

// Draw one accepted (source, image) pair for point index i. Plain mode
// mirrors draws into the upper domain; the extension takes them as they come.
std::pair<SpherePoint, SpherePoint> draw_accepted(const MapHandle& map, std::uint64_t seed,
                                                  std::uint64_t index, bool helmet) {
  SplitMix64 g = point_stream(seed, index);
  for (int attempt = 0; attempt < kRejectionCap; ++attempt) {
    SpherePoint x = draw_sphere_point(g, map.src_dim);
    if (!helmet && x.last() < 0) x = -x;
    auto y = map.eval(x, helmet);
    if (y) return {std::move(x), std::move(*y)};
  }
  throw SamplingStarvationError("100 consecutive rejected draws for point index " +
                                std::to_string(index));
}

struct PairMax {
  double value = -std::numeric_limits<double>::infinity();
  std::uint64_t i = 0, j = 0;
};

// Maximum |d_src - d_tgt| over all unordered pairs; banded over rows with a
// deterministic in-order merge, so the result is worker-independent.
PairMax max_pair_distortion(const std::vector<SpherePoint>& src,
                            const std::vector<SpherePoint>& tgt, unsigned workers) {
  const std::uint64_t npts = src.size();
  std::vector<PairMax> partial(workers == 0 ? default_workers() : workers);
  for_each_band(npts, unsigned(partial.size()),
                [&](unsigned band, std::uint64_t begin, std::uint64_t end) {
                  PairMax local;
                  for (std::uint64_t i = begin; i < end; ++i) {
                    for (std::uint64_t j = i + 1; j < npts; ++j) {
                      double d = std::fabs(geodesic_dist(src[i], src[j]) -
                                           geodesic_dist(tgt[i], tgt[j]));
                      if (d > local.value) local = PairMax{d, i, j};
                    }
                  }
                  partial[band] = local;
                });
  PairMax best;
  for (const PairMax& p : partial) {
    if (p.value > best.value) best = p;
  }
  return best;
}

SampleReport finish_report(const MapHandle& map, std::vector<SpherePoint> src,
                           std::vector<SpherePoint> tgt, unsigned workers) {
  PairMax best = max_pair_distortion(src, tgt, workers);
  SampleReport r;
  r.map_name = map.name;
  r.n = map.n;
  r.bound = map.bound;
  r.max_distortion = best.value;
  r.margin = map.bound - best.value;
  r.pair_count = src.size() * (src.size() - 1) / 2;
  const SpherePoint& sa = src[best.i];
  const SpherePoint& sb = src[best.j];
  const SpherePoint& ta = tgt[best.i];
  const SpherePoint& tb = tgt[best.j];
  r.argmax_src_a.assign(sa.coords().begin(), sa.coords().end());
  r.argmax_src_b.assign(sb.coords().begin(), sb.coords().end());
  r.argmax_tgt_a.assign(ta.coords().begin(), ta.coords().end());
  r.argmax_tgt_b.assign(tb.coords().begin(), tb.coords().end());
  r.argmax_src_dist = geodesic_dist(sa, sb);
  r.argmax_tgt_dist = geodesic_dist(ta, tb);
  return r;
}

}  // namespace

SampleReport sample_distortion(std::string_view map_name, int n, std::uint64_t samples,
                               std::uint64_t seed, const SampleOptions& opts) {
  if (samples < 2) throw Error("sample_distortion: need at least 2 samples");
  if (samples > kPointCap && !opts.allow_large) {
    throw Error("sample_distortion: point count above 100000; pass allow_large to override");
  }
  MapHandle map = make_map(map_name, n);
  auto t0 = std::chrono::steady_clock::now();

  std::vector<SpherePoint> src, tgt;
  src.reserve(samples);
  tgt.reserve(samples);
  for (std::uint64_t i = 0; i < samples; ++i) {
    auto [x, y] = draw_accepted(map, seed, i, opts.helmet);
    src.push_back(std::move(x));
    tgt.push_back(std::move(y));
  }

  SampleReport r = finish_report(map, std::move(src), std::move(tgt), opts.workers);
  r.samples = samples;
  r.seed = seed;
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

namespace {

// Pair straddling the boundary between cells i and j at distance eps each
// side of the midpoint of [p_i, p_j].
std::pair<SpherePoint, SpherePoint> straddle_pair(const RegularSimplex& s, std::size_t i,
                                                  std::size_t j, double eps) {
  SpherePoint mid = interpolate(s.vertex(i), s.vertex(j), 0.5);
  double half = geodesic_dist(mid, s.vertex(i));
  double lam = eps / half;
  return {interpolate(s.vertex(i), mid, lam), interpolate(s.vertex(j), mid, lam)};
}

SampleReport probe_report(const MapHandle& map, const std::vector<SpherePoint>& src,
                          const std::vector<SpherePoint>& tgt, std::string probe) {
  SampleReport r = finish_report(map, src, tgt, 1);
  r.samples = src.size();
  r.probe = std::move(probe);
  return r;
}

}  // namespace

SampleReport adversarial_probe(std::string_view map_name, int n, std::string_view probe_kind) {
  const double eps = 1e-6;
  bool straddle = probe_kind == "voronoi-straddle" || probe_kind == "straddle";
  bool fig8 = probe_kind == "fig8-config" || probe_kind == "fig8";
  if (!straddle && !fig8) {
    throw Error("unknown probe kind: " + std::string(probe_kind));
  }
  MapHandle map = make_map(map_name, n);

  std::vector<SpherePoint> src, tgt;
  if (straddle) {
    if (map.name == "fn") {
      // Straddling bases at colatitude pi/2 - 1, where the map still snaps to
      // the vertices: nearby sources, images a full simplex edge apart.
      FnMap fn(n);
      auto [b0, b1] = straddle_pair(fn.simplex(), 0, 1, eps);
      double equatorial_alpha = 1.0;  // colatitude pi/2 - 1
      for (const SpherePoint& b : {b0, b1}) {
        SpherePoint x = from_polar(b, equatorial_alpha);
        auto y = fn.try_eval(x);
        if (!y) throw NotInDomainError("straddle probe base landed on a boundary");
        src.push_back(x);
        tgt.push_back(*y);
      }
    } else {
      // Cells i = 0 and j = n map to roots a maximal circle distance apart.
      EvenCorrespondence corr(n);
      auto [x0, x1] = straddle_pair(corr.simplex(), 0, std::size_t(n), eps);
      if (map.name == "r2n") {
        for (const SpherePoint& x : {x0, x1}) {
          R2nFiber f = corr.eval(x);
          if (f.kind != R2nFiber::Kind::point) {
            throw NotInDomainError("straddle probe landed on a boundary");
          }
          src.push_back(x);
          tgt.push_back(circle_point(f.angle));
        }
      } else {  // phi: the equatorial restriction agrees with the even map
        OddMap phi(n);
        for (const SpherePoint& x : {x0, x1}) {
          SpherePoint lifted = x.embedded(1);
          auto a = phi.try_eval(lifted);
          if (!a) throw NotInDomainError("straddle probe landed on a boundary");
          src.push_back(lifted);
          tgt.push_back(circle_point(*a));
        }
      }
    }
  } else {
    if (map.name != "fn") {
      throw Error("fig8-config probe requires the fn map");
    }
    // Bases nudged off the opposite cell centers, both at colatitude
    // (pi-1)/2, so the images are interpolation midpoints of nearly
    // antipodal segments.
    FnMap fn(n);
    const SpherePoint& p = fn.simplex().vertex(0);
    const SpherePoint& q = fn.simplex().vertex(1);
    double far = geodesic_dist(p, -q);  // pi - zeta(n)
    double lam = eps / far;
    SpherePoint base_a = interpolate(p, -q, lam);   // near -q, inside cell 0
    SpherePoint base_b = interpolate(q, -p, lam);   // near -p, inside cell 1
    double equatorial_alpha = 0.5;                  // colatitude (pi-1)/2
    for (const SpherePoint& b : {base_a, base_b}) {
      SpherePoint x = from_polar(b, equatorial_alpha);
      auto y = fn.try_eval(x);
      if (!y) throw NotInDomainError("fig8 probe base landed on a boundary");
      src.push_back(x);
      tgt.push_back(*y);
    }
  }
  SampleReport r = probe_report(map, src, tgt, std::string(probe_kind));
  r.seed = 0;
  return r;
}

void write_report(const SampleReport& r, std::ostream& os) {
  using detail::fmt17;
  auto coords = [](const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += " ";
      s += detail::fmt17(v[i]);
    }
    return s;
  };
  os << "artifact=" << kArtifactVersion << "\n";
  os << "map=" << r.map_name << "\n";
  os << "n=" << r.n << "\n";
  os << "samples=" << r.samples << "\n";
  os << "seed=" << r.seed << "\n";
  os << "probe=" << (r.probe.empty() ? "none" : r.probe) << "\n";
  os << "pairs=" << r.pair_count << "\n";
  os << "bound=" << fmt17(r.bound) << "\n";
  os << "max_distortion=" << fmt17(r.max_distortion) << "\n";
  os << "margin=" << fmt17(r.margin) << "\n";
  os << "argmax.src_dist=" << fmt17(r.argmax_src_dist) << "\n";
  os << "argmax.tgt_dist=" << fmt17(r.argmax_tgt_dist) << "\n";
  os << "argmax.src_a=" << coords(r.argmax_src_a) << "\n";
  os << "argmax.src_b=" << coords(r.argmax_src_b) << "\n";
  os << "argmax.tgt_a=" << coords(r.argmax_tgt_a) << "\n";
  os << "argmax.tgt_b=" << coords(r.argmax_tgt_b) << "\n";
}

bounds::Rect default_rect(std::string_view fn_name) {
  const bounds::BoundFunction* fn = bounds::find_bound(fn_name);
  if (!fn) throw Error("unknown function: " + std::string(fn_name));
  return fn->domain;
}

void emit_surface(std::string_view fn_name, bounds::Rect rect, std::size_t resolution,
                  std::ostream& os) {
  const bounds::BoundFunction* fn = bounds::find_bound(fn_name);
  if (!fn) throw Error("unknown function: " + std::string(fn_name));
  if (resolution < 2) throw Error("emit_surface: resolution must be >= 2");
  const double tol = 1e-9;
  if (rect.x_lo < fn->domain.x_lo - tol || rect.x_hi > fn->domain.x_hi + tol ||
      (!fn->one_dim &&
       (rect.y_lo < fn->domain.y_lo - tol || rect.y_hi > fn->domain.y_hi + tol))) {
    throw DomainError("emit_surface: rectangle outside the stated domain of " +
                      std::string(fn_name));
  }
  using detail::fmt17;
  os << "x,y,value\n";
  auto coord = [&](double lo, double hi, std::size_t i) {
    return lo + (hi - lo) * double(i) / double(resolution - 1);
  };
  if (fn->one_dim) {
    for (std::size_t i = 0; i < resolution; ++i) {
      double x = coord(rect.x_lo, rect.x_hi, i);
      os << fmt17(x) << ",0," << fmt17(fn->eval(x, 0)) << "\n";
    }
    return;
  }
  for (std::size_t iy = 0; iy < resolution; ++iy) {
    double y = coord(rect.y_lo, rect.y_hi, iy);
    for (std::size_t ix = 0; ix < resolution; ++ix) {
      double x = coord(rect.x_lo, rect.x_hi, ix);
      os << fmt17(x) << "," << fmt17(y) << "," << fmt17(fn->eval(x, y)) << "\n";
    }
  }
}

}  // namespace sgh
