#include <algorithm>
#include <cmath>

#include "kgwell/errors.hpp"
#include "kgwell/solver.hpp"

namespace kgwell {

namespace {

struct Native {
  double time;   // t, or tau = ln rho
  double space;  // x, or u = ln v
};

double native_time(const ComplexField& f) {
  return f.frame == Frame::hyperbolic ? std::log(f.stamp) : f.stamp;
}

std::optional<Native> to_native(Frame frame, const WallConfig& cfg, FlatPoint p) {
  if (frame == Frame::flat) return Native{p.t, p.x};
  const double ts = cfg.shifted_time(p.t);
  if (!(ts - p.x > 0.0 && ts + p.x > 0.0)) return std::nullopt;
  const HypPoint h = flat_to_hyp(cfg, p);
  return Native{std::log(h.rho), std::log(h.v)};
}

struct Sample {
  cplx value;
  cplx dtime;
};

// Four-point Lagrange interpolation of psi and its time derivative at s.
// Outside the snapshot's grid the field is zero (outside the well).
Sample interpolate_space(const ComplexField& f, double s) {
  const std::size_t n = f.size();
  const double h = f.spacing();
  const double lo = f.grid.front();
  const double hi = f.grid.back();
  const double slack = 1e-9 * h;
  if (s < lo - slack || s > hi + slack) return {0.0, 0.0};
  s = std::clamp(s, lo, hi);
  auto cell = static_cast<std::ptrdiff_t>(std::floor((s - lo) / h));
  cell = std::clamp<std::ptrdiff_t>(cell, 0, static_cast<std::ptrdiff_t>(n) - 2);
  const auto first = static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(cell - 1, 0, static_cast<std::ptrdiff_t>(n) - 4));
  Sample out{0.0, 0.0};
  for (std::size_t a = first; a < first + 4; ++a) {
    double w = 1.0;
    for (std::size_t b = first; b < first + 4; ++b) {
      if (b != a) w *= (s - f.grid[b]) / (f.grid[a] - f.grid[b]);
    }
    out.value += w * f.psi[a];
    out.dtime += w * f.dpsi_dtime[a];
  }
  return out;
}

}  // namespace

std::optional<cplx> sample_record(const EvolutionRecord& record, const WallConfig& cfg, FlatPoint p) {
  const auto& snaps = record.snapshots;
  if (snaps.empty()) return std::nullopt;
  const auto native = to_native(snaps.front().frame, cfg, p);
  if (!native) return std::nullopt;
  const double T = native->time;
  const double t_first = native_time(snaps.front());
  const double t_last = native_time(snaps.back());
  const double slack = 1e-12 * (1.0 + std::abs(T));
  if (T < t_first - slack || T > t_last + slack) return std::nullopt;

  // First snapshot with time >= T.
  auto it = std::lower_bound(snaps.begin(), snaps.end(), T - slack,
                             [](const ComplexField& f, double v) { return native_time(f) < v; });
  if (it == snaps.end()) it = std::prev(snaps.end());
  if (std::abs(native_time(*it) - T) <= slack || it == snaps.begin()) {
    return interpolate_space(*it, native->space).value;
  }
  const ComplexField& a = *std::prev(it);
  const ComplexField& b = *it;
  const double ta = native_time(a);
  const double h = native_time(b) - ta;
  const double th = (T - ta) / h;
  const Sample sa = interpolate_space(a, native->space);
  const Sample sb = interpolate_space(b, native->space);
  const double th2 = th * th;
  const double th3 = th2 * th;
  const double h00 = 2.0 * th3 - 3.0 * th2 + 1.0;
  const double h10 = th3 - 2.0 * th2 + th;
  const double h01 = -2.0 * th3 + 3.0 * th2;
  const double h11 = th3 - th2;
  return h00 * sa.value + h10 * h * sa.dtime + h01 * sb.value + h11 * h * sb.dtime;
}

CrossValidationReport cross_validate(const EvolutionRecord& source, const EvolutionRecord& target,
                                     const WallConfig& cfg) {
  CrossValidationReport rep;
  double sum = 0.0;
  for (const ComplexField& snap : target.snapshots) {
    std::vector<cplx> mapped(snap.size());
    bool covered = true;
    for (std::size_t i = 0; i < snap.size() && covered; ++i) {
      const FlatPoint p = snap.frame == Frame::flat ? FlatPoint{snap.stamp, snap.grid[i]}
                                                    : hyp_to_flat(cfg, {snap.stamp, std::exp(snap.grid[i])});
      const auto v = sample_record(source, cfg, p);
      if (!v) {
        covered = false;
      } else {
        mapped[i] = *v;
      }
    }
    if (!covered) continue;
    double peak = 0.0;
    for (const cplx& z : snap.psi) peak = std::max(peak, std::norm(z));
    if (!(peak > 0.0)) continue;
    for (std::size_t i = 0; i < snap.size(); ++i) {
      const double diff = std::abs(std::norm(mapped[i]) - std::norm(snap.psi[i]));
      rep.max_abs_discrepancy = std::max(rep.max_abs_discrepancy, diff);
      rep.max_discrepancy = std::max(rep.max_discrepancy, diff / peak);
      sum += diff / peak;
    }
    rep.points_compared += snap.size();
    ++rep.snapshots_compared;
  }
  if (rep.snapshots_compared == 0) {
    throw OverlapError("no target snapshot lies inside the source record's coverage");
  }
  rep.mean_discrepancy = sum / static_cast<double>(rep.points_compared);
  return rep;
}

}  // namespace kgwell
