#include "kgwell/wavepacket.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>

#include "kgwell/errors.hpp"
#include "kgwell/kernels.hpp"
#include "kgwell/specfun.hpp"

namespace kgwell {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kWindow = 10.0;  // half-width of the momentum window in units of 1/c
using Rule = boost::math::quadrature::gauss<double, 20>;

struct Sums {
  cplx psi;
  cplx dt;
  cplx dx;
};

// Integrates one side of the |p| kink, where omega = sign * p.
void integrate_piece(const PacketSpec& s, double lo, double hi, double sign, double dx, double dt,
                     const PacketQuadrature& q, Sums& acc) {
  if (!(hi > lo)) return;
  const double cycles = (hi - lo) * (std::abs(dx) + std::abs(dt)) / (2.0 * kPi);
  const int panels = std::max(q.min_panels, static_cast<int>(std::ceil(q.panels_per_cycle * cycles)));
  const double width = (hi - lo) / panels;
  const auto& nodes = Rule::abscissa();
  const auto& weights = Rule::weights();
  const double c2 = s.width_c * s.width_c;

  auto add = [&](double p, double w) {
    const double omega = sign * p;
    const double env = std::exp(-0.5 * c2 * (p - s.p0) * (p - s.p0));
    const double phase = p * dx - omega * dt;
    const cplx e = w * env * cplx(std::cos(phase), std::sin(phase));
    acc.psi += e;
    acc.dt += cplx(0.0, -omega) * e;
    acc.dx += cplx(0.0, p) * e;
  };

  for (int k = 0; k < panels; ++k) {
    const double mid = lo + (k + 0.5) * width;
    const double half = 0.5 * width;
    // boost stores the non-negative half of the symmetric rule.
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i] == 0.0) {
        add(mid, half * weights[i]);
      } else {
        add(mid + half * nodes[i], half * weights[i]);
        add(mid - half * nodes[i], half * weights[i]);
      }
    }
  }
}

}  // namespace

void validate(const PacketSpec& spec) {
  if (!(spec.width_c > 0.0) || !std::isfinite(spec.width_c)) throw DomainError("packet width c must be > 0");
  if (!std::isfinite(spec.p0) || !std::isfinite(spec.x0) || !std::isfinite(spec.t_ref)) {
    throw DomainError("packet parameters must be finite");
  }
}

double amplitude(const PacketSpec& spec) {
  validate(spec);
  const double c = spec.width_c;
  const double a = spec.p0 * c;
  const double bracket = std::exp(-a * a) + std::sqrt(kPi) * a * specfun::erf(a);
  return c / (2.0 * std::sqrt(kPi)) / std::sqrt(bracket);
}

PacketValue evaluate(const PacketSpec& spec, FlatPoint p, const PacketQuadrature& q) {
  const double A = amplitude(spec);
  const double lo = spec.p0 - kWindow / spec.width_c;
  const double hi = spec.p0 + kWindow / spec.width_c;
  const double dx = p.x - spec.x0;
  const double dt = p.t - spec.t_ref;
  Sums acc{};
  if (lo < 0.0 && hi > 0.0) {
    integrate_piece(spec, lo, 0.0, -1.0, dx, dt, q, acc);
    integrate_piece(spec, 0.0, hi, 1.0, dx, dt, q, acc);
  } else {
    integrate_piece(spec, lo, hi, hi <= 0.0 ? -1.0 : 1.0, dx, dt, q, acc);
  }
  return {A * acc.psi, A * acc.dt, A * acc.dx};
}

ComplexField sample_packet(const PacketSpec& spec, double t, const std::vector<double>& grid) {
  validate(spec);
  ComplexField f;
  f.frame = Frame::flat;
  f.stamp = t;
  f.grid = grid;
  f.psi.resize(grid.size());
  f.dpsi_dtime.resize(grid.size());
  kernels::parallel_for(grid.size(), [&](std::size_t i) {
    const PacketValue v = evaluate(spec, {t, grid[i]});
    f.psi[i] = v.psi;
    f.dpsi_dtime[i] = v.dpsi_dt;
  });
  return f;
}

ComplexField sample_packet_hyp(const PacketSpec& spec, const WallConfig& cfg, double rho,
                               const std::vector<double>& u_grid) {
  validate(spec);
  if (!(rho > 0.0)) throw DomainError("hyperbolic sampling needs rho > 0");
  ComplexField f;
  f.frame = Frame::hyperbolic;
  f.stamp = rho;
  f.grid = u_grid;
  f.psi.resize(u_grid.size());
  f.dpsi_dtime.resize(u_grid.size());
  kernels::parallel_for(u_grid.size(), [&](std::size_t i) {
    const FlatPoint p = hyp_to_flat(cfg, {rho, std::exp(u_grid[i])});
    const PacketValue v = evaluate(spec, p);
    f.psi[i] = v.psi;
    f.dpsi_dtime[i] = cfg.shifted_time(p.t) * v.dpsi_dt + p.x * v.dpsi_dx;
  });
  return f;
}

}  // namespace kgwell
