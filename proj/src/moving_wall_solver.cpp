#include <cmath>
#include <sstream>

#include "kgwell/errors.hpp"
#include "kgwell/products.hpp"
#include "kgwell/solver.hpp"
#include "solver_detail.hpp"

namespace kgwell {

namespace {

// d/dxi on a uniform grid: fourth order inside, second order at and next to the ends.
std::vector<cplx> xi_derivative(const std::vector<cplx>& f, double h) {
  const std::size_t n = f.size();
  std::vector<cplx> d(n);
  d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
  d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
  d[1] = (f[2] - f[0]) / (2.0 * h);
  d[n - 2] = (f[n - 1] - f[n - 3]) / (2.0 * h);
  for (std::size_t j = 2; j + 2 < n; ++j) {
    d[j] = (f[j - 2] - 8.0 * f[j - 1] + 8.0 * f[j + 1] - f[j + 2]) / (12.0 * h);
  }
  return d;
}

struct State {
  std::vector<cplx> psi;
  std::vector<cplx> pi;  // d_t psi at fixed xi
};

}  // namespace

EvolutionRecord evolve_moving_wall(const MovingWallSolverConfig& cfg, const ComplexField& init) {
  detail::check_cfl(cfg.cfl);
  const WallConfig& wall = cfg.wall;
  const std::size_t n = cfg.n_xi;
  if (n < kMinFieldSize) throw InitialDataError("n_xi too small");
  if (!(cfg.t_end >= cfg.t_start)) throw std::invalid_argument("t_end precedes t_start");
  if (!(cfg.mass >= 0.0)) throw DomainError("mass must be >= 0");
  const double L_start = wall_position(wall, cfg.t_start);

  if (init.frame != Frame::flat) throw InitialDataError("moving-wall solver needs flat-frame data");
  if (init.size() != n) throw InitialDataError("initial data length differs from n_xi");
  validate_well_state(init, cfg.boundary_tol);
  if (std::abs(init.grid.front()) > 1e-12 * L_start || std::abs(init.grid.back() - L_start) > 1e-9 * L_start) {
    throw InitialDataError("initial data is not sampled on [0, L(t_start)]");
  }
  if (std::abs(init.stamp - cfg.t_start) > 1e-9 * (1.0 + std::abs(cfg.t_start))) {
    throw InitialDataError("initial data stamp differs from t_start");
  }

  const double dxi = 1.0 / static_cast<double>(n - 1);
  const double nu = wall.nu();
  const auto be = cfg.backend;
  std::vector<double> xi(n);
  for (std::size_t j = 0; j < n; ++j) xi[j] = dxi * static_cast<double>(j);
  xi.back() = 1.0;

  // Lab d_t psi -> pi = d_t psi + xi nu psi_x = d_t psi + (xi nu / L) psi_xi.
  State y{init.psi, init.dpsi_dtime};
  {
    const std::vector<cplx> dxi_psi = xi_derivative(y.psi, dxi);
    for (std::size_t j = 0; j < n; ++j) y.pi[j] += xi[j] * nu / L_start * dxi_psi[j];
  }
  y.psi.front() = y.psi.back() = 0.0;
  y.pi.front() = y.pi.back() = 0.0;

  double t = cfg.t_start;
  auto lab_field = [&]() {
    const double L = wall_position(wall, t);
    ComplexField f;
    f.frame = Frame::flat;
    f.stamp = t;
    f.grid.resize(n);
    for (std::size_t j = 0; j < n; ++j) f.grid[j] = xi[j] * L;
    f.psi = y.psi;
    f.dpsi_dtime = y.pi;
    const std::vector<cplx> dxi_psi = xi_derivative(y.psi, dxi);
    for (std::size_t j = 0; j < n; ++j) f.dpsi_dtime[j] -= xi[j] * nu / L * dxi_psi[j];
    return f;
  };
  auto diagnostics = [&](const ComplexField& f) {
    const auto m = detail::density_moments(f);
    return DiagnosticSample{t,
                            kg_inner_flat(f, f).real(),
                            energy_expectation(f).value,
                            wall_position(wall, t),
                            m.centroid,
                            m.width};
  };

  EvolutionRecord rec;
  rec.diagnostics.push_back(diagnostics(lab_field()));
  const double norm0 = std::abs(rec.diagnostics.front().norm);
  const double energy0 = std::abs(rec.diagnostics.front().energy);
  const bool use_norm = norm0 > 1e-8 * std::max(1.0, energy0);
  auto check_growth = [&](const DiagnosticSample& d) {
    const double ref = use_norm ? norm0 : energy0;
    const double now = use_norm ? std::abs(d.norm) : std::abs(d.energy);
    if (!std::isfinite(now) || now > (1.0 + cfg.max_norm_growth) * ref) {
      std::ostringstream msg;
      msg << "moving-wall evolution unstable at t = " << t << ": " << (use_norm ? "KG norm" : "energy")
          << " grew from " << ref << " to " << now << " (limit " << 100.0 * cfg.max_norm_growth
          << "%); reduce cfl or refine n_xi";
      throw InstabilityError(msg.str());
    }
  };

  State stage{std::vector<cplx>(n), std::vector<cplx>(n)};
  State next{std::vector<cplx>(n), std::vector<cplx>(n)};
  State k{std::vector<cplx>(n), std::vector<cplx>(n)};
  auto rhs = [&](const State& s, double time, State& out) {
    kernels::MovingWallCoeffs c{dxi, wall_position(wall, time), nu, cfg.mass};
    kernels::moving_wall_rhs(be, s.psi, s.pi, out.psi, out.pi, c);
  };
  auto rk4_step = [&](double h) {
    next.psi = y.psi;
    next.pi = y.pi;
    constexpr double kStage[3] = {0.5, 0.5, 1.0};
    constexpr double kWeight[4] = {1.0 / 6.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0};
    const double stage_time[4] = {t, t + 0.5 * h, t + 0.5 * h, t + h};
    rhs(y, stage_time[0], k);
    for (int s = 0; s < 4; ++s) {
      if (s > 0) rhs(stage, stage_time[s], k);
      kernels::accumulate(be, next.psi, kWeight[s] * h, k.psi);
      kernels::accumulate(be, next.pi, kWeight[s] * h, k.pi);
      if (s < 3) {
        kernels::axpy(be, y.psi, kStage[s] * h, k.psi, stage.psi);
        kernels::axpy(be, y.pi, kStage[s] * h, k.pi, stage.pi);
      }
    }
    std::swap(y.psi, next.psi);
    std::swap(y.pi, next.pi);
  };

  const std::vector<double> times = detail::snapshot_schedule(cfg.snapshot_times, cfg.t_start, cfg.t_end);
  std::size_t step = 0;
  for (double target : times) {
    while (target - t > 1e-14 * (1.0 + std::abs(target))) {
      const double h_max = cfg.cfl * dxi * wall_position(wall, t) / (1.0 + nu);
      const double remaining = target - t;
      const double steps_left = std::ceil(remaining / h_max - 1e-9);
      const double h = remaining / steps_left;
      rk4_step(h);
      t = (steps_left <= 1.0) ? target : t + h;
      if (cfg.diagnostics_every > 0 && ++step % cfg.diagnostics_every == 0) {
        detail::require_finite(y.psi, "moving-wall evolution");
        rec.diagnostics.push_back(diagnostics(lab_field()));
        check_growth(rec.diagnostics.back());
      }
    }
    t = target;
    rec.snapshots.push_back(lab_field());
  }
  detail::require_finite(y.psi, "moving-wall evolution");
  if (rec.diagnostics.back().time != t) {
    rec.diagnostics.push_back(diagnostics(lab_field()));
    check_growth(rec.diagnostics.back());
  }
  return rec;
}

}  // namespace kgwell
