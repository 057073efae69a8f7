#include <cmath>
#include <string>

#include "kgwell/errors.hpp"
#include "kgwell/products.hpp"
#include "kgwell/quadrature.hpp"
#include "kgwell/solver.hpp"
#include "solver_detail.hpp"

namespace kgwell {

namespace {

void check_strip_init(const StripSolverConfig& cfg, const ComplexField& init) {
  if (init.frame != Frame::hyperbolic) throw InitialDataError("strip solver needs hyperbolic-frame data");
  if (init.size() != cfg.n_u) throw InitialDataError("initial data length differs from n_u");
  validate_well_state(init, cfg.boundary_tol);
  const std::vector<double> expected = strip_grid(cfg.nu, cfg.n_u);
  const double du = expected[1] - expected[0];
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (std::abs(init.grid[i] - expected[i]) > 1e-9 * du) {
      throw InitialDataError("initial data is not sampled on the strip grid [0, ln Lambda]");
    }
  }
  const double rho0 = std::exp(cfg.tau_start);
  if (std::abs(init.stamp - rho0) > 1e-9 * rho0) {
    throw InitialDataError("initial data stamp differs from exp(tau_start)");
  }
}

DiagnosticSample strip_diagnostics(const ComplexField& f, double lambda) {
  const double du = f.spacing();
  std::vector<double> e(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    cplx du_psi;
    if (i == 0) {
      du_psi = (-3.0 * f.psi[0] + 4.0 * f.psi[1] - f.psi[2]) / (2.0 * du);
    } else if (i + 1 == f.size()) {
      du_psi = (3.0 * f.psi[i] - 4.0 * f.psi[i - 1] + f.psi[i - 2]) / (2.0 * du);
    } else {
      du_psi = (f.psi[i + 1] - f.psi[i - 1]) / (2.0 * du);
    }
    e[i] = std::norm(f.dpsi_dtime[i]) + std::norm(du_psi);
  }
  const auto m = detail::density_moments(f);
  return {f.stamp, kg_inner_hyp(f, f).real(), quad::simpson(e, du), lambda, m.centroid, m.width};
}

}  // namespace

std::vector<double> strip_grid(double nu, std::size_t n) {
  return uniform_grid(0.0, std::log(lambda_of_nu(nu)), n);
}

EvolutionRecord evolve_strip(const StripSolverConfig& cfg, const ComplexField& init) {
  detail::check_cfl(cfg.cfl);
  if (cfg.n_u < kMinFieldSize) throw InitialDataError("n_u too small");
  if (!(cfg.tau_end >= cfg.tau_start)) throw std::invalid_argument("tau_end precedes tau_start");
  if (!(cfg.mass >= 0.0)) throw DomainError("mass must be >= 0");
  check_strip_init(cfg, init);

  const double lambda = lambda_of_nu(cfg.nu);
  const std::vector<double> taus = detail::snapshot_schedule(cfg.snapshot_taus, cfg.tau_start, cfg.tau_end);
  const std::size_t n = cfg.n_u;
  const double du = init.spacing();
  const double inv_du2 = 1.0 / (du * du);
  const double dtau_max = cfg.cfl * du;
  const double m2 = cfg.mass * cfg.mass;
  const auto be = cfg.backend;

  std::vector<cplx> psi = init.psi;
  std::vector<cplx> pi = init.dpsi_dtime;
  std::vector<cplx> acc(n);
  psi.front() = psi.back() = 0.0;
  pi.front() = pi.back() = 0.0;

  double tau = cfg.tau_start;
  auto potential = [&](double t) { return m2 * std::exp(2.0 * t); };
  kernels::strip_acceleration(be, psi, acc, inv_du2, potential(tau));

  auto field = [&]() {
    ComplexField f;
    f.grid = init.grid;
    f.psi = psi;
    f.dpsi_dtime = pi;
    f.frame = Frame::hyperbolic;
    f.stamp = std::exp(tau);
    return f;
  };

  EvolutionRecord rec;
  rec.diagnostics.push_back(strip_diagnostics(field(), lambda));
  std::size_t step = 0;
  for (double target : taus) {
    const double span = target - tau;
    if (span > 0.0) {
      const auto steps = static_cast<std::size_t>(std::ceil(span / dtau_max - 1e-9));
      const double h = span / static_cast<double>(steps);
      const double start = tau;
      for (std::size_t s = 1; s <= steps; ++s) {
        kernels::accumulate(be, pi, 0.5 * h, acc);
        kernels::accumulate(be, psi, h, pi);
        tau = (s == steps) ? target : start + h * static_cast<double>(s);
        kernels::strip_acceleration(be, psi, acc, inv_du2, potential(tau));
        kernels::accumulate(be, pi, 0.5 * h, acc);
        if (cfg.diagnostics_every > 0 && ++step % cfg.diagnostics_every == 0) {
          detail::require_finite(psi, "strip evolution");
          rec.diagnostics.push_back(strip_diagnostics(field(), lambda));
        }
      }
    }
    rec.snapshots.push_back(field());
  }
  detail::require_finite(psi, "strip evolution");
  if (rec.diagnostics.back().time != std::exp(tau)) rec.diagnostics.push_back(strip_diagnostics(field(), lambda));
  return rec;
}

}  // namespace kgwell
