#include "kgwell/coords.hpp"

#include <cmath>
#include <string>

#include "kgwell/errors.hpp"

namespace kgwell {

namespace {

void check_speed(double nu) {
  if (!(nu > 0.0 && nu < 1.0)) {
    throw DomainError("wall speed nu must satisfy 0 < nu < 1, got " + std::to_string(nu));
  }
}

}  // namespace

WallConfig::WallConfig(double nu, double L0, double t0) : nu_(nu), L0_(L0), t0_(t0) {
  check_speed(nu);
  if (!(L0 > 0.0) || !std::isfinite(L0)) {
    throw DomainError("initial length L0 must be positive, got " + std::to_string(L0));
  }
  if (!std::isfinite(t0)) throw DomainError("initial time t0 must be finite");
}

WallConfig WallConfig::lightcone_gauge(double nu, double L0) {
  check_speed(nu);
  return WallConfig(nu, L0, L0 / nu);
}

double lambda_of_nu(double nu) {
  check_speed(nu);
  return std::sqrt((1.0 + nu) / (1.0 - nu));
}

double wall_position(const WallConfig& cfg, double t) {
  if (t < cfg.t0()) {
    throw DomainError("time precedes the initial time t0");
  }
  return cfg.L0() + cfg.nu() * (t - cfg.t0());
}

HypPoint flat_to_hyp(const WallConfig& cfg, FlatPoint p) {
  const double ts = cfg.shifted_time(p.t);
  const double plus = ts + p.x;
  const double minus = ts - p.x;
  if (!(plus > 0.0 && minus > 0.0)) {
    throw LightconeError("point is not strictly inside the forward lightcone (t'^2 <= x^2)");
  }
  // Factored form keeps rho accurate near the lightcone.
  const double rho = std::sqrt(plus * minus);
  return {rho, std::sqrt(plus / minus)};
}

FlatPoint hyp_to_flat(const WallConfig& cfg, HypPoint p) {
  if (!(p.rho > 0.0)) throw DomainError("rho must be positive");
  if (!(p.v > 0.0)) throw DomainError("v must be positive");
  const double ts = 0.5 * p.rho * (p.v + 1.0 / p.v);
  const double x = 0.5 * p.rho * (p.v - 1.0 / p.v);
  return {cfg.unshifted_time(ts), x};
}

bool in_well(const WallConfig& cfg, FlatPoint p, double rel_tol) {
  if (p.t < cfg.t0()) return false;
  const double L = wall_position(cfg, p.t);
  return p.x >= -rel_tol * L && p.x <= L * (1.0 + rel_tol);
}

}  // namespace kgwell
