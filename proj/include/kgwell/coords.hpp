#pragma once

/// \file coords.hpp
/// \brief Flat (t, x) and hyperbolic (rho, v) coordinates for the receding-wall well.
///
/// The well is [0, L(t)] with L(t) = L0 + nu (t - t0). All hyperbolic maps act
/// on the shifted time t' = t - t0 + L0/nu, which puts the tip of the forward
/// lightcone at the point where the wall worldline meets x = 0. In these
/// coordinates
///
///   t' = rho (v^2 + 1) / (2 v),   x = rho (v^2 - 1) / (2 v),
///
/// the left wall is v = 1 and the moving wall is the static line v = Lambda(nu).

namespace kgwell {

/// Wall speed, initial length and initial time of the receding wall.
/// Construction validates 0 < nu < 1 and L0 > 0.
class WallConfig {
 public:
  WallConfig(double nu, double L0, double t0);

  /// Configuration with t0 = L0 / nu, for which the shifted time equals t.
  static WallConfig lightcone_gauge(double nu, double L0);

  [[nodiscard]] double nu() const noexcept { return nu_; }
  [[nodiscard]] double L0() const noexcept { return L0_; }
  [[nodiscard]] double t0() const noexcept { return t0_; }

  /// t' = t - t0 + L0/nu.
  [[nodiscard]] double shifted_time(double t) const noexcept { return t - t0_ + L0_ / nu_; }
  /// Inverse of shifted_time.
  [[nodiscard]] double unshifted_time(double t_shifted) const noexcept {
    return t_shifted + t0_ - L0_ / nu_;
  }

 private:
  double nu_;
  double L0_;
  double t0_;
};

struct FlatPoint {
  double t;
  double x;
};

struct HypPoint {
  double rho;
  double v;
};

/// sqrt((1 + nu) / (1 - nu)); throws DomainError unless 0 < nu < 1.
double lambda_of_nu(double nu);

/// L(t) = L0 + nu (t - t0); throws DomainError for t < t0.
double wall_position(const WallConfig& cfg, double t);

/// Throws LightconeError unless t'(p.t) > |p.x|.
HypPoint flat_to_hyp(const WallConfig& cfg, FlatPoint p);

/// Throws DomainError for rho <= 0 or v <= 0.
FlatPoint hyp_to_flat(const WallConfig& cfg, HypPoint p);

/// True when 0 <= x <= L(t) and t >= t0, with a relative slack on the wall.
bool in_well(const WallConfig& cfg, FlatPoint p, double rel_tol = 1e-12);

}  // namespace kgwell
