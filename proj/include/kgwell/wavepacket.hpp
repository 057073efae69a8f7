#pragma once

/// \file wavepacket.hpp
/// \brief Positive-frequency massless Gaussian wavepacket
///
///   psi(t, x) = A int dp exp(-c^2 (p - p0)^2 / 2 + i (p (x - x0) - |p| (t - t_ref))).

#include <cstddef>
#include <vector>

#include "kgwell/coords.hpp"
#include "kgwell/field.hpp"

namespace kgwell {

struct PacketSpec {
  double p0 = 0.0;
  double width_c = 1.0;
  double x0 = 0.0;
  double t_ref = 0.0;
};

/// Throws DomainError unless width_c > 0 and all fields are finite.
void validate(const PacketSpec& spec);

/// A = (c / (2 sqrt(pi))) (exp(-c^2 p0^2) + sqrt(pi) p0 c erf(p0 c))^{-1/2},
/// which makes the KG self-product exactly 1.
double amplitude(const PacketSpec& spec);

struct PacketValue {
  cplx psi;
  cplx dpsi_dt;
  cplx dpsi_dx;
};

/// Controls the panel Gauss-Legendre rule used by evaluate().
struct PacketQuadrature {
  /// Panels per oscillation of the phase over each side of p = 0.
  double panels_per_cycle = 2.0;
  /// Lower bound on panels per side.
  int min_panels = 8;
};

/// Evaluates the packet integral over p in [p0 - 10/c, p0 + 10/c], split at
/// p = 0, with 20-point Gauss-Legendre panels.
PacketValue evaluate(const PacketSpec& spec, FlatPoint p, const PacketQuadrature& q = {});

/// Free (wall-less) packet sampled at time t on the given grid, flat frame.
ComplexField sample_packet(const PacketSpec& spec, double t, const std::vector<double>& grid);

/// Free packet sampled on the hyperbola rho = const at the points u = ln v of
/// the grid, hyperbolic frame (dpsi_dtime = rho d_rho psi = t' psi_t + x psi_x).
ComplexField sample_packet_hyp(const PacketSpec& spec, const WallConfig& cfg, double rho,
                               const std::vector<double>& u_grid);

}  // namespace kgwell
