#pragma once

/// \file solver.hpp
/// \brief Time-domain evolution of the KG field in the receding-wall well.
///
/// Two independent engines:
///
///  * evolve_strip: hyperbolic log coordinates tau = ln rho, u = ln v, where
///    the well is the static strip u in [0, ln Lambda] and the equation is
///    Psi_tautau = Psi_uu - m^2 e^{2 tau} Psi (the mass term is the flat
///    m^2 Psi multiplied by rho^2). Velocity-Verlet leapfrog.
///  * evolve_moving_wall: flat time with xi = x / L(t) in [0, 1]; the
///    transformed equation is integrated as a first-order (psi, pi = psi_t at
///    fixed xi) system with centered differences and classical RK4.
///
/// cross_validate maps one record into the coordinates of another and
/// compares |psi|^2.

#include <cstddef>
#include <optional>
#include <vector>

#include "kgwell/coords.hpp"
#include "kgwell/field.hpp"
#include "kgwell/kernels.hpp"

namespace kgwell {

struct DiagnosticSample {
  double time;           // t (flat) or rho (strip)
  double norm;           // KG self-product
  double energy;         // <H> (flat) or int |psi_tau|^2 + |psi_u|^2 du (strip)
  double wall_position;  // L(t) (flat) or Lambda (strip)
  double centroid;       // |psi|^2-weighted mean of the space coordinate
  double width;          // |psi|^2-weighted standard deviation
};

struct EvolutionRecord {
  std::vector<ComplexField> snapshots;
  std::vector<DiagnosticSample> diagnostics;
};

struct StripSolverConfig {
  double nu = 0.5;
  std::size_t n_u = 1024;
  double cfl = 0.5;
  double tau_start = 0.0;
  double tau_end = 1.0;
  double mass = 0.0;
  /// Snapshot times in tau; empty means {tau_start, tau_end}.
  std::vector<double> snapshot_taus;
  std::size_t diagnostics_every = 16;
  kernels::Backend backend = kernels::Backend::openmp;
  double boundary_tol = kDefaultBoundaryTol;
};

struct MovingWallSolverConfig {
  WallConfig wall;
  std::size_t n_xi = 2048;
  double cfl = 0.5;
  double t_start = 0.0;
  double t_end = 1.0;
  double mass = 0.0;
  /// Snapshot times; empty means {t_start, t_end}.
  std::vector<double> snapshot_times;
  std::size_t diagnostics_every = 16;
  /// Relative growth of |KG norm| (or of the energy for zero-norm data) that aborts the run.
  double max_norm_growth = 0.10;
  kernels::Backend backend = kernels::Backend::openmp;
  double boundary_tol = kDefaultBoundaryTol;
};

/// u-grid [0, ln Lambda(nu)] with n points.
std::vector<double> strip_grid(double nu, std::size_t n);

/// init: hyperbolic frame on strip_grid(nu, n_u) at stamp rho = e^{tau_start},
/// with psi and rho d_rho psi. Throws CflError for cfl outside (0, 1],
/// InitialDataError for a mismatched or non-Dirichlet field.
EvolutionRecord evolve_strip(const StripSolverConfig& config, const ComplexField& init);

/// init: flat frame on n_xi uniform points over [0, L(t_start)] at stamp
/// t_start, with psi and d_t psi at fixed x. Snapshots are returned in the
/// same lab-frame form. Throws CflError for cfl outside (0, 1],
/// InitialDataError for bad data, InstabilityError on norm growth.
EvolutionRecord evolve_moving_wall(const MovingWallSolverConfig& config, const ComplexField& init);

struct CrossValidationReport {
  /// max over compared points of | |psi_a|^2 - |psi_b|^2 | / peak |psi_b|^2 of that snapshot.
  double max_discrepancy = 0.0;
  /// mean of the same quantity.
  double mean_discrepancy = 0.0;
  /// max absolute (unscaled) | |psi_a|^2 - |psi_b|^2 |.
  double max_abs_discrepancy = 0.0;
  std::size_t snapshots_compared = 0;
  std::size_t points_compared = 0;
};

/// Interpolates `source` (either frame) at every point of every snapshot of
/// `target` that lies fully inside the source's time coverage, and compares
/// |psi|^2. Interpolation is 4-point Lagrange in space and cubic Hermite in
/// time (using the stored time derivative). Throws OverlapError when no
/// target snapshot is covered.
CrossValidationReport cross_validate(const EvolutionRecord& source, const EvolutionRecord& target,
                                     const WallConfig& cfg);

/// Interpolated value of a record at a flat point, or nullopt when the point
/// lies outside the record's coverage.
std::optional<cplx> sample_record(const EvolutionRecord& record, const WallConfig& cfg, FlatPoint p);

/// Reflection off the receding wall, located from the diagnostics series.
struct ReflectionEvent {
  double t_begin;
  double t_end;
  double energy_before;
  double energy_after;
  [[nodiscard]] double ratio() const { return energy_after / energy_before; }
};

/// An event is a maximal run of diagnostics samples where the centroid lies
/// within `widths` packet widths of the moving wall. Energies are read at
/// the middle of the free-flight stretches before and after the run (bounded
/// by the neighbouring runs or the ends of the series). Runs touching the
/// ends of the series are dropped.
std::vector<ReflectionEvent> detect_reflections(const EvolutionRecord& flat_record, double widths = 3.0);

}  // namespace kgwell
