#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kgwell/coords.hpp"
#include "kgwell/field.hpp"
#include "kgwell/kernels.hpp"

namespace kgwell::cli {

enum class Scenario { modes, evolve_flat, evolve_strip, packet, compare, redshift };

std::string to_string(Scenario s);

/// Everything a run needs, after defaults have been resolved. Optional
/// inputs that depend on other parameters are filled by resolve().
struct RunConfig {
  Scenario scenario = Scenario::modes;

  // Physical parameters.
  double nu = 0.5;
  double L0 = 1.0;
  std::optional<double> t0;  // default: L0 / nu
  double mass = 0.0;
  int n = 1;
  cplx a_j{1.0, 0.0};
  cplx a_y{1.0, 0.0};
  bool real_solution = false;
  std::optional<double> p0;  // default: p0c / c
  double p0c = 8.0;
  double c = 0.07;
  std::optional<double> x0;  // default: well center at t_start

  // Numerical parameters.
  std::string init = "packet";  // or "mode" for the evolve/compare scenarios
  std::optional<double> t;      // modes: evaluation time, default t0
  std::size_t points = 2001;    // modes and packet grids
  std::size_t n_xi = 2048;
  std::size_t n_u = 1024;
  double cfl = 0.5;
  std::optional<double> t_start;
  std::optional<double> t_end;
  std::optional<double> rho_start;
  std::optional<double> rho_end;
  std::vector<double> snapshots;
  std::size_t snapshot_count = 11;
  std::size_t diagnostics_every = 8;
  double strip_dtau = 0.002;
  double boundary_tol = kDefaultBoundaryTol;
  std::optional<double> strip_boundary_tol;  // compare: default 1e-6
  kernels::Backend backend = kernels::Backend::openmp;

  // Output.
  std::string out_dir = "out";
  bool svg = false;

  [[nodiscard]] WallConfig wall() const { return {nu, L0, *t0}; }
};

/// Parses argv (argv[0] is the program name). A `--config FILE` argument is
/// expanded in place into the `key = value` lines of FILE, placed before the
/// remaining flags so that explicit flags win. Returns nullopt when the
/// parser handled the request itself (help); the exit code is then in
/// `exit_code`. Throws ConfigError on malformed input and IoError when the
/// config file cannot be read.
std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, int& exit_code,
                                            std::string& parser_output);

/// Fills defaults that depend on other parameters and validates every field
/// against the owning module's preconditions. Throws ConfigError naming the
/// field. Performs no I/O.
void resolve(RunConfig& cfg);

/// Resolved configuration as JSON (every physical and numerical parameter).
nlohmann::ordered_json to_json(const RunConfig& cfg);

}  // namespace kgwell::cli
