#include "cli/run.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "cli/cli_errors.hpp"
#include "cli/output.hpp"
#include "cli/run_config.hpp"
#include "cli/svg.hpp"
#include "kgwell/errors.hpp"
#include "kgwell/modes.hpp"
#include "kgwell/products.hpp"
#include "kgwell/solver.hpp"
#include "kgwell/wavepacket.hpp"

namespace kgwell::cli {

namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Timings {
  ordered_json entries = ordered_json::object();
  void record(const std::string& name, Clock::time_point since) {
    entries[name] = std::chrono::duration<double>(Clock::now() - since).count();
  }
};

std::string numbered(const std::string& stem, std::size_t i, const std::string& ext) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "_%03zu", i);
  return stem + buf + ext;
}

std::vector<double> abs_sq(const ComplexField& f) {
  std::vector<double> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = std::norm(f.psi[i]);
  return out;
}

ModeSpec mode_spec(const RunConfig& c) {
  ModeSpec s{c.n, c.mass, c.wall(), c.a_j, c.a_y, c.real_solution};
  validate(s);
  return s;
}

PacketSpec packet_spec(const RunConfig& c) {
  PacketSpec p{*c.p0, c.c, *c.x0, *c.t_start};
  validate(p);
  return p;
}

void add_snapshots(OutputSet& files, ordered_json& listing, const RunConfig& c,
                   const std::vector<ComplexField>& snaps, const std::string& coordinate,
                   const std::string& stamp_name, const std::string& stem = "snapshot") {
  for (std::size_t i = 0; i < snaps.size(); ++i) {
    const auto& f = snaps[i];
    const std::string name = numbered(stem, i, ".csv");
    files.add(name, snapshot_csv(f, coordinate));
    ordered_json e;
    e["file"] = name;
    e[stamp_name] = f.stamp;
    if (c.svg) {
      const std::string svg = numbered(stem, i, ".svg");
      files.add(svg, svg_line_plot(f.grid, abs_sq(f), "|psi|^2 at " + stamp_name + " = " + format_double(f.stamp),
                                   coordinate, "|psi|^2"));
      e["svg"] = svg;
    }
    listing.push_back(e);
  }
}

ordered_json norm_summary(const std::vector<DiagnosticSample>& d) {
  ordered_json j;
  if (d.empty()) return j;
  double drift = 0.0;
  for (const auto& s : d) drift = std::max(drift, std::abs(s.norm - d.front().norm));
  j["initial_norm"] = d.front().norm;
  j["final_norm"] = d.back().norm;
  j["max_relative_norm_drift"] = drift / std::abs(d.front().norm);
  j["initial_energy"] = d.front().energy;
  j["final_energy"] = d.back().energy;
  j["diagnostics_samples"] = d.size();
  return j;
}

// Interior local minima of |psi|^2.
std::size_t count_nodes(const std::vector<double>& a) {
  std::size_t n = 0;
  for (std::size_t i = 1; i + 1 < a.size(); ++i) {
    if (a[i] < a[i - 1] && a[i] <= a[i + 1]) ++n;
  }
  return n;
}

double linf_error(const ComplexField& got, const ComplexField& want) {
  double e = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) e = std::max(e, std::abs(got.psi[i] - want.psi[i]));
  return e;
}

MovingWallSolverConfig flat_solver(const RunConfig& c) {
  return {.wall = c.wall(),
          .n_xi = c.n_xi,
          .cfl = c.cfl,
          .t_start = *c.t_start,
          .t_end = *c.t_end,
          .mass = c.mass,
          .snapshot_times = c.snapshots,
          .diagnostics_every = c.diagnostics_every,
          .max_norm_growth = 0.10,
          .backend = c.backend,
          .boundary_tol = c.boundary_tol};
}

StripSolverConfig strip_solver(const RunConfig& c, std::vector<double> taus) {
  StripSolverConfig s;
  s.nu = c.nu;
  s.n_u = c.n_u;
  s.cfl = c.cfl;
  s.tau_start = std::log(*c.rho_start);
  s.tau_end = std::log(*c.rho_end);
  s.mass = c.mass;
  s.snapshot_taus = std::move(taus);
  s.diagnostics_every = c.diagnostics_every;
  s.backend = c.backend;
  s.boundary_tol = *c.strip_boundary_tol;
  return s;
}

void require_massless_packet(const RunConfig& c) {
  if (c.init == "packet" && c.mass != 0.0) {
    throw ConfigError("--m: the wavepacket is a massless solution; use --init mode for m > 0");
  }
}

ComplexField flat_initial(const RunConfig& c) {
  if (c.init == "mode") return sample_mode_flat(mode_spec(c), *c.t_start, c.n_xi);
  const double l = wall_position(c.wall(), *c.t_start);
  return sample_packet(packet_spec(c), *c.t_start, uniform_grid(0.0, l, c.n_xi));
}

ComplexField strip_initial(const RunConfig& c) {
  if (c.init == "mode") return sample_mode_hyp(mode_spec(c), *c.rho_start, c.n_u);
  return sample_packet_hyp(packet_spec(c), c.wall(), *c.rho_start, strip_grid(c.nu, c.n_u));
}

void run_modes(const RunConfig& c, OutputSet& files, ordered_json& results) {
  const ModeSpec spec = mode_spec(c);
  const ComplexField f = sample_mode_flat(spec, *c.t, c.points);
  files.add("profile.csv", snapshot_csv(f, "x"));
  if (c.svg) {
    char title[96];
    std::snprintf(title, sizeof title, "|psi_%d|^2 at t = %.6g, nu = %.6g", c.n, *c.t, c.nu);
    files.add("profile.svg", svg_line_plot(f.grid, abs_sq(f), title, "x", "|psi|^2"));
  }
  const auto a = abs_sq(f);
  results["k_n"] = k_of_n(spec);
  results["wall_position"] = wall_position(c.wall(), *c.t);
  results["interior_nodes"] = count_nodes(a);
  results["boundary_max_abs"] = std::max(std::abs(f.psi.front()), std::abs(f.psi.back()));
  results["kg_norm"] = kg_inner_flat(f, f).real();
}

void run_evolve_flat(const RunConfig& c, OutputSet& files, ordered_json& results, Timings& tm) {
  require_massless_packet(c);
  const ComplexField init = flat_initial(c);
  const auto t0 = Clock::now();
  const EvolutionRecord rec = evolve_moving_wall(flat_solver(c), init);
  tm.record("evolve_moving_wall", t0);
  ordered_json listing = ordered_json::array();
  add_snapshots(files, listing, c, rec.snapshots, "x", "t");
  files.add("diagnostics.csv", diagnostics_csv(rec.diagnostics));
  results = norm_summary(rec.diagnostics);
  if (c.init == "mode") {
    const ModeSpec spec = mode_spec(c);
    double e = 0.0;
    for (const auto& s : rec.snapshots) e = std::max(e, linf_error(s, sample_mode_flat(spec, s.stamp, s.size())));
    results["max_abs_error_vs_exact"] = e;
  }
  results["snapshots"] = listing;
}

void run_evolve_strip(const RunConfig& c, OutputSet& files, ordered_json& results, Timings& tm) {
  require_massless_packet(c);
  const ComplexField init = strip_initial(c);
  std::vector<double> taus;
  for (double r : c.snapshots) taus.push_back(std::log(r));
  const auto t0 = Clock::now();
  const EvolutionRecord rec = evolve_strip(strip_solver(c, taus), init);
  tm.record("evolve_strip", t0);
  ordered_json listing = ordered_json::array();
  add_snapshots(files, listing, c, rec.snapshots, "u", "rho");
  files.add("diagnostics.csv", diagnostics_csv(rec.diagnostics));
  results = norm_summary(rec.diagnostics);
  if (c.init == "mode") {
    const ModeSpec spec = mode_spec(c);
    double e = 0.0;
    for (const auto& s : rec.snapshots) e = std::max(e, linf_error(s, sample_mode_hyp(spec, s.stamp, s.size())));
    results["max_abs_error_vs_exact"] = e;
  }
  results["snapshots"] = listing;
}

void run_packet(const RunConfig& c, OutputSet& files, ordered_json& results) {
  const PacketSpec spec = packet_spec(c);
  results["amplitude"] = amplitude(spec);
  std::vector<ComplexField> snaps;
  ordered_json norms = ordered_json::array();
  for (double t : c.snapshots) {
    const double l = wall_position(c.wall(), t);
    snaps.push_back(sample_packet(spec, t, uniform_grid(0.0, l, c.points)));
    norms.push_back(kg_inner_flat(snaps.back(), snaps.back()).real());
  }
  ordered_json listing = ordered_json::array();
  add_snapshots(files, listing, c, snaps, "x", "t");
  results["kg_norm_inside_well"] = norms;
  results["snapshots"] = listing;
}

void run_compare(const RunConfig& c, OutputSet& files, ordered_json& results, Timings& tm) {
  require_massless_packet(c);
  const ComplexField flat_init = flat_initial(c);
  const ComplexField strip_init = strip_initial(c);
  const double tau0 = std::log(*c.rho_start), tau1 = std::log(*c.rho_end);
  std::vector<double> taus;
  const auto steps = static_cast<std::size_t>(std::ceil((tau1 - tau0) / c.strip_dtau));
  for (std::size_t i = 0; i <= steps; ++i) taus.push_back(std::min(tau1, tau0 + c.strip_dtau * double(i)));

  auto t0 = Clock::now();
  const EvolutionRecord flat = evolve_moving_wall(flat_solver(c), flat_init);
  tm.record("evolve_moving_wall", t0);
  t0 = Clock::now();
  const EvolutionRecord strip = evolve_strip(strip_solver(c, taus), strip_init);
  tm.record("evolve_strip", t0);
  t0 = Clock::now();
  const CrossValidationReport rep = cross_validate(strip, flat, c.wall());
  tm.record("cross_validate", t0);

  ordered_json listing = ordered_json::array();
  add_snapshots(files, listing, c, flat.snapshots, "x", "t");
  files.add("flat_diagnostics.csv", diagnostics_csv(flat.diagnostics));
  files.add("strip_diagnostics.csv", diagnostics_csv(strip.diagnostics));
  ordered_json cv;
  cv["direction"] = "strip record interpolated onto flat snapshots";
  cv["mean_discrepancy"] = rep.mean_discrepancy;
  cv["max_discrepancy"] = rep.max_discrepancy;
  cv["max_abs_discrepancy"] = rep.max_abs_discrepancy;
  cv["normalization"] = "| |psi_a|^2 - |psi_b|^2 | / peak |psi_b|^2 of the snapshot";
  cv["snapshots_compared"] = rep.snapshots_compared;
  cv["points_compared"] = rep.points_compared;
  results["cross_validation"] = cv;
  results["flat"] = norm_summary(flat.diagnostics);
  results["strip"] = norm_summary(strip.diagnostics);
  results["strip_snapshots_stored"] = strip.snapshots.size();
  results["snapshots"] = listing;
}

void run_redshift(RunConfig c, OutputSet& files, ordered_json& results, Timings& tm) {
  c.init = "packet";
  const ComplexField init = flat_initial(c);
  const auto t0 = Clock::now();
  const EvolutionRecord rec = evolve_moving_wall(flat_solver(c), init);
  tm.record("evolve_moving_wall", t0);
  const auto events = detect_reflections(rec);
  ordered_json listing = ordered_json::array();
  add_snapshots(files, listing, c, rec.snapshots, "x", "t");
  files.add("diagnostics.csv", diagnostics_csv(rec.diagnostics));

  const double expected = classical_bounce_ratio(c.nu);
  ordered_json ev = ordered_json::array();
  for (const auto& e : events) {
    ordered_json j;
    j["t_begin"] = e.t_begin;
    j["t_end"] = e.t_end;
    j["energy_before"] = e.energy_before;
    j["energy_after"] = e.energy_after;
    j["ratio"] = e.ratio();
    ev.push_back(j);
  }
  results = norm_summary(rec.diagnostics);
  results["reflections"] = ev;
  results["expected_energy_ratio"] = expected;
  if (!events.empty()) {
    const double r = events.front().ratio();
    results["measured_energy_ratio"] = r;
    results["relative_error"] = std::abs(r - expected) / expected;
    results["direction"] = r < 1.0 ? "decrease" : "increase";
    results["one_plus_z_as_inverse_ratio"] = 1.0 / r;
  } else {
    results["measured_energy_ratio"] = nullptr;
  }
  results["convention"] =
      "energy_after / energy_before = f_reflected / f_incident; the Doppler factor of a receding mirror "
      "is (1 - nu) / (1 + nu). Quoting 1 + z = f_incident / f_reflected gives (1 + nu) / (1 - nu).";
  results["snapshots"] = listing;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    int code = 0;
    std::string parser_output;
    auto parsed = parse_command_line(argc, argv, code, parser_output);
    if (!parsed) {
      (code == 0 ? out : err) << parser_output;
      return code;
    }
    RunConfig cfg = *parsed;
    resolve(cfg);

    OutputSet files;
    ordered_json results = ordered_json::object();
    Timings tm;
    const auto start = Clock::now();
    switch (cfg.scenario) {
      case Scenario::modes: run_modes(cfg, files, results); break;
      case Scenario::evolve_flat: run_evolve_flat(cfg, files, results, tm); break;
      case Scenario::evolve_strip: run_evolve_strip(cfg, files, results, tm); break;
      case Scenario::packet: run_packet(cfg, files, results); break;
      case Scenario::compare: run_compare(cfg, files, results, tm); break;
      case Scenario::redshift: run_redshift(cfg, files, results, tm); break;
    }
    tm.record("total", start);

    // Wall-clock data lives in its own file so metadata.json stays reproducible.
    ordered_json timings;
    timings["schema_version"] = 1;
    timings["seconds"] = tm.entries;
    timings["threads"] = kernels::max_threads();

    std::vector<std::string> names = files.names();
    names.push_back("metadata.json");
    names.push_back("timings.json");
    ordered_json meta;
    meta["schema_version"] = 1;
    meta["tool"] = "kgwell";
    meta["version"] = KGWELL_VERSION;
    meta["scenario"] = to_string(cfg.scenario);
    meta["config"] = to_json(cfg);
    meta["outputs"] = names;
    meta["timings_file"] = "timings.json";
    meta["results"] = results;
    files.add("metadata.json", json_text(meta));
    files.add("timings.json", json_text(timings));
    files.write_all(cfg.out_dir);

    out << to_string(cfg.scenario) << ": wrote " << names.size() << " files to " << cfg.out_dir << "\n";
    return kOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const InstabilityError& e) {
    err << "numerical instability: " << e.what() << "\n";
    return kNumericalError;
  } catch (const DegenerateError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kNumericalError;
  } catch (const OverflowError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kNumericalError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace kgwell::cli
