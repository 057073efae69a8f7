#include "cli/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "cli/cli_errors.hpp"
#include "cli/rational.hpp"

namespace kgwell::cli {

namespace {

const std::vector<std::string> kScenarioNames = {"modes", "evolve-flat", "evolve-strip",
                                                 "packet", "compare", "redshift"};

using Raw = std::map<std::string, std::string>;

struct Registry {
  Raw values;
  bool svg = false;
  bool real = false;
};

void add(CLI::App* app, Registry& r, const std::string& name, const std::string& help) {
  app->add_option("--" + name, r.values[name], help);
}

void add_wall(CLI::App* app, Registry& r) {
  add(app, r, "nu", "wall speed, 0 < nu < 1 (rational allowed, e.g. 49/50)");
  add(app, r, "L0", "wall position at t0 (default 1)");
  add(app, r, "t0", "time at which the wall is at L0 (default L0/nu)");
}

void add_mode(CLI::App* app, Registry& r) {
  add(app, r, "n", "mode number (default 1)");
  add(app, r, "m", "mass (default 0)");
  add(app, r, "a-j", "coefficient of J in the massive radial factor, 're' or 're,im' (default 1)");
  add(app, r, "a-y", "coefficient of Y in the massive radial factor, 're' or 're,im' (default 1)");
  app->add_flag("--real", r.real, "use the real part of the mode");
}

void add_packet(CLI::App* app, Registry& r) {
  add(app, r, "p0", "packet central momentum (default p0c/c)");
  add(app, r, "p0c", "p0 * c when p0 is not given (default 8)");
  add(app, r, "c", "packet momentum width parameter (default 0.07)");
  add(app, r, "x0", "packet center at t-start (default: well center)");
}

void add_time_span(CLI::App* app, Registry& r) {
  add(app, r, "t-start", "start time (default t0)");
  add(app, r, "t-end", "end time (default: scenario dependent)");
  add(app, r, "snapshots", "comma-separated snapshot times");
  add(app, r, "snapshot-count", "evenly spaced snapshots when --snapshots is absent (default 11)");
}

void add_evolution(CLI::App* app, Registry& r) {
  add(app, r, "init", "initial data: packet or mode (default packet)");
  add(app, r, "cfl", "Courant number in (0, 1] (default 0.5)");
  add(app, r, "diagnostics-every", "steps between diagnostics samples (default 8)");
  add(app, r, "boundary-tol", "largest |psi| accepted on the walls in initial data (default 1e-10)");
  add(app, r, "backend", "kernel backend: openmp or serial (default openmp)");
}

void add_flat(CLI::App* app, Registry& r) { add(app, r, "n-xi", "grid points in xi = x/L(t) (default 2048)"); }

void add_strip(CLI::App* app, Registry& r) {
  add(app, r, "n-u", "grid points in u = ln v (default 1024)");
  add(app, r, "rho-start", "initial hyperbola rho (default: chosen from the initial data)");
  add(app, r, "rho-end", "final hyperbola rho (default: covers t-end)");
  add(app, r, "strip-boundary-tol", "boundary tolerance for strip initial data (default 1e-6 for packets)");
}

void add_output(CLI::App* app, Registry& r) {
  add(app, r, "out", "output directory (default out)");
  app->add_flag("--svg", r.svg, "also write SVG plots of |psi|^2");
}

void add_points(CLI::App* app, Registry& r) { add(app, r, "points", "grid points (default 2001)"); }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// key = value lines become --key=value tokens.
std::vector<std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("--config: cannot read '" + path + "'");
  std::vector<std::string> tokens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("--config: " + path + ":" + std::to_string(lineno) + ": expected 'key = value'");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key.empty()) throw ConfigError("--config: " + path + ":" + std::to_string(lineno) + ": empty key");
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    tokens.push_back("--" + key + "=" + value);
  }
  return tokens;
}

double number(const Raw& raw, const std::string& key, double fallback) {
  const auto it = raw.find(key);
  if (it == raw.end() || it->second.empty()) return fallback;
  return parse_rational(it->second, "--" + key);
}

std::optional<double> maybe_number(const Raw& raw, const std::string& key) {
  const auto it = raw.find(key);
  if (it == raw.end() || it->second.empty()) return std::nullopt;
  return parse_rational(it->second, "--" + key);
}

long long integer(const Raw& raw, const std::string& key, long long fallback) {
  const auto it = raw.find(key);
  if (it == raw.end() || it->second.empty()) return fallback;
  const std::string s = trim(it->second);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ConfigError("--" + key + ": expected an integer, got '" + it->second + "'");
  }
  return v;
}

std::size_t count(const Raw& raw, const std::string& key, std::size_t fallback) {
  const long long v = integer(raw, key, static_cast<long long>(fallback));
  if (v < 0) throw ConfigError("--" + key + ": must be nonnegative (got " + std::to_string(v) + ")");
  return static_cast<std::size_t>(v);
}

cplx coefficient(const Raw& raw, const std::string& key) {
  const auto it = raw.find(key);
  if (it == raw.end() || it->second.empty()) return {1.0, 0.0};
  const std::string& s = it->second;
  const auto comma = s.find(',');
  if (comma == std::string::npos) return {parse_rational(s, "--" + key), 0.0};
  return {parse_rational(s.substr(0, comma), "--" + key), parse_rational(s.substr(comma + 1), "--" + key)};
}

std::vector<double> number_list(const Raw& raw, const std::string& key) {
  std::vector<double> out;
  const auto it = raw.find(key);
  if (it == raw.end() || it->second.empty()) return out;
  std::stringstream ss(it->second);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (trim(item).empty()) continue;
    out.push_back(parse_rational(item, "--" + key));
  }
  return out;
}

std::string value_text(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

[[noreturn]] void reject(const std::string& field, const std::string& rule, double got) {
  throw ConfigError("--" + field + ": must satisfy " + rule + " (got " + value_text(got) + ")");
}

std::vector<double> even_spacing(double a, double b, std::size_t count) {
  if (count <= 1) return {b};
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  out.back() = b;
  return out;
}

void check_snapshots(const std::vector<double>& s, double a, double b, const std::string& what) {
  for (double v : s) {
    if (v < a - 1e-12 * (1.0 + std::abs(a)) || v > b + 1e-12 * (1.0 + std::abs(b))) {
      throw ConfigError("--snapshots: " + what + " " + value_text(v) + " lies outside the evolution span [" +
                        value_text(a) + ", " + value_text(b) + "]");
    }
  }
}

bool uses_flat_span(Scenario s) {
  return s == Scenario::evolve_flat || s == Scenario::packet || s == Scenario::compare ||
         s == Scenario::redshift || s == Scenario::evolve_strip;
}

bool uses_strip(Scenario s) { return s == Scenario::evolve_strip || s == Scenario::compare; }

bool packet_init(const RunConfig& c) {
  return c.scenario == Scenario::packet || c.scenario == Scenario::redshift || c.init == "packet";
}

}  // namespace

std::string to_string(Scenario s) { return kScenarioNames.at(static_cast<std::size_t>(s)); }

std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, int& exit_code,
                                            std::string& parser_output) {
  std::vector<std::string> args;
  std::vector<std::string> from_file;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--config") {
      if (i + 1 >= argc) throw ConfigError("--config: missing file name");
      const auto t = read_config_file(argv[++i]);
      from_file.insert(from_file.end(), t.begin(), t.end());
    } else if (a.rfind("--config=", 0) == 0) {
      const auto t = read_config_file(a.substr(9));
      from_file.insert(from_file.end(), t.begin(), t.end());
    } else {
      args.push_back(a);
    }
  }
  // File values go right after the subcommand so later command-line flags override them.
  auto sub = std::find_if(args.begin(), args.end(), [](const std::string& a) {
    return std::find(kScenarioNames.begin(), kScenarioNames.end(), a) != kScenarioNames.end();
  });
  if (sub != args.end()) args.insert(sub + 1, from_file.begin(), from_file.end());

  CLI::App app{"Klein-Gordon field in a well with one receding wall", "kgwell"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_version_flag("--version", KGWELL_VERSION);

  std::map<std::string, Registry> reg;
  auto make = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    return s;
  };

  CLI::App* modes = make("modes", "sample an exact mode on the well at time t");
  add_wall(modes, reg["modes"]);
  add_mode(modes, reg["modes"]);
  add(modes, reg["modes"], "t", "evaluation time (default t0)");
  add_points(modes, reg["modes"]);
  add_output(modes, reg["modes"]);

  CLI::App* flat = make("evolve-flat", "evolve in flat coordinates with the moving wall");
  add_wall(flat, reg["evolve-flat"]);
  add_mode(flat, reg["evolve-flat"]);
  add_packet(flat, reg["evolve-flat"]);
  add_time_span(flat, reg["evolve-flat"]);
  add_evolution(flat, reg["evolve-flat"]);
  add_flat(flat, reg["evolve-flat"]);
  add_output(flat, reg["evolve-flat"]);

  CLI::App* strip = make("evolve-strip", "evolve in hyperbolic log coordinates on the static strip");
  add_wall(strip, reg["evolve-strip"]);
  add_mode(strip, reg["evolve-strip"]);
  add_packet(strip, reg["evolve-strip"]);
  add_time_span(strip, reg["evolve-strip"]);
  add_evolution(strip, reg["evolve-strip"]);
  add_strip(strip, reg["evolve-strip"]);
  add_output(strip, reg["evolve-strip"]);

  CLI::App* packet = make("packet", "sample the free Gaussian wavepacket");
  add_wall(packet, reg["packet"]);
  add_packet(packet, reg["packet"]);
  add_time_span(packet, reg["packet"]);
  add_points(packet, reg["packet"]);
  add_output(packet, reg["packet"]);

  CLI::App* compare = make("compare", "evolve with both solvers and compare |psi|^2");
  add_wall(compare, reg["compare"]);
  add_mode(compare, reg["compare"]);
  add_packet(compare, reg["compare"]);
  add_time_span(compare, reg["compare"]);
  add_evolution(compare, reg["compare"]);
  add_flat(compare, reg["compare"]);
  add_strip(compare, reg["compare"]);
  add(compare, reg["compare"], "strip-dtau", "tau spacing of stored strip snapshots (default 0.002)");
  add_output(compare, reg["compare"]);

  CLI::App* redshift = make("redshift", "measure the energy change of a packet reflecting off the wall");
  add_wall(redshift, reg["redshift"]);
  add_packet(redshift, reg["redshift"]);
  add_time_span(redshift, reg["redshift"]);
  add(redshift, reg["redshift"], "cfl", "Courant number in (0, 1] (default 0.5)");
  add(redshift, reg["redshift"], "diagnostics-every", "steps between diagnostics samples (default 8)");
  add(redshift, reg["redshift"], "backend", "kernel backend: openmp or serial (default openmp)");
  add_flat(redshift, reg["redshift"]);
  add_output(redshift, reg["redshift"]);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    parser_output = out.str() + err.str();
    exit_code = code == 0 ? 0 : 2;
    return std::nullopt;
  }

  RunConfig cfg;
  std::string chosen;
  for (std::size_t i = 0; i < kScenarioNames.size(); ++i) {
    if (app.got_subcommand(kScenarioNames[i])) {
      chosen = kScenarioNames[i];
      cfg.scenario = static_cast<Scenario>(i);
    }
  }
  const Registry& r = reg.at(chosen);
  const Raw& raw = r.values;

  cfg.nu = number(raw, "nu", cfg.nu);
  cfg.L0 = number(raw, "L0", cfg.L0);
  cfg.t0 = maybe_number(raw, "t0");
  cfg.mass = number(raw, "m", cfg.mass);
  cfg.n = static_cast<int>(integer(raw, "n", cfg.n));
  cfg.a_j = coefficient(raw, "a-j");
  cfg.a_y = coefficient(raw, "a-y");
  cfg.real_solution = r.real;
  cfg.p0 = maybe_number(raw, "p0");
  cfg.p0c = number(raw, "p0c", cfg.p0c);
  cfg.c = number(raw, "c", cfg.c);
  cfg.x0 = maybe_number(raw, "x0");
  if (auto it = raw.find("init"); it != raw.end() && !it->second.empty()) cfg.init = trim(it->second);
  cfg.t = maybe_number(raw, "t");
  cfg.points = count(raw, "points", cfg.points);
  cfg.n_xi = count(raw, "n-xi", cfg.n_xi);
  cfg.n_u = count(raw, "n-u", cfg.n_u);
  cfg.cfl = number(raw, "cfl", cfg.cfl);
  cfg.t_start = maybe_number(raw, "t-start");
  cfg.t_end = maybe_number(raw, "t-end");
  cfg.rho_start = maybe_number(raw, "rho-start");
  cfg.rho_end = maybe_number(raw, "rho-end");
  cfg.snapshots = number_list(raw, "snapshots");
  cfg.snapshot_count = count(raw, "snapshot-count", cfg.snapshot_count);
  cfg.diagnostics_every = count(raw, "diagnostics-every", cfg.diagnostics_every);
  cfg.strip_dtau = number(raw, "strip-dtau", cfg.strip_dtau);
  cfg.boundary_tol = number(raw, "boundary-tol", cfg.boundary_tol);
  cfg.strip_boundary_tol = maybe_number(raw, "strip-boundary-tol");
  if (auto it = raw.find("backend"); it != raw.end() && !it->second.empty()) {
    const std::string b = trim(it->second);
    if (b == "openmp") {
      cfg.backend = kernels::Backend::openmp;
    } else if (b == "serial") {
      cfg.backend = kernels::Backend::serial;
    } else {
      throw ConfigError("--backend: expected openmp or serial, got '" + b + "'");
    }
  }
  if (auto it = raw.find("out"); it != raw.end() && !it->second.empty()) cfg.out_dir = it->second;
  cfg.svg = r.svg;
  exit_code = 0;
  return cfg;
}

void resolve(RunConfig& c) {
  if (!(c.nu > 0.0 && c.nu < 1.0)) reject("nu", "0 < nu < 1", c.nu);
  if (!(c.L0 > 0.0)) reject("L0", "L0 > 0", c.L0);
  if (!c.t0) c.t0 = c.L0 / c.nu;
  if (!std::isfinite(*c.t0)) reject("t0", "a finite value", *c.t0);
  if (c.n < 1) reject("n", "n >= 1", c.n);
  if (!(c.mass >= 0.0)) reject("m", "m >= 0", c.mass);
  if (c.init != "packet" && c.init != "mode") {
    throw ConfigError("--init: expected packet or mode, got '" + c.init + "'");
  }
  if (!(c.c > 0.0)) reject("c", "c > 0", c.c);
  if (!c.p0) c.p0 = c.p0c / c.c;
  if (c.points < kMinFieldSize) reject("points", ">= 8", static_cast<double>(c.points));
  if (c.n_xi < kMinFieldSize) reject("n-xi", ">= 8", static_cast<double>(c.n_xi));
  if (c.n_u < kMinFieldSize) reject("n-u", ">= 8", static_cast<double>(c.n_u));
  if (!(c.cfl > 0.0 && c.cfl <= 1.0)) reject("cfl", "0 < cfl <= 1", c.cfl);
  if (c.snapshot_count < 1) reject("snapshot-count", ">= 1", 0.0);
  if (c.diagnostics_every < 1) reject("diagnostics-every", ">= 1", 0.0);
  if (!(c.strip_dtau > 0.0)) reject("strip-dtau", "> 0", c.strip_dtau);
  if (!(c.boundary_tol > 0.0)) reject("boundary-tol", "> 0", c.boundary_tol);
  const WallConfig wall = c.wall();
  const double lambda = lambda_of_nu(c.nu);

  if (c.scenario == Scenario::modes) {
    if (!c.t) c.t = *c.t0;
    if (!(*c.t >= *c.t0)) reject("t", "t >= t0 = " + value_text(*c.t0), *c.t);
    return;
  }

  if (!uses_flat_span(c.scenario)) return;
  if (!c.t_start) c.t_start = *c.t0;
  if (!(*c.t_start >= *c.t0)) reject("t-start", "t-start >= t0 = " + value_text(*c.t0), *c.t_start);
  const double l_start = wall_position(wall, *c.t_start);
  if (!c.x0) c.x0 = 0.5 * l_start;
  if (packet_init(c) && !(*c.x0 > 0.0 && *c.x0 < l_start)) {
    reject("x0", "0 < x0 < L(t-start) = " + value_text(l_start), *c.x0);
  }

  const double ts = wall.shifted_time(*c.t_start);
  if (!c.t_end) {
    if (packet_init(c) && *c.p0 > 0.0) {
      // Right-moving packet on x = t' - a meets the wall at t' = a / (1 - nu);
      // stop before the reflected packet returns to x = 0 at (1 + nu) times that.
      const double hit = (ts - *c.x0) / (1.0 - c.nu);
      c.t_end = wall.unshifted_time(hit * (1.0 + 0.8 * c.nu));
    } else {
      c.t_end = *c.t_start + 4.0 * c.L0;
    }
  }
  if (!(*c.t_end > *c.t_start)) reject("t-end", "t-end > t-start = " + value_text(*c.t_start), *c.t_end);

  if (c.scenario != Scenario::evolve_strip) {
    if (c.snapshots.empty()) {
      c.snapshots = even_spacing(*c.t_start, *c.t_end, c.snapshot_count);
    } else {
      check_snapshots(c.snapshots, *c.t_start, *c.t_end, "time");
    }
    std::sort(c.snapshots.begin(), c.snapshots.end());
  }

  if (!uses_strip(c.scenario)) return;
  if (!c.strip_boundary_tol) c.strip_boundary_tol = packet_init(c) ? 1e-6 : c.boundary_tol;
  if (!(*c.strip_boundary_tol > 0.0)) reject("strip-boundary-tol", "> 0", *c.strip_boundary_tol);
  if (!c.rho_start) {
    if (packet_init(c) && *c.p0 > 0.0) {
      // Hyperbola on which the packet line x = t' - a is equally far from both walls.
      c.rho_start = 2.0 * (ts - *c.x0) / (1.0 + 1.0 / lambda);
    } else {
      c.rho_start = ts * std::sqrt(1.0 - c.nu * c.nu);
    }
  }
  if (!(*c.rho_start > 0.0)) reject("rho-start", "rho-start > 0", *c.rho_start);
  if (!c.rho_end) c.rho_end = 1.02 * wall.shifted_time(*c.t_end);
  if (!(*c.rho_end > *c.rho_start)) {
    reject("rho-end", "rho-end > rho-start = " + value_text(*c.rho_start), *c.rho_end);
  }
  if (c.scenario == Scenario::evolve_strip) {
    if (c.snapshots.empty()) {
      c.snapshots = even_spacing(*c.rho_start, *c.rho_end, c.snapshot_count);
    } else {
      check_snapshots(c.snapshots, *c.rho_start, *c.rho_end, "rho");
    }
    std::sort(c.snapshots.begin(), c.snapshots.end());
  }
}

nlohmann::ordered_json to_json(const RunConfig& c) {
  using nlohmann::ordered_json;
  auto opt = [](const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); };
  auto cx = [](cplx z) { return ordered_json::array({z.real(), z.imag()}); };
  ordered_json phys;
  phys["nu"] = c.nu;
  phys["L0"] = c.L0;
  phys["t0"] = opt(c.t0);
  phys["lambda"] = lambda_of_nu(c.nu);
  phys["mass"] = c.mass;
  phys["n"] = c.n;
  phys["a_j"] = cx(c.a_j);
  phys["a_y"] = cx(c.a_y);
  phys["real_solution"] = c.real_solution;
  phys["p0"] = opt(c.p0);
  phys["p0c"] = c.p0c;
  phys["c"] = c.c;
  phys["x0"] = opt(c.x0);

  ordered_json num;
  num["init"] = c.init;
  num["t"] = opt(c.t);
  num["points"] = c.points;
  num["n_xi"] = c.n_xi;
  num["n_u"] = c.n_u;
  num["cfl"] = c.cfl;
  num["t_start"] = opt(c.t_start);
  num["t_end"] = opt(c.t_end);
  num["rho_start"] = opt(c.rho_start);
  num["rho_end"] = opt(c.rho_end);
  num["snapshots"] = c.snapshots;
  num["snapshot_count"] = c.snapshot_count;
  num["diagnostics_every"] = c.diagnostics_every;
  num["strip_dtau"] = c.strip_dtau;
  num["boundary_tol"] = c.boundary_tol;
  num["strip_boundary_tol"] = opt(c.strip_boundary_tol);
  num["backend"] = c.backend == kernels::Backend::openmp ? "openmp" : "serial";

  ordered_json out;
  out["directory"] = c.out_dir;
  out["svg"] = c.svg;

  ordered_json j;
  j["scenario"] = to_string(c.scenario);
  j["physical"] = phys;
  j["numerical"] = num;
  j["output"] = out;
  return j;
}

}  // namespace kgwell::cli
