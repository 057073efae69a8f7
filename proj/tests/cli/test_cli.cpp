#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>
#include <unistd.h>

#include "cli/rational.hpp"
#include "cli/run.hpp"
#include "cli/run_config.hpp"

namespace fs = std::filesystem;
using namespace kgwell::cli;

namespace {

const fs::path& scratch_root() {
  static const fs::path p = fs::temp_directory_path() / ("kgwell_cli_" + std::to_string(::getpid()));
  return p;
}

struct Cleanup {
  ~Cleanup() {
    std::error_code ec;
    fs::remove_all(scratch_root(), ec);
  }
} cleanup;

fs::path scratch(const std::string& name) {
  const fs::path p = scratch_root() / name;
  fs::remove_all(p);
  return p;
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "kgwell");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

nlohmann::json metadata(const fs::path& dir) { return nlohmann::json::parse(slurp(dir / "metadata.json")); }

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("49/50", "nu") == 49.0 / 50.0);
  CHECK(parse_rational("50/49", "t") == 50.0 / 49.0);
  CHECK(parse_rational(" -3/4 ", "x") == -0.75);
  CHECK(parse_rational("+2", "x") == 2.0);
  CHECK(parse_rational("1.5e-3", "x") == 1.5e-3);
  for (const char* bad : {"", "abc", "1/0", "1/2/3", "1/", "/2", "0.5/2", "1e400"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad, "nu"), ConfigError);
  }
  try {
    parse_rational("1/0", "nu");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("nu") != std::string::npos);
  }
}

TEST_CASE("modes recipe: Psi_10 at nu = 49/50, t = 50/49") {
  const auto dir = scratch("fig3");
  const auto r = invoke({"modes", "--nu", "49/50", "--n", "10", "--t", "50/49", "--out", dir.string()});
  REQUIRE(r.code == 0);
  const auto m = metadata(dir);
  CHECK(m["results"]["interior_nodes"] == 9);
  CHECK(m["results"]["boundary_max_abs"].get<double>() <= 1e-12);

  std::istringstream csv(slurp(dir / "profile.csv"));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "x,re_psi,im_psi,abs_psi_sq");
  std::size_t rows = 0;
  while (std::getline(csv, line)) ++rows;
  CHECK(rows == m["config"]["numerical"]["points"].get<std::size_t>());
}

TEST_CASE("invalid nu is rejected before anything is written") {
  const auto dir = scratch("bad_nu");
  const auto r = invoke({"modes", "--nu", "1.5", "--out", dir.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("--nu") != std::string::npos);
  CHECK_FALSE(fs::exists(dir));
}

TEST_CASE("exit codes") {
  CHECK(invoke({"modes", "--bogus"}).code == 2);
  CHECK(invoke({"evolve-flat", "--cfl", "1.5", "--out", scratch("cfl").string()}).code == 2);
  CHECK(invoke({"evolve-flat", "--snapshots", "2,99", "--out", scratch("snap").string()}).code == 2);
  CHECK(invoke({"evolve-flat", "--init", "mode", "--backend", "gpu"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"modes", "--config", "/nonexistent/kgwell.cfg"}).code == 4);

  // Real part of a massive mode has zero KG flux.
  const auto degen = scratch("degenerate");
  CHECK(invoke({"modes", "--m", "1", "--real", "--out", degen.string()}).code == 3);
  CHECK_FALSE(fs::exists(degen));

  const auto file = scratch("blocker");
  fs::create_directories(file.parent_path());
  std::ofstream(file) << "x";
  CHECK(invoke({"modes", "--out", (file / "sub").string()}).code == 4);
}

TEST_CASE("identical configurations give byte-identical files") {
  const auto a = scratch("det"), s = scratch("det_serial");
  const std::vector<std::string> base = {"evolve-flat", "--n-xi", "256", "--t-end", "2.6", "--snapshot-count", "4",
                                         "--svg", "--out"};
  auto with = [&](std::vector<std::string> extra) {
    auto args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return invoke(args).code;
  };
  REQUIRE(with({a.string()}) == 0);
  const auto names = metadata(a)["outputs"];
  CHECK(names.size() == 4 * 2 + 3);
  std::vector<std::string> first;
  for (const auto& n : names) first.push_back(slurp(a / n.get<std::string>()));
  fs::remove_all(a);
  REQUIRE(with({a.string()}) == 0);
  REQUIRE(with({s.string(), "--backend", "serial"}) == 0);

  for (std::size_t i = 0; i < names.size(); ++i) {
    const std::string name = names[i].get<std::string>();
    if (name == "timings.json") continue;
    CAPTURE(name);
    CHECK(slurp(a / name) == first[i]);
    if (name != "metadata.json") CHECK(slurp(s / name) == first[i]);
  }
}

TEST_CASE("config file values are overridden by flags") {
  const auto dir = scratch("cfg");
  fs::create_directories(dir);
  const auto cfg = dir / "run.cfg";
  std::ofstream(cfg) << "# Figure recipe\nnu = 49/50\nn = 3   # overridden\nt = 50/49\npoints = 401\n";
  const auto out = dir / "out";
  REQUIRE(invoke({"modes", "--config", cfg.string(), "--n", "10", "--out", out.string()}).code == 0);
  const auto m = metadata(out);
  CHECK(m["config"]["physical"]["nu"] == 0.98);
  CHECK(m["config"]["physical"]["n"] == 10);
  CHECK(m["config"]["numerical"]["points"] == 401);
  CHECK(m["results"]["interior_nodes"] == 9);

  std::ofstream(cfg) << "nu 0.5\n";
  CHECK(invoke({"modes", "--config", cfg.string(), "--out", out.string()}).code == 2);
}

TEST_CASE("metadata lists every parameter") {
  const auto dir = scratch("meta");
  REQUIRE(invoke({"compare", "--n-xi", "256", "--n-u", "128", "--t-end", "2.4", "--snapshot-count", "3", "--out",
                  dir.string()})
              .code == 0);
  const auto m = metadata(dir);
  CHECK(m["schema_version"] == 1);
  CHECK(m["tool"] == "kgwell");
  CHECK(m["version"].is_string());
  CHECK(m["scenario"] == "compare");
  CHECK(m["timings_file"] == "timings.json");
  CHECK(fs::exists(dir / "timings.json"));
  const std::vector<std::string> physical = {"nu", "L0", "t0", "lambda", "mass", "n", "a_j", "a_y",
                                             "real_solution", "p0", "p0c", "c", "x0"};
  const std::vector<std::string> numerical = {
      "init",      "t",          "points",   "n_xi",           "n_u",
      "cfl",       "t_start",    "t_end",    "rho_start",      "rho_end",
      "snapshots", "snapshot_count", "diagnostics_every", "strip_dtau", "boundary_tol",
      "strip_boundary_tol", "backend"};
  for (const auto& k : physical) {
    CAPTURE(k);
    CHECK(m["config"]["physical"].contains(k));
  }
  for (const auto& k : numerical) {
    CAPTURE(k);
    CHECK(m["config"]["numerical"].contains(k));
  }
  CHECK(m["config"]["physical"].size() == physical.size());
  CHECK(m["config"]["numerical"].size() == numerical.size());
  // Every parameter this scenario uses is resolved.
  for (const char* k : {"t0", "p0", "x0"}) CHECK_FALSE(m["config"]["physical"][k].is_null());
  for (const char* k : {"t_start", "t_end", "rho_start", "rho_end", "strip_boundary_tol"}) {
    CHECK_FALSE(m["config"]["numerical"][k].is_null());
  }
  CHECK(m["config"]["output"]["directory"] == dir.string());
  CHECK(m["results"]["cross_validation"]["snapshots_compared"].get<int>() >= 1);
}

TEST_CASE("resolve fills scenario defaults") {
  RunConfig c;
  c.scenario = Scenario::redshift;
  resolve(c);
  CHECK(*c.t0 == 2.0);
  CHECK(*c.t_start == 2.0);
  CHECK(*c.x0 == 0.5);
  CHECK(*c.p0 == doctest::Approx(8.0 / 0.07));
  // hit at t' = 1.5 / 0.5 = 3, end at 3 * 1.4
  CHECK(*c.t_end == doctest::Approx(4.2));
  CHECK(c.snapshots.size() == c.snapshot_count);
  CHECK(c.snapshots.front() == 2.0);
  CHECK(c.snapshots.back() == *c.t_end);

  RunConfig s;
  s.scenario = Scenario::compare;
  resolve(s);
  CHECK(*s.rho_start == doctest::Approx(3.0 / (1.0 + 1.0 / std::sqrt(3.0))));
  CHECK(*s.rho_end > *s.t_end);
  CHECK(*s.strip_boundary_tol == 1e-6);

  RunConfig bad;
  bad.scenario = Scenario::evolve_flat;
  bad.t_start = 1.0;
  CHECK_THROWS_AS(resolve(bad), ConfigError);
}
