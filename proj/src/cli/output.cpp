#include "cli/output.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <system_error>

#include "cli/cli_errors.hpp"

namespace kgwell::cli {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  // snprintf follows LC_NUMERIC; the CLI never changes it, but be explicit.
  for (char* p = buf; *p; ++p) {
    if (*p == ',') *p = '.';
  }
  return buf;
}

std::string snapshot_csv(const ComplexField& f, const std::string& coordinate_name) {
  std::string s = coordinate_name + ",re_psi,im_psi,abs_psi_sq\n";
  s.reserve(s.size() + f.size() * 96);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const cplx z = f.psi[i];
    s += format_double(f.grid[i]);
    s += ',';
    s += format_double(z.real());
    s += ',';
    s += format_double(z.imag());
    s += ',';
    s += format_double(std::norm(z));
    s += '\n';
  }
  return s;
}

std::string diagnostics_csv(const std::vector<DiagnosticSample>& samples) {
  std::string s = "time,norm,energy,wall_position\n";
  for (const auto& d : samples) {
    s += format_double(d.time) + ',' + format_double(d.norm) + ',' + format_double(d.energy) + ',' +
         format_double(d.wall_position) + '\n';
  }
  return s;
}

std::string json_text(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

void OutputSet::add(const std::string& name, std::string contents) {
  files_.emplace_back(name, std::move(contents));
}

std::vector<std::string> OutputSet::names() const {
  std::vector<std::string> out;
  out.reserve(files_.size());
  for (const auto& f : files_) out.push_back(f.first);
  return out;
}

void OutputSet::write_all(const std::string& dir) const {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("--out: cannot create directory '" + dir + "': " + ec.message());
  for (const auto& [name, contents] : files_) {
    const fs::path path = fs::path(dir) / name;
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open '" + path.string() + "' for writing");
    os.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!os) throw IoError("write failed for '" + path.string() + "'");
  }
}

}  // namespace kgwell::cli
