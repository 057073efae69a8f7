#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "kgwell/field.hpp"
#include "kgwell/solver.hpp"

namespace kgwell::cli {

/// 17 significant digits, '.' decimal separator regardless of locale.
std::string format_double(double v);

/// coordinate,re_psi,im_psi,abs_psi_sq (header names the coordinate).
std::string snapshot_csv(const ComplexField& f, const std::string& coordinate_name);

/// time,norm,energy,wall_position.
std::string diagnostics_csv(const std::vector<DiagnosticSample>& samples);

std::string json_text(const nlohmann::ordered_json& j);

/// Files of one run, held in memory until everything has been computed.
class OutputSet {
 public:
  void add(const std::string& name, std::string contents);
  [[nodiscard]] std::vector<std::string> names() const;
  /// Creates the directory and writes every file. Throws IoError.
  void write_all(const std::string& dir) const;

 private:
  std::vector<std::pair<std::string, std::string>> files_;
};

}  // namespace kgwell::cli
