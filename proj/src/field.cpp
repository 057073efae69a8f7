#include "kgwell/field.hpp"

#include <cmath>
#include <string>

#include "kgwell/errors.hpp"

namespace kgwell {

void validate(const ComplexField& f) {
  const std::size_t n = f.grid.size();
  if (n < kMinFieldSize) {
    throw GridMismatchError("field needs at least " + std::to_string(kMinFieldSize) + " samples");
  }
  if (f.psi.size() != n || f.dpsi_dtime.size() != n) {
    throw GridMismatchError("psi, dpsi_dtime and grid lengths differ");
  }
  const double h = (f.grid.back() - f.grid.front()) / static_cast<double>(n - 1);
  if (!(h > 0.0)) throw GridMismatchError("grid must be strictly increasing");
  for (std::size_t i = 1; i < n; ++i) {
    const double d = f.grid[i] - f.grid[i - 1];
    if (!(d > 0.0)) throw GridMismatchError("grid must be strictly increasing");
    if (std::abs(d - h) > 1e-12 * std::abs(h) + 1e-12 * std::abs(f.grid[i])) {
      throw GridMismatchError("grid spacing is not uniform");
    }
  }
}

void validate_well_state(const ComplexField& f, double boundary_tol) {
  validate(f);
  if (std::abs(f.psi.front()) > boundary_tol || std::abs(f.psi.back()) > boundary_tol) {
    throw InitialDataError("field does not vanish on the walls (Dirichlet incompatible)");
  }
}

std::vector<double> uniform_grid(double a, double b, std::size_t n) {
  if (n < 2) throw std::invalid_argument("uniform_grid needs n >= 2");
  std::vector<double> g(n);
  const double h = (b - a) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) g[i] = a + h * static_cast<double>(i);
  g.back() = b;
  return g;
}

}  // namespace kgwell
