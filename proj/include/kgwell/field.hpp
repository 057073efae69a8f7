#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace kgwell {

using cplx = std::complex<double>;

enum class Frame { flat, hyperbolic };

/// Sampled wavefunction on a uniform 1D grid.
///
/// Flat frame: grid is x at fixed t, dpsi_dtime is d/dt at fixed x, stamp is t.
/// Hyperbolic frame: grid is u = ln v at fixed rho, dpsi_dtime is rho d/drho
/// (= d/dtau with tau = ln rho), stamp is rho.
struct ComplexField {
  std::vector<double> grid;
  std::vector<cplx> psi;
  std::vector<cplx> dpsi_dtime;
  Frame frame = Frame::flat;
  double stamp = 0.0;

  [[nodiscard]] std::size_t size() const noexcept { return grid.size(); }
  [[nodiscard]] double spacing() const { return grid.at(1) - grid.at(0); }
};

/// Feshbach-Villars pair phi = (psi + i psi_t)/2, chi = (psi - i psi_t)/2.
struct TwoComponentField {
  std::vector<double> grid;
  std::vector<cplx> phi;
  std::vector<cplx> chi;
  double stamp = 0.0;
};

inline constexpr double kDefaultBoundaryTol = 1e-10;
inline constexpr std::size_t kMinFieldSize = 8;

/// Checks grid monotonicity and uniformity (1e-12 relative), matching array
/// lengths and the minimum size. Throws GridMismatchError.
void validate(const ComplexField& f);

/// validate() plus |psi| <= boundary_tol at both ends. Throws InitialDataError.
void validate_well_state(const ComplexField& f, double boundary_tol = kDefaultBoundaryTol);

/// n uniformly spaced points on [a, b], endpoints exact.
std::vector<double> uniform_grid(double a, double b, std::size_t n);

}  // namespace kgwell
