#pragma once

/// \file kernels.hpp
/// \brief Data-parallel inner loops of the solvers.
///
/// Every kernel has a serial reference in kgwell::kernels::serial and an
/// OpenMP version in kgwell::kernels::omp with identical signatures. The
/// loops are element-wise with no reductions, so both produce bitwise
/// identical output; the serial versions are the ones the tests trust.
/// Builds without OpenMP compile the omp namespace as plain loops.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>

namespace kgwell::kernels {

using cplx = std::complex<double>;

enum class Backend { serial, openmp };

/// Coefficients of the moving-wall system in xi = x / L(t).
struct MovingWallCoeffs {
  double dxi;
  double length;  // L(t)
  double nu;
  double mass;
};

/// Number of OpenMP threads available (1 without OpenMP).
int max_threads();

/// Runs body(i) for i in [0, n); exceptions are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  Backend backend = Backend::openmp);

namespace serial {

/// out_j = (in_{j-1} - 2 in_j + in_{j+1}) * inv_h2 - potential * in_j; out_0 = out_{n-1} = 0.
void strip_acceleration(std::span<const cplx> in, std::span<cplx> out, double inv_h2, double potential);

/// Time derivative of (psi, pi) for
///   psi_t = pi,
///   pi_t = 2 b pi_xi - (b^2 - 1/L^2) psi_xixi - (2 xi nu^2 / L^2) psi_xi - m^2 psi,
/// b = xi nu / L, centered differences, zero at both ends.
void moving_wall_rhs(std::span<const cplx> psi, std::span<const cplx> pi, std::span<cplx> dpsi,
                     std::span<cplx> dpi, const MovingWallCoeffs& c);

/// out = x + a * y.
void axpy(std::span<const cplx> x, double a, std::span<const cplx> y, std::span<cplx> out);

/// out += a * y.
void accumulate(std::span<cplx> out, double a, std::span<const cplx> y);

}  // namespace serial

namespace omp {

void strip_acceleration(std::span<const cplx> in, std::span<cplx> out, double inv_h2, double potential);
void moving_wall_rhs(std::span<const cplx> psi, std::span<const cplx> pi, std::span<cplx> dpsi,
                     std::span<cplx> dpi, const MovingWallCoeffs& c);
void axpy(std::span<const cplx> x, double a, std::span<const cplx> y, std::span<cplx> out);
void accumulate(std::span<cplx> out, double a, std::span<const cplx> y);

}  // namespace omp

// Backend dispatch.
void strip_acceleration(Backend b, std::span<const cplx> in, std::span<cplx> out, double inv_h2,
                        double potential);
void moving_wall_rhs(Backend b, std::span<const cplx> psi, std::span<const cplx> pi, std::span<cplx> dpsi,
                     std::span<cplx> dpi, const MovingWallCoeffs& c);
void axpy(Backend b, std::span<const cplx> x, double a, std::span<const cplx> y, std::span<cplx> out);
void accumulate(Backend b, std::span<cplx> out, double a, std::span<const cplx> y);

}  // namespace kgwell::kernels
