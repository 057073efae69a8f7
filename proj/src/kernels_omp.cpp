#include "kgwell/kernels.hpp"

#include <cstdint>

// Same arithmetic as kernels_serial.cpp, statement for statement, so the two
// agree bitwise. Keep them in sync.

namespace kgwell::kernels::omp {

void strip_acceleration(std::span<const cplx> in, std::span<cplx> out, double inv_h2, double potential) {
  const auto n = static_cast<std::int64_t>(in.size());
  out[0] = 0.0;
  out[n - 1] = 0.0;
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 1; j < n - 1; ++j) {
    out[j] = (in[j - 1] - 2.0 * in[j] + in[j + 1]) * inv_h2 - potential * in[j];
  }
}

void moving_wall_rhs(std::span<const cplx> psi, std::span<const cplx> pi, std::span<cplx> dpsi,
                     std::span<cplx> dpi, const MovingWallCoeffs& c) {
  const auto n = static_cast<std::int64_t>(psi.size());
  const double inv_2h = 0.5 / c.dxi;
  const double inv_h2 = 1.0 / (c.dxi * c.dxi);
  const double inv_L = 1.0 / c.length;
  const double m2 = c.mass * c.mass;
  dpsi[0] = dpsi[n - 1] = 0.0;
  dpi[0] = dpi[n - 1] = 0.0;
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 1; j < n - 1; ++j) {
    const double xi = c.dxi * static_cast<double>(j);
    const double b = xi * c.nu * inv_L;
    const cplx psi_x = (psi[j + 1] - psi[j - 1]) * inv_2h;
    const cplx psi_xx = (psi[j + 1] - 2.0 * psi[j] + psi[j - 1]) * inv_h2;
    const cplx pi_x = (pi[j + 1] - pi[j - 1]) * inv_2h;
    dpsi[j] = pi[j];
    dpi[j] = 2.0 * b * pi_x - (b * b - inv_L * inv_L) * psi_xx - 2.0 * b * c.nu * inv_L * psi_x -
             m2 * psi[j];
  }
}

void axpy(std::span<const cplx> x, double a, std::span<const cplx> y, std::span<cplx> out) {
  const auto n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < n; ++j) out[j] = x[j] + a * y[j];
}

void accumulate(std::span<cplx> out, double a, std::span<const cplx> y) {
  const auto n = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < n; ++j) out[j] += a * y[j];
}

}  // namespace kgwell::kernels::omp
