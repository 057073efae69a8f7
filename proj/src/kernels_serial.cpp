#include "kgwell/kernels.hpp"

namespace kgwell::kernels::serial {

void strip_acceleration(std::span<const cplx> in, std::span<cplx> out, double inv_h2, double potential) {
  const std::size_t n = in.size();
  out[0] = 0.0;
  out[n - 1] = 0.0;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    out[j] = (in[j - 1] - 2.0 * in[j] + in[j + 1]) * inv_h2 - potential * in[j];
  }
}

void moving_wall_rhs(std::span<const cplx> psi, std::span<const cplx> pi, std::span<cplx> dpsi,
                     std::span<cplx> dpi, const MovingWallCoeffs& c) {
  const std::size_t n = psi.size();
  const double inv_2h = 0.5 / c.dxi;
  const double inv_h2 = 1.0 / (c.dxi * c.dxi);
  const double inv_L = 1.0 / c.length;
  const double m2 = c.mass * c.mass;
  dpsi[0] = dpsi[n - 1] = 0.0;
  dpi[0] = dpi[n - 1] = 0.0;
  for (std::size_t j = 1; j + 1 < n; ++j) {
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
  for (std::size_t j = 0; j < x.size(); ++j) out[j] = x[j] + a * y[j];
}

void accumulate(std::span<cplx> out, double a, std::span<const cplx> y) {
  for (std::size_t j = 0; j < out.size(); ++j) out[j] += a * y[j];
}

}  // namespace kgwell::kernels::serial
