#include "kgwell/kernels.hpp"

#include <cstdint>
#include <exception>

#ifdef KGWELL_HAVE_OPENMP
#include <omp.h>
#endif

namespace kgwell::kernels {

int max_threads() {
#ifdef KGWELL_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, Backend backend) {
  if (backend == Backend::serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(kgwell_parallel_for_error)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

void strip_acceleration(Backend b, std::span<const cplx> in, std::span<cplx> out, double inv_h2,
                        double potential) {
  if (b == Backend::openmp) {
    omp::strip_acceleration(in, out, inv_h2, potential);
  } else {
    serial::strip_acceleration(in, out, inv_h2, potential);
  }
}

void moving_wall_rhs(Backend b, std::span<const cplx> psi, std::span<const cplx> pi, std::span<cplx> dpsi,
                     std::span<cplx> dpi, const MovingWallCoeffs& c) {
  if (b == Backend::openmp) {
    omp::moving_wall_rhs(psi, pi, dpsi, dpi, c);
  } else {
    serial::moving_wall_rhs(psi, pi, dpsi, dpi, c);
  }
}

void axpy(Backend b, std::span<const cplx> x, double a, std::span<const cplx> y, std::span<cplx> out) {
  if (b == Backend::openmp) {
    omp::axpy(x, a, y, out);
  } else {
    serial::axpy(x, a, y, out);
  }
}

void accumulate(Backend b, std::span<cplx> out, double a, std::span<const cplx> y) {
  if (b == Backend::openmp) {
    omp::accumulate(out, a, y);
  } else {
    serial::accumulate(out, a, y);
  }
}

}  // namespace kgwell::kernels
