#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "kgwell/errors.hpp"
#include "kgwell/field.hpp"
#include "kgwell/quadrature.hpp"

namespace kgwell::detail {

struct Moments {
  double centroid;
  double width;
};

inline Moments density_moments(const ComplexField& f) {
  const std::size_t n = f.size();
  std::vector<double> w(n), wx(n), wxx(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = std::norm(f.psi[i]);
    wx[i] = w[i] * f.grid[i];
    wxx[i] = wx[i] * f.grid[i];
  }
  const double h = f.spacing();
  const double m0 = quad::simpson(w, h);
  if (!(m0 > 0.0)) return {0.5 * (f.grid.front() + f.grid.back()), 0.0};
  const double mean = quad::simpson(wx, h) / m0;
  const double var = std::max(0.0, quad::simpson(wxx, h) / m0 - mean * mean);
  return {mean, std::sqrt(var)};
}

/// Sorted, de-duplicated snapshot times clipped to [start, end]; {start, end} if empty.
inline std::vector<double> snapshot_schedule(std::vector<double> times, double start, double end) {
  if (times.empty()) times = {start, end};
  for (double t : times) {
    if (t < start - 1e-12 * (1.0 + std::abs(start)) || t > end + 1e-12 * (1.0 + std::abs(end))) {
      throw std::invalid_argument("snapshot time outside the evolution span");
    }
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end(),
                          [](double a, double b) { return std::abs(a - b) <= 1e-14 * (1.0 + std::abs(a)); }),
              times.end());
  for (double& t : times) t = std::clamp(t, start, end);
  return times;
}

inline void check_cfl(double cfl) {
  if (!(cfl > 0.0 && cfl <= 1.0)) throw CflError("Courant number must lie in (0, 1]");
}

inline void require_finite(const std::vector<cplx>& v, const char* where) {
  for (const cplx& z : v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw InstabilityError(std::string("non-finite values in ") + where);
    }
  }
}

}  // namespace kgwell::detail
