#pragma once

// Reference computations used only by the tests. None of these call into the
// library code paths they are used to check.

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

/// erf by its Maclaurin series in long double (|x| <= 4) or the erfc
/// continued fraction beyond.
double erf_series(double x);

/// Gamma(z) by the Lanczos approximation (g = 7, 9 terms), Re z >= 1/2.
cplx lanczos_gamma(cplx z);

/// J_{i kappa} and x J'_{i kappa} at x0 by a direct long-double series with
/// the Lanczos Gamma; only meant for small x0.
struct BesselStart {
  cplx f;
  cplx x_df;
};
BesselStart bessel_series_start(double kappa, double x0);

/// J_{i kappa}(x) at the sorted points xs, integrating
/// x^2 f'' + x f' + (x^2 + kappa^2) f = 0 as f_ss = -(e^{2s} + kappa^2) f in
/// s = ln x from series data at x0 = 0.1 with fixed-step RK4 (h = 0.002 / max omega) and one
/// Richardson extrapolation (h, h/2). Also returns x J' for scale estimates.
std::vector<BesselStart> bessel_ode(double kappa, std::span<const double> xs);

/// Second derivative by the 3-point stencil.
inline cplx d2_3pt(const std::function<cplx(double)>& f, double at, double h) {
  return (f(at + h) - 2.0 * f(at) + f(at - h)) / (h * h);
}

/// log2 of successive ratios: orders[i] = log2(err[i] / err[i+1]).
std::vector<double> observed_orders(std::span<const double> errors);

}  // namespace oracle
