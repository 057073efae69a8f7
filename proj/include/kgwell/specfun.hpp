#pragma once

#include <complex>

namespace kgwell::specfun {

using cplx = std::complex<double>;

/// Error function, absolute error below 1e-14.
double erf(double x);

/// log Gamma(z). For Re z >= 1/2 this is the branch continuous from the
/// positive real axis; for Re z < 1/2 it comes from the reflection formula
/// and agrees with that branch modulo 2 pi i. Throws PoleError at
/// nonpositive integers.
cplx log_gamma(cplx z);

/// J and Y of order i*kappa at a real argument, with their x-derivatives.
struct ImagOrderBesselValue {
  cplx j_val;
  cplx y_val;
  cplx dj_val;
  cplx dy_val;
};

/// Largest order magnitude accepted by bessel_imag_order.
inline constexpr double kMaxImagOrder = 50.0;
/// Above this argument the ascending series is replaced by ODE continuation.
inline constexpr double kSeriesArgumentLimit = 8.0;

/// J_{i kappa}(x), Y_{i kappa}(x) and derivatives for kappa in [0, 50], x > 0.
///
/// J comes from the ascending series
///   sum_j (-1)^j (x/2)^{2j + i kappa} / (j! Gamma(j + 1 + i kappa))
/// for x <= kSeriesArgumentLimit, and from integrating the Bessel equation
/// (in s = ln x) starting at the limit otherwise. Y uses the connection
/// formula Y_nu = (J_nu cos(nu pi) - J_{-nu}) / sin(nu pi) with nu = i kappa
/// and J_{-i kappa}(x) = conj(J_{i kappa}(x)) for real x (principal branch).
/// kappa == 0 is evaluated by the real-order J_0, Y_0. Accuracy degrades
/// like 1/kappa for 0 < kappa << 1 because of cancellation in the connection
/// formula.
///
/// Throws DomainError for x <= 0 or kappa outside [0, 50]; OverflowError if
/// an intermediate value is not finite.
ImagOrderBesselValue bessel_imag_order(double kappa, double x);

}  // namespace kgwell::specfun
