#include "kgwell/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "kgwell/errors.hpp"

namespace kgwell::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// B_{2k} / (2k (2k - 1)), k = 1..10.
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,          -1.0 / 360.0,       1.0 / 1260.0,       -1.0 / 1680.0,
    1.0 / 1188.0,        -691.0 / 360360.0,  1.0 / 156.0,        -3617.0 / 122400.0,
    43867.0 / 244188.0,  -174611.0 / 125400.0};

cplx stirling(cplx z) {
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx corr = 0.0;
  cplx p = inv;
  for (double c : kStirling) {
    corr += c * p;
    p *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + corr;
}

// log sin(pi z) without overflowing cosh for large |Im z|.
cplx log_sin_pi(cplx z) {
  const double y = z.imag();
  if (std::abs(y) < 20.0) return std::log(std::sin(kPi * z));
  const cplx i(0.0, 1.0);
  if (y > 0.0) {
    // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z})
    return -i * kPi * z + std::log(i / 2.0) + std::log(1.0 - std::exp(2.0 * i * kPi * z));
  }
  return i * kPi * z + std::log(-i / 2.0) + std::log(1.0 - std::exp(-2.0 * i * kPi * z));
}

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

void check_finite(cplx v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw OverflowError(std::string("non-finite intermediate in ") + what);
  }
}

struct SeriesValue {
  cplx f;
  cplx x_df;  // x f'(x)
};

// Ascending series for J_{i kappa}(x) and x J'_{i kappa}(x).
SeriesValue j_series(double kappa, double x) {
  const cplx order(0.0, kappa);
  const double half = 0.5 * x;
  cplx term = std::exp(order * std::log(half) - log_gamma(1.0 + order));
  check_finite(term, "Bessel series leading term");
  cplx sum = term;
  cplx dsum = term * order;
  const double q = -half * half;
  for (int j = 0; j < 200; ++j) {
    const double jp = j + 1.0;
    term *= q / (jp * (jp + order));
    sum += term;
    dsum += term * (2.0 * jp + order);
    // Terms grow until j ~ x/2; only test convergence past the peak.
    if (jp * jp > half * half && std::abs(term) * 2.0 * jp < 1e-17 * std::abs(sum)) break;
  }
  check_finite(sum, "Bessel series");
  return {sum, dsum};
}

using OdeState = std::array<double, 4>;

// Continue (f, x f') of the order-i*kappa Bessel equation from x_from to x_to.
// In s = ln x the equation reads f_ss = -(e^{2s} + kappa^2) f.
SeriesValue continue_by_ode(double kappa, double x_from, SeriesValue start, double x_to) {
  namespace odeint = boost::numeric::odeint;
  const double k2 = kappa * kappa;
  const double scale = std::max(std::abs(start.f), std::abs(start.x_df) / std::hypot(x_from, kappa));
  OdeState y = {start.f.real() / scale, start.f.imag() / scale, start.x_df.real() / scale,
                start.x_df.imag() / scale};
  auto rhs = [k2](const OdeState& s_state, OdeState& d, double s) {
    const double w = std::exp(2.0 * s) + k2;
    d[0] = s_state[2];
    d[1] = s_state[3];
    d[2] = -w * s_state[0];
    d[3] = -w * s_state[1];
  };
  const double s0 = std::log(x_from);
  const double s1 = std::log(x_to);
  auto stepper = odeint::make_controlled(1e-15, 1e-15, odeint::runge_kutta_fehlberg78<OdeState>());
  odeint::integrate_adaptive(stepper, rhs, y, s0, s1, (s1 - s0) / 64.0);
  return {scale * cplx(y[0], y[1]), scale * cplx(y[2], y[3])};
}

}  // namespace

double erf(double x) {
  // glibc erf is accurate to about one ulp.
  return std::erf(x);
}

cplx log_gamma(cplx z) {
  if (is_nonpositive_integer(z)) throw PoleError("log_gamma pole at a nonpositive integer");
  if (z.real() < 0.5) {
    return std::log(kPi) - log_sin_pi(z) - log_gamma(1.0 - z);
  }
  cplx shift = 0.0;
  while (std::abs(z) < 12.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling(z) - shift;
}

ImagOrderBesselValue bessel_imag_order(double kappa, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("Bessel argument must be positive");
  if (!(kappa >= 0.0 && kappa <= kMaxImagOrder)) {
    throw DomainError("imaginary order must lie in [0, 50]");
  }
  if (kappa == 0.0) {
    const double j0 = std::cyl_bessel_j(0.0, x);
    const double y0 = std::cyl_neumann(0.0, x);
    const double j1 = std::cyl_bessel_j(1.0, x);
    const double y1 = std::cyl_neumann(1.0, x);
    return {j0, y0, -j1, -y1};
  }

  SeriesValue jv;
  if (x <= kSeriesArgumentLimit) {
    jv = j_series(kappa, x);
  } else {
    jv = continue_by_ode(kappa, kSeriesArgumentLimit, j_series(kappa, kSeriesArgumentLimit), x);
  }
  check_finite(jv.f, "Bessel ODE continuation");

  const cplx i(0.0, 1.0);
  const double ch = std::cosh(kappa * kPi);
  const cplx sn = i * std::sinh(kappa * kPi);
  const cplx dj = jv.x_df / x;
  const cplx y = (jv.f * ch - std::conj(jv.f)) / sn;
  const cplx dy = (dj * ch - std::conj(dj)) / sn;
  check_finite(y, "Bessel Y connection formula");
  check_finite(dy, "Bessel Y connection formula");
  return {jv.f, y, dj, dy};
}

}  // namespace kgwell::specfun
