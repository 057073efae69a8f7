#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "kgwell/errors.hpp"
#include "kgwell/modes.hpp"
#include "kgwell/specfun.hpp"
#include "oracles.hpp"

using namespace kgwell;

namespace {

constexpr double kPi = std::numbers::pi;

ModeSpec massless(int n, double nu) { return {n, 0.0, WallConfig::lightcone_gauge(nu, 1.0)}; }

ModeSpec massive(int n, double nu, double m) { return {n, m, WallConfig::lightcone_gauge(nu, 1.0)}; }

struct Sample {
  double t;
  double x;
};

// Interior points kept at least `margin` (relative) away from both walls.
std::vector<Sample> interior_points(const WallConfig& w, int count, double t_min, double t_max, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> td(t_min, t_max), fr(0.1, 0.9);
  std::vector<Sample> out;
  for (int i = 0; i < count; ++i) {
    const double t = td(rng);
    out.push_back({t, fr(rng) * wall_position(w, t)});
  }
  return out;
}

// max over points of |(d_tt - d_xx + m^2) f| with 3-point stencils, h_t = h,
// h_x = h / 2 (equal steps would make the stencil exact on d'Alembert data).
template <class F>
double residual(const F& f, const std::vector<Sample>& pts, double h, double m) {
  double worst = 0.0;
  for (const auto& p : pts) {
    const cplx c = f(p.t, p.x);
    const cplx dtt = (f(p.t + h, p.x) - 2.0 * c + f(p.t - h, p.x)) / (h * h);
    const double hx = 0.5 * h;
    const cplx dxx = (f(p.t, p.x + hx) - 2.0 * c + f(p.t, p.x - hx)) / (hx * hx);
    worst = std::max(worst, std::abs(dtt - dxx + m * m * c));
  }
  return worst;
}

}  // namespace

TEST_CASE("k_n and validation") {
  CHECK(k_of_n(massless(1, 0.5)) == doctest::Approx(5.719201734760255).epsilon(1e-14));
  CHECK(k_of_n(massless(10, 49.0 / 50.0)) == doctest::Approx(13.673604850579803).epsilon(1e-14));
  CHECK_THROWS_AS(k_of_n(massless(0, 0.5)), DomainError);
  CHECK_THROWS_AS(validate(massive(1, 0.5, -1.0)), DomainError);
}

TEST_CASE("massless hyperbolic mode examples") {
  const auto spec = massless(1, 0.5);
  const double lam = std::sqrt(3.0);
  CHECK(std::abs(massless_mode_hyp(spec, {3.0, 1.0})) == 0.0);
  CHECK(std::abs(massless_mode_hyp(spec, {0.7, lam})) <= 1e-12);
  const cplx mid = massless_mode_hyp(spec, {1.0, std::sqrt(lam)});
  CHECK(std::abs(mid - 1.0 / std::sqrt(kPi)) <= 1e-15);
  CHECK_THROWS_AS(massless_mode_hyp(spec, {1.0, 2.0}), DomainError);
  CHECK_THROWS_AS(massless_mode_hyp(spec, {1.0, 0.9}), DomainError);
  CHECK_THROWS_AS(massless_mode_hyp(spec, {0.0, 1.2}), DomainError);
  CHECK_THROWS_AS(massless_mode_hyp(massive(1, 0.5, 1.0), {1.0, 1.2}), DomainError);
}

TEST_CASE("massless flat mode: walls, coordinate consistency") {
  for (int n = 1; n <= 10; ++n) {
    const auto spec = massless(n, 0.5);
    for (int i = 0; i <= 40; ++i) {
      const double t = spec.wall.t0() + 0.1 * i;
      const double l = wall_position(spec.wall, t);
      CHECK(std::abs(massless_mode_flat(spec, {t, 0.0})) == 0.0);
      CHECK(std::abs(massless_mode_flat(spec, {t, l})) <= 1e-12);
      for (double frac : {0.13, 0.5, 0.77}) {
        const FlatPoint p{t, frac * l};
        const cplx direct = massless_mode_flat(spec, p);
        const cplx composed = massless_mode_hyp(spec, flat_to_hyp(spec.wall, p));
        CHECK(std::abs(direct - composed) <= 1e-12);
      }
    }
  }
  const auto spec = massless(1, 0.5);
  CHECK_THROWS_AS(massless_mode_flat(spec, {3.0, 3.5}), DomainError);
  CHECK_THROWS_AS(massless_mode_flat(spec, {1.0, 0.5}), DomainError);
}

TEST_CASE("figure-3 profile has nine interior nodes") {
  const auto spec = massless(10, 49.0 / 50.0);
  const double t = 50.0 / 49.0;
  CHECK(wall_position(spec.wall, t) == doctest::Approx(1.0).epsilon(1e-15));
  const int n = 20001;
  std::vector<double> dens(n);
  for (int i = 0; i < n; ++i) dens[i] = std::norm(massless_mode_flat(spec, {t, i / double(n - 1)}));
  int minima = 0;
  for (int i = 1; i + 1 < n; ++i) {
    if (dens[i] < dens[i - 1] && dens[i] <= dens[i + 1]) ++minima;
  }
  CHECK(minima == 9);
  CHECK(dens.front() <= 1e-24);
  CHECK(dens.back() <= 1e-24);
}

TEST_CASE("real-solution option takes the real part") {
  auto spec = massless(2, 0.5);
  const FlatPoint p{2.7, 0.9};
  const cplx c = massless_mode_flat(spec, p);
  spec.real_solution = true;
  CHECK(massless_mode_flat(spec, p) == cplx(c.real(), 0.0));
}

TEST_CASE("flat jet agrees with finite differences") {
  const auto spec = massless(3, 0.5);
  const FlatPoint p{3.1, 1.2};
  const FlatJet j = massless_mode_flat_jet(spec, p);
  const double h = 1e-5;
  const cplx dt = (massless_mode_flat(spec, {p.t + h, p.x}) - massless_mode_flat(spec, {p.t - h, p.x})) / (2 * h);
  const cplx dx = (massless_mode_flat(spec, {p.t, p.x + h}) - massless_mode_flat(spec, {p.t, p.x - h})) / (2 * h);
  CHECK(std::abs(j.d_t - dt) <= 1e-8 * std::abs(dt));
  CHECK(std::abs(j.d_x - dx) <= 1e-8 * std::abs(dx));
}

TEST_CASE("d'Alembert structure: (d_t - d_x)(d_t + d_x) Psi = 0") {
  // With equal steps the mixed stencil is f(t+h,x+h) - f(t+h,x-h) - f(t-h,x+h) + f(t-h,x-h)
  // over 4h^2; for the d'Alembert form it must vanish to round-off only.
  const auto spec = massless(4, 0.5);
  const auto pts = interior_points(spec.wall, 200, 2.5, 6.0, 3);
  const double h = 1e-3;
  for (const auto& p : pts) {
    auto f = [&](double t, double x) { return massless_mode_flat(spec, {t, x}); };
    const cplx dtt = f(p.t + h, p.x) - 2.0 * f(p.t, p.x) + f(p.t - h, p.x);
    const cplx dxx = f(p.t, p.x + h) - 2.0 * f(p.t, p.x) + f(p.t, p.x - h);
    CHECK(std::abs(dtt - dxx) / (h * h) <= 1e-6);
  }
}

TEST_CASE("massless residual converges at order 2") {
  for (int n : {1, 4, 10}) {
    const auto spec = massless(n, 0.5);
    const auto pts = interior_points(spec.wall, 200, 2.5, 6.0, 17 + n);
    const double k_eff = k_of_n(spec) / 2.0;
    std::vector<double> errs;
    for (int level = 0; level < 4; ++level) {
      const double h = 0.1 / k_eff / std::pow(2.0, level);
      errs.push_back(residual([&](double t, double x) { return massless_mode_flat(spec, {t, x}); }, pts, h, 0.0));
    }
    for (double o : oracle::observed_orders(errs)) {
      CAPTURE(n);
      CHECK(o == doctest::Approx(2.0).epsilon(0.05));
    }
  }
}

TEST_CASE("massive residual converges at order 2") {
  for (int n : {1, 2}) {
    const auto spec = massive(n, 0.5, 1.0);
    const MassiveMode mode(spec);
    const auto pts = interior_points(spec.wall, 200, 2.5, 4.5, 29 + n);
    const double k_eff = mode.k() / 2.0;
    std::vector<double> errs;
    for (int level = 0; level < 4; ++level) {
      const double h = 0.1 / k_eff / std::pow(2.0, level);
      errs.push_back(residual([&](double t, double x) { return mode.flat_jet({t, x}).psi; }, pts, h, 1.0));
    }
    for (double o : oracle::observed_orders(errs)) {
      CAPTURE(n);
      CHECK(o == doctest::Approx(2.0).epsilon(0.05));
    }
  }
}

TEST_CASE("massless normalization procedure returns 1/sqrt(n pi)") {
  for (int n : {1, 3, 7}) {
    const auto spec = massless(n, 0.5);
    for (double rho : {0.5, 1.0, 10.0}) {
      const auto c = normalize_mode(spec, rho);
      CHECK(c.norm_sign == 1);
      CHECK(std::abs(c.raw_product - n * kPi) <= 1e-8 * n * kPi);
      CHECK(std::abs(std::abs(c.constant) - 1.0 / std::sqrt(n * kPi)) <= 1e-9);
    }
  }
}

TEST_CASE("massive normalization") {
  const auto spec = massive(1, 0.5, 1.0);
  const auto c1 = normalize_massive(spec, 1.0);
  const auto c5 = normalize_massive(spec, 5.0);
  CHECK(c1.norm_sign == -1);
  CHECK(std::abs(c1.constant - c5.constant) <= 1e-6 * std::abs(c1.constant));

  auto doubled = spec;
  doubled.a_j *= 2.0;
  doubled.a_y *= 2.0;
  CHECK(std::abs(normalize_massive(doubled, 1.0).constant - 0.5 * c1.constant) <= 1e-12 * std::abs(c1.constant));

  // J_{ik}(m rho) ~ rho^{ik} near rho = 0 carries negative flux; its conjugate
  // J_{-ik} = cosh(k pi) J_{ik} - i sinh(k pi) Y_{ik} carries the opposite one.
  auto pure_j = spec;
  pure_j.a_y = 0.0;
  const auto cj = normalize_massive(pure_j, 1.0);
  CHECK(cj.norm_sign == -1);
  const double k = k_of_n(spec);
  auto conj_j = spec;
  conj_j.a_j = std::cosh(k * kPi);
  conj_j.a_y = cplx(0.0, -std::sinh(k * kPi));
  const auto cc = normalize_massive(conj_j, 1.0);
  CHECK(cc.norm_sign == 1);
  CHECK(std::abs(cc.raw_product + cj.raw_product) <= 1e-6 * std::abs(cj.raw_product));

  // Real part of a real-order-like combination carries no flux.
  auto real_part = spec;
  real_part.real_solution = true;
  real_part.a_y = 0.0;
  CHECK_THROWS_AS(normalize_massive(real_part, 1.0), DegenerateError);

  CHECK_THROWS_AS(normalize_massive(massless(1, 0.5), 1.0), DomainError);
  CHECK_THROWS_AS(normalize_massive(spec, 0.0), DomainError);
}

TEST_CASE("massive mode example against the ODE oracle") {
  // nu = 1/2, n = 1, m = 1, rho = 2, v = sqrt(Lambda).
  const auto spec = massive(1, 0.5, 1.0);
  const MassiveMode mode(spec);
  const double k = mode.k();
  const std::vector<double> xs = {2.0};
  const cplx j = oracle::bessel_ode(k, xs)[0].f;
  // Y from the connection formula with J_{-ik}(x) = conj(J_{ik}(x)).
  const cplx y = (j * std::cosh(k * kPi) - std::conj(j)) / (cplx(0.0, 1.0) * std::sinh(k * kPi));
  const cplx expected = mode.normalization().constant * (j + y);
  const cplx got = mode({2.0, std::sqrt(std::sqrt(3.0))});
  CHECK(std::abs(got - expected) <= 1e-8 * std::abs(expected));
  CHECK(std::abs(mode({2.0, 1.0})) == 0.0);
  CHECK(std::abs(mode({2.0, std::sqrt(3.0)})) <= 1e-12 * std::abs(expected));
}

TEST_CASE("sampling helpers") {
  const auto spec = massless(2, 0.5);
  const auto f = sample_mode_flat(spec, 3.0, 129);
  CHECK(f.frame == Frame::flat);
  CHECK(f.grid.back() == doctest::Approx(1.5));
  CHECK(std::abs(f.psi[64] - massless_mode_flat(spec, {3.0, f.grid[64]})) <= 1e-13);
  const auto g = sample_mode_hyp(spec, 2.0, 129);
  CHECK(g.frame == Frame::hyperbolic);
  CHECK(g.grid.back() == doctest::Approx(std::log(std::sqrt(3.0))));
  CHECK(std::abs(g.dpsi_dtime[40] + cplx(0.0, k_of_n(spec)) * g.psi[40]) <= 1e-13);
}
