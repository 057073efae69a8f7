#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "kgwell/errors.hpp"
#include "kgwell/modes.hpp"
#include "kgwell/products.hpp"
#include "oracles.hpp"

using namespace kgwell;

namespace {

constexpr double kPi = std::numbers::pi;

ModeSpec massless(int n, double nu) { return {n, 0.0, WallConfig::lightcone_gauge(nu, 1.0)}; }

ComplexField random_field(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  ComplexField f;
  f.grid = uniform_grid(0.0, 2.0, n);
  f.stamp = 1.5;
  for (std::size_t i = 0; i < n; ++i) {
    f.psi.emplace_back(d(rng), d(rng));
    f.dpsi_dtime.emplace_back(d(rng), d(rng));
  }
  return f;
}

// sin(pi x) exp(-i pi t) on [0, 1]: a static-wall standing mode.
ComplexField static_mode(std::size_t n) {
  ComplexField f;
  f.grid = uniform_grid(0.0, 1.0, n);
  f.stamp = 0.0;
  for (double x : f.grid) {
    f.psi.emplace_back(std::sin(kPi * x), 0.0);
    f.dpsi_dtime.emplace_back(0.0, -kPi * std::sin(kPi * x));
  }
  return f;
}

}  // namespace

TEST_CASE("massless modes are orthonormal in the flat product") {
  const int nmax = 10;
  std::vector<ComplexField> modes;
  for (int n = 1; n <= nmax; ++n) modes.push_back(sample_mode_flat(massless(n, 0.5), 3.0, 4097));
  double worst = 0.0;
  for (int a = 0; a < nmax; ++a) {
    for (int b = 0; b < nmax; ++b) {
      const cplx g = kg_inner_flat(modes[a], modes[b]);
      worst = std::max(worst, std::abs(g - (a == b ? 1.0 : 0.0)));
    }
  }
  CHECK(worst <= 1e-6);
  CHECK(std::abs(kg_inner_flat(modes[0], modes[0]) - 1.0) <= 1e-8);
  CHECK(std::abs(kg_inner_flat(modes[0], modes[1])) <= 1e-8);
}

TEST_CASE("hyperbolic product: normalization and rho independence") {
  for (int n = 1; n <= 5; ++n) {
    const auto spec = massless(n, 0.5);
    const auto f1 = sample_mode_hyp(spec, 1.0, 4097);
    const auto f10 = sample_mode_hyp(spec, 10.0, 4097);
    CHECK(std::abs(kg_inner_hyp(f1, f1) - 1.0) <= 1e-8);
    CHECK(std::abs(kg_inner_hyp(f1, f1) - kg_inner_hyp(f10, f10)) <= 1e-8);
    const auto g = sample_mode_flat(spec, 2.6, 4097);
    CHECK(std::abs(kg_inner_flat(g, g) - kg_inner_hyp(f1, f1)) <= 1e-6);
  }
  ComplexField zero = sample_mode_hyp(massless(1, 0.5), 1.0, 65);
  for (auto& v : zero.psi) v = 0.0;
  for (auto& v : zero.dpsi_dtime) v = 0.0;
  CHECK(kg_inner_hyp(zero, zero) == cplx(0.0));
}

TEST_CASE("norm of an exact mode is constant in time") {
  const auto spec = massless(3, 0.5);
  for (int i = 0; i < 20; ++i) {
    const auto f = sample_mode_flat(spec, 2.0 + 0.37 * i, 4097);
    CHECK(std::abs(kg_inner_flat(f, f) - 1.0) <= 1e-6);
  }
}

TEST_CASE("orthonormality error converges under refinement") {
  std::vector<double> errs;
  for (std::size_t n : {65u, 129u, 257u, 513u}) {
    double worst = 0.0;
    for (int a = 1; a <= 4; ++a) {
      const auto fa = sample_mode_flat(massless(a, 0.5), 3.0, n);
      for (int b = 1; b <= 4; ++b) {
        const auto fb = sample_mode_flat(massless(b, 0.5), 3.0, n);
        worst = std::max(worst, std::abs(kg_inner_flat(fa, fb) - (a == b ? 1.0 : 0.0)));
      }
    }
    errs.push_back(worst);
  }
  for (double o : oracle::observed_orders(errs)) CHECK(o >= 2.0);
}

TEST_CASE("sesquilinearity and vector form on random fields") {
  for (unsigned s = 0; s < 20; ++s) {
    const auto a = random_field(101 + 2 * s, s);
    const auto b = random_field(101 + 2 * s, 1000 + s);
    const cplx ab = kg_inner_flat(a, b);
    const cplx ba = kg_inner_flat(b, a);
    CHECK(std::abs(ab - std::conj(ba)) <= 1e-12 * std::abs(ab));
    const cplx v = vector_inner(to_two_component(a), to_two_component(b));
    CHECK(std::abs(v - ab) <= 1e-10 * std::max(1.0, std::abs(ab)));
    CHECK(std::abs(kg_inner_flat(a, a).imag()) <= 1e-12 * std::abs(kg_inner_flat(a, a)));
  }
}

TEST_CASE("grid and frame mismatches are rejected") {
  auto a = random_field(33, 1);
  auto b = random_field(35, 2);
  CHECK_THROWS_AS(kg_inner_flat(a, b), GridMismatchError);
  b = random_field(33, 2);
  b.stamp = 2.0;
  CHECK_THROWS_AS(kg_inner_flat(a, b), GridMismatchError);
  b.stamp = a.stamp;
  b.frame = Frame::hyperbolic;
  CHECK_THROWS_AS(kg_inner_flat(a, b), GridMismatchError);
  CHECK_THROWS_AS(kg_inner_hyp(a, a), GridMismatchError);
  CHECK_THROWS_AS(to_two_component(b), GridMismatchError);
  auto c = a;
  c.grid[10] += 1e-3;
  CHECK_THROWS_AS(kg_inner_flat(c, c), GridMismatchError);
}

TEST_CASE("energy moments of a static standing mode") {
  std::vector<double> errs;
  for (std::size_t n : {257u, 513u, 1025u, 2049u}) {
    const auto f = static_mode(n);
    const double norm = kg_inner_flat(f, f).real();
    CHECK(norm == doctest::Approx(kPi).epsilon(1e-10));
    const auto e = energy_expectation(f);
    const auto e2 = energy_sq_expectation(f);
    CHECK(e.imag_within_bound());
    CHECK(e2.imag_within_bound());
    errs.push_back(std::abs(e.value / norm - kPi));
    CHECK(e2.value / norm == doctest::Approx(kPi * kPi).epsilon(1e-4));
  }
  CHECK(errs.back() <= 1e-6);
  for (double o : oracle::observed_orders(errs)) CHECK(o == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("energy of a massless mode equals the quadratic form") {
  // <H> reduces to int (|psi_t|^2 + |psi_x|^2); compare with an exact-derivative quadrature.
  const auto spec = massless(2, 0.5);
  const double t = 3.2;
  const std::size_t n = 8193;
  const auto f = sample_mode_flat(spec, t, n);
  std::vector<double> dens(n);
  for (std::size_t i = 0; i < n; ++i) {
    const FlatJet j = massless_mode_flat_jet(spec, {t, f.grid[i]});
    dens[i] = std::norm(j.d_t) + std::norm(j.d_x);
  }
  double trap = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) trap += 0.5 * (dens[i] + dens[i + 1]) * f.spacing();
  const auto e = energy_expectation(f);
  CHECK(e.value == doctest::Approx(trap).epsilon(1e-5));
  CHECK(e.imag_within_bound());
}

TEST_CASE("classical bounce ratio") {
  CHECK(classical_bounce_ratio(0.5) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(classical_bounce_ratio(1e-9) == doctest::Approx(1.0).epsilon(1e-8));
  for (double nu : {0.1, 0.3, 0.5, 0.9, 0.98}) {
    const double lam = lambda_of_nu(nu);
    CHECK(std::abs(classical_bounce_ratio(nu) * lam * lam - 1.0) <= 1e-14 / (1.0 - nu));
  }
  CHECK_THROWS_AS(classical_bounce_ratio(1.0), DomainError);
}
