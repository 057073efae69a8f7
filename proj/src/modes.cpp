#include "kgwell/modes.hpp"

#include <cmath>
#include <numbers>

#include "kgwell/errors.hpp"
#include "kgwell/kernels.hpp"
#include "kgwell/products.hpp"
#include "kgwell/quadrature.hpp"
#include "kgwell/specfun.hpp"

namespace kgwell {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};
constexpr double kStripTol = 1e-10;

void check_strip(const ModeSpec& spec, HypPoint p) {
  if (!(p.rho > 0.0)) throw DomainError("mode evaluation needs rho > 0");
  const double lam = lambda_of_nu(spec.wall.nu());
  if (!(p.v >= 1.0 - kStripTol && p.v <= lam * (1.0 + kStripTol))) {
    throw DomainError("mode evaluation needs 1 <= v <= Lambda(nu)");
  }
}

void check_flat(const ModeSpec& spec, FlatPoint p) {
  if (!in_well(spec.wall, p, kStripTol)) {
    throw DomainError("mode evaluation needs t >= t0 and 0 <= x <= L(t)");
  }
}

HypJet realify(HypJet j) { return {j.psi.real(), j.d_tau.real(), j.d_u.real()}; }

struct RadialJet {
  cplx r;
  cplx d_tau;
};

RadialJet massive_radial(const ModeSpec& spec, double k, double rho) {
  const double z = spec.mass * rho;
  const auto b = specfun::bessel_imag_order(k, z);
  return {spec.a_j * b.j_val + spec.a_y * b.y_val, z * (spec.a_j * b.dj_val + spec.a_y * b.dy_val)};
}

RadialJet massless_radial(double k, double rho) {
  const cplx r = std::exp(-kI * k * std::log(rho));
  return {r, -kI * k * r};
}

HypJet assemble(double k, double u, RadialJet radial, cplx constant) {
  const double s = std::sin(k * u);
  const double c = std::cos(k * u);
  return {constant * s * radial.r, constant * s * radial.d_tau, constant * k * c * radial.r};
}

}  // namespace

void validate(const ModeSpec& spec) {
  if (spec.n < 1) throw DomainError("mode number n must be >= 1");
  if (!(spec.mass >= 0.0) || !std::isfinite(spec.mass)) throw DomainError("mass must be >= 0");
}

double k_of_n(const ModeSpec& spec) {
  validate(spec);
  return spec.n * kPi / std::log(lambda_of_nu(spec.wall.nu()));
}

FlatJet to_flat_jet(const WallConfig& cfg, FlatPoint p, const HypJet& h) {
  const double ts = cfg.shifted_time(p.t);
  const double rho2 = (ts - p.x) * (ts + p.x);
  return {h.psi, (ts * h.d_tau - p.x * h.d_u) / rho2, (-p.x * h.d_tau + ts * h.d_u) / rho2};
}

cplx massless_mode_hyp(const ModeSpec& spec, HypPoint p) { return massless_mode_hyp_jet(spec, p).psi; }

HypJet massless_mode_hyp_jet(const ModeSpec& spec, HypPoint p) {
  const double k = k_of_n(spec);
  if (spec.mass != 0.0) throw DomainError("massless mode requested with nonzero mass");
  check_strip(spec, p);
  const HypJet j = assemble(k, std::log(p.v), massless_radial(k, p.rho), 1.0 / std::sqrt(spec.n * kPi));
  return spec.real_solution ? realify(j) : j;
}

cplx massless_mode_flat(const ModeSpec& spec, FlatPoint p) {
  const double k = k_of_n(spec);
  if (spec.mass != 0.0) throw DomainError("massless mode requested with nonzero mass");
  check_flat(spec, p);
  const double ts = spec.wall.shifted_time(p.t);
  const double amp = std::sin(0.5 * k * std::log((ts + p.x) / (ts - p.x))) / std::sqrt(spec.n * kPi);
  const cplx val = amp * std::exp(-kI * (0.5 * k) * std::log((ts + p.x) * (ts - p.x)));
  return spec.real_solution ? cplx(val.real()) : val;
}

FlatJet massless_mode_flat_jet(const ModeSpec& spec, FlatPoint p) {
  check_flat(spec, p);
  const HypJet h = massless_mode_hyp_jet(spec, flat_to_hyp(spec.wall, p));
  return to_flat_jet(spec.wall, p, h);
}

NormalizedConstant normalize_mode(const ModeSpec& spec, double rho_ref, std::size_t quad_points) {
  const double k = k_of_n(spec);
  if (!(rho_ref > 0.0)) throw DomainError("normalization needs rho_ref > 0");
  if (quad_points < kMinFieldSize) throw DomainError("too few quadrature points");
  const RadialJet radial = spec.mass > 0.0 ? massive_radial(spec, k, rho_ref) : massless_radial(k, rho_ref);

  ComplexField f;
  f.frame = Frame::hyperbolic;
  f.stamp = rho_ref;
  f.grid = uniform_grid(0.0, std::log(lambda_of_nu(spec.wall.nu())), quad_points);
  f.psi.resize(quad_points);
  f.dpsi_dtime.resize(quad_points);
  std::vector<double> scale(quad_points);
  for (std::size_t i = 0; i < quad_points; ++i) {
    HypJet j = assemble(k, f.grid[i], radial, 1.0);
    if (spec.real_solution) j = realify(j);
    f.psi[i] = j.psi;
    f.dpsi_dtime[i] = j.d_tau;
    scale[i] = std::norm(j.psi) + std::norm(j.d_tau);
  }
  const cplx product = kg_inner_hyp(f, f);
  const double reference = quad::simpson(scale, f.spacing());
  if (!(std::abs(product) > 1e-10 * reference)) {
    throw DegenerateError("mode has vanishing KG flux; cannot normalize (check a_J, a_Y)");
  }
  return {1.0 / std::sqrt(std::abs(product)), product.real() < 0.0 ? -1 : 1, product};
}

NormalizedConstant normalize_massive(const ModeSpec& spec, double rho_ref, std::size_t quad_points) {
  if (!(spec.mass > 0.0)) throw DomainError("normalize_massive needs mass > 0");
  return normalize_mode(spec, rho_ref, quad_points);
}

MassiveMode::MassiveMode(ModeSpec spec, double rho_ref)
    : spec_(std::move(spec)), k_(k_of_n(spec_)), norm_(normalize_massive(spec_, rho_ref)) {}

cplx MassiveMode::operator()(HypPoint p) const { return jet(p).psi; }

HypJet MassiveMode::jet(HypPoint p) const {
  check_strip(spec_, p);
  const HypJet j = assemble(k_, std::log(p.v), massive_radial(spec_, k_, p.rho), norm_.constant);
  return spec_.real_solution ? realify(j) : j;
}

FlatJet MassiveMode::flat_jet(FlatPoint p) const {
  check_flat(spec_, p);
  return to_flat_jet(spec_.wall, p, jet(flat_to_hyp(spec_.wall, p)));
}

cplx massive_mode_hyp(const ModeSpec& spec, HypPoint p) { return MassiveMode(spec)(p); }

ComplexField sample_mode_flat(const ModeSpec& spec, double t, std::size_t n) {
  validate(spec);
  ComplexField f;
  f.frame = Frame::flat;
  f.stamp = t;
  f.grid = uniform_grid(0.0, wall_position(spec.wall, t), n);
  f.psi.resize(n);
  f.dpsi_dtime.resize(n);
  auto store = [&](std::size_t i, const FlatJet& j) {
    f.psi[i] = j.psi;
    f.dpsi_dtime[i] = j.d_t;
  };
  if (spec.mass > 0.0) {
    const MassiveMode mode(spec);
    kernels::parallel_for(n, [&](std::size_t i) { store(i, mode.flat_jet({t, f.grid[i]})); });
  } else {
    kernels::parallel_for(n, [&](std::size_t i) { store(i, massless_mode_flat_jet(spec, {t, f.grid[i]})); });
  }
  return f;
}

ComplexField sample_mode_hyp(const ModeSpec& spec, double rho, std::size_t n) {
  validate(spec);
  ComplexField f;
  f.frame = Frame::hyperbolic;
  f.stamp = rho;
  f.grid = uniform_grid(0.0, std::log(lambda_of_nu(spec.wall.nu())), n);
  f.psi.resize(n);
  f.dpsi_dtime.resize(n);
  auto store = [&](std::size_t i, const HypJet& j) {
    f.psi[i] = j.psi;
    f.dpsi_dtime[i] = j.d_tau;
  };
  if (spec.mass > 0.0) {
    const MassiveMode mode(spec);
    kernels::parallel_for(n, [&](std::size_t i) { store(i, mode.jet({rho, std::exp(f.grid[i])})); });
  } else {
    kernels::parallel_for(
        n, [&](std::size_t i) { store(i, massless_mode_hyp_jet(spec, {rho, std::exp(f.grid[i])})); });
  }
  return f;
}

}  // namespace kgwell
