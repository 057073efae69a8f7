#include "kgwell/products.hpp"

#include <cmath>
#include <vector>

#include "kgwell/coords.hpp"
#include "kgwell/errors.hpp"
#include "kgwell/quadrature.hpp"

namespace kgwell {

namespace {

constexpr cplx kI{0.0, 1.0};

void require_same_grid(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw GridMismatchError("fields are sampled on different grids");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > 1e-12 * (1.0 + std::abs(a[i]))) {
      throw GridMismatchError("fields are sampled on different grids");
    }
  }
}

void require_pair(const ComplexField& a, const ComplexField& b, Frame frame) {
  validate(a);
  validate(b);
  if (a.frame != frame || b.frame != frame) {
    throw GridMismatchError(frame == Frame::flat ? "kg_inner_flat needs flat-frame fields"
                                                 : "kg_inner_hyp needs hyperbolic-frame fields");
  }
  if (std::abs(a.stamp - b.stamp) > 1e-12 * (1.0 + std::abs(a.stamp))) {
    throw GridMismatchError("fields belong to different time slices");
  }
  require_same_grid(a.grid, b.grid);
}

cplx flux_integral(const ComplexField& a, const ComplexField& b) {
  std::vector<cplx> integrand(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    integrand[i] = std::conj(a.psi[i]) * b.dpsi_dtime[i] - b.psi[i] * std::conj(a.dpsi_dtime[i]);
  }
  return kI * quad::simpson(integrand, a.spacing());
}

// Three-point Laplacian with zero ghost values.
std::vector<cplx> laplacian(const std::vector<cplx>& f, double h) {
  const std::size_t n = f.size();
  std::vector<cplx> out(n);
  const double inv = 1.0 / (h * h);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx left = i > 0 ? f[i - 1] : cplx{};
    const cplx right = i + 1 < n ? f[i + 1] : cplx{};
    out[i] = (left - 2.0 * f[i] + right) * inv;
  }
  return out;
}

// Trapezoid rule. On fields that vanish at both ends this is the node sum in
// which the zero-ghost Laplacian is exactly symmetric, so the imaginary parts
// of the energy moments cancel to round-off. The half end weights matter for
// |psi_t|^2, which need not vanish on a moving wall.
cplx trapezoid(const std::vector<cplx>& f, double h) {
  cplx acc = 0.5 * (f.front() + f.back());
  for (std::size_t i = 1; i + 1 < f.size(); ++i) acc += f[i];
  return h * acc;
}

}  // namespace

cplx kg_inner_flat(const ComplexField& a, const ComplexField& b) {
  require_pair(a, b, Frame::flat);
  return flux_integral(a, b);
}

cplx kg_inner_hyp(const ComplexField& a, const ComplexField& b) {
  require_pair(a, b, Frame::hyperbolic);
  return flux_integral(a, b);
}

TwoComponentField to_two_component(const ComplexField& f) {
  validate(f);
  if (f.frame != Frame::flat) throw GridMismatchError("two-component form needs a flat-frame field");
  TwoComponentField out{f.grid, std::vector<cplx>(f.size()), std::vector<cplx>(f.size()), f.stamp};
  for (std::size_t i = 0; i < f.size(); ++i) {
    const cplx idt = kI * f.dpsi_dtime[i];
    out.phi[i] = 0.5 * (f.psi[i] + idt);
    out.chi[i] = 0.5 * (f.psi[i] - idt);
  }
  return out;
}

cplx vector_inner(const TwoComponentField& a, const TwoComponentField& b) {
  require_same_grid(a.grid, b.grid);
  if (a.phi.size() != a.grid.size() || b.phi.size() != b.grid.size() ||
      a.chi.size() != a.grid.size() || b.chi.size() != b.grid.size()) {
    throw GridMismatchError("two-component field length mismatch");
  }
  if (a.grid.size() < 2) throw GridMismatchError("two-component field too short");
  std::vector<cplx> integrand(a.grid.size());
  for (std::size_t i = 0; i < integrand.size(); ++i) {
    integrand[i] = std::conj(a.phi[i]) * b.phi[i] - std::conj(a.chi[i]) * b.chi[i];
  }
  return 2.0 * quad::simpson(integrand, a.grid[1] - a.grid[0]);
}

bool Expectation::imag_within_bound(double bound) const {
  return std::abs(imag) <= bound * std::max(1.0, std::abs(value));
}

Expectation energy_expectation(const ComplexField& f) {
  const TwoComponentField fv = to_two_component(f);
  const double h = f.spacing();
  const std::size_t n = f.size();

  // H acting on (phi, chi): with s = phi + chi and d = phi - chi,
  //   (H Psi)_1 = -Delta s / 2 + d / 2,   (H Psi)_2 = Delta s / 2 + d / 2.
  std::vector<cplx> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = fv.phi[i] + fv.chi[i];
  const std::vector<cplx> lap = laplacian(s, h);

  std::vector<cplx> integrand(n);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx d = fv.phi[i] - fv.chi[i];
    const cplx h1 = -0.5 * lap[i] + 0.5 * d;
    const cplx h2 = 0.5 * lap[i] + 0.5 * d;
    integrand[i] = std::conj(fv.phi[i]) * h1 - std::conj(fv.chi[i]) * h2;  // sigma_3
  }
  const cplx val = 2.0 * trapezoid(integrand, h);
  return {val.real(), val.imag()};
}

Expectation energy_sq_expectation(const ComplexField& f) {
  validate(f);
  if (f.frame != Frame::flat) throw GridMismatchError("energy moments need a flat-frame field");
  const double h = f.spacing();
  const std::vector<cplx> lap = laplacian(f.psi, h);
  const std::vector<cplx> lap_t = laplacian(f.dpsi_dtime, h);
  std::vector<cplx> integrand(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    integrand[i] = std::conj(f.psi[i]) * lap_t[i] - lap[i] * std::conj(f.dpsi_dtime[i]);
  }
  const cplx val = -kI * trapezoid(integrand, h);
  return {val.real(), val.imag()};
}

double classical_bounce_ratio(double nu) {
  lambda_of_nu(nu);  // domain check
  // Wall at x = nu * s in shifted time s. Two successive crests leave x = 0
  // at s = a and s = a + T, hit the wall at s_hit = a / (1 - nu) and return
  // to x = 0 at s_hit + nu * s_hit. The period ratio is the energy ratio.
  auto return_time = [nu](double emit) {
    const double hit = emit / (1.0 - nu);
    return hit + nu * hit;
  };
  const double a = 1.0;
  const double period = 1.0;
  const double t1 = return_time(a);
  const double t2 = return_time(a + period);
  return period / (t2 - t1);
}

}  // namespace kgwell
