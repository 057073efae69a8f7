#pragma once

/// \file products.hpp
/// \brief KG scalar products, the two-component form, energy moments and the
/// single-bounce redshift of a receding mirror.

#include "kgwell/field.hpp"

namespace kgwell {

/// i * int dx (a^* d_t b - b d_t a^*), composite Simpson.
/// Throws GridMismatchError unless both fields are flat, share the grid and
/// the time stamp.
cplx kg_inner_flat(const ComplexField& a, const ComplexField& b);

/// i * rho * int dv/v (a^* d_rho b - b d_rho a^*), evaluated on the u = ln v
/// grid as i * int du (a^* (rho d_rho) b - b (rho d_rho) a^*).
cplx kg_inner_hyp(const ComplexField& a, const ComplexField& b);

/// Flat-frame fields only.
TwoComponentField to_two_component(const ComplexField& f);

/// 2 * int dx (phi_a^* phi_b - chi_a^* chi_b).
cplx vector_inner(const TwoComponentField& a, const TwoComponentField& b);

/// Real expectation value with the discarded imaginary part kept for checks.
struct Expectation {
  double value = 0.0;
  double imag = 0.0;

  /// |imag| within the 1e-8 sanity bound, scaled by |value| when that is larger than one.
  [[nodiscard]] bool imag_within_bound(double bound = 1e-8) const;
};

/// <H> = 2 int dx Psi^dag sigma_3 H Psi for the massless two-component
/// Hamiltonian H = -((sigma_3 + i sigma_2)/2) Delta + (sigma_3 - i sigma_2)/2.
/// Delta is the 3-point Laplacian with zero ghost values outside the grid;
/// the integral is the trapezoid rule, in which Delta is symmetric on
/// Dirichlet data.
/// Not divided by the KG norm.
Expectation energy_expectation(const ComplexField& f);

/// <H^2> = -i int dx (psi^* Delta psi_t - Delta psi psi_t^*), same Laplacian and rule.
Expectation energy_sq_expectation(const ComplexField& f);

/// E_after / E_before for one bounce of a massless particle off a wall
/// receding at speed nu, traced along exact characteristics. Equals
/// (1 - nu) / (1 + nu) = Lambda(nu)^-2.
double classical_bounce_ratio(double nu);

}  // namespace kgwell
