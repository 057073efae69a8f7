#pragma once

/// \file modes.hpp
/// \brief Exact mode solutions of the receding-wall well.
///
/// Massless family, in hyperbolic and flat coordinates:
///
///   Psi_n(rho, v) = sin(k_n ln v) exp(-i k_n ln rho) / sqrt(n pi),
///   k_n = n pi / ln Lambda(nu).
///
/// Massive family:
///
///   Phi_n(rho, v) = C sin(k_n ln v) [a_J J_{i k_n}(m rho) + a_Y Y_{i k_n}(m rho)],
///
/// with C fixed numerically so that the hyperbolic KG product has modulus 1.
/// With the default a_J = a_Y = 1 the radial factor is dominated by the
/// Hankel function H^(1) and the KG norm is negative; NormalizedConstant
/// reports that sign.

#include <complex>
#include <vector>

#include "kgwell/coords.hpp"
#include "kgwell/field.hpp"

namespace kgwell {

struct ModeSpec {
  int n = 1;
  double mass = 0.0;
  WallConfig wall;
  cplx a_j{1.0, 0.0};
  cplx a_y{1.0, 0.0};
  /// Evaluate the real part only (the real solution of the real KG equation).
  bool real_solution = false;
};

/// Throws DomainError for n < 1 or mass < 0.
void validate(const ModeSpec& spec);

/// k_n = n pi / ln Lambda(nu).
double k_of_n(const ModeSpec& spec);

/// Value with derivatives along tau = ln rho and u = ln v.
struct HypJet {
  cplx psi;
  cplx d_tau;  // rho d/drho
  cplx d_u;    // v d/dv
};

/// Value with flat-coordinate derivatives.
struct FlatJet {
  cplx psi;
  cplx d_t;
  cplx d_x;
};

/// Chain rule from (tau, u) derivatives to (t, x) derivatives at p.
FlatJet to_flat_jet(const WallConfig& cfg, FlatPoint p, const HypJet& h);

cplx massless_mode_hyp(const ModeSpec& spec, HypPoint p);
HypJet massless_mode_hyp_jet(const ModeSpec& spec, HypPoint p);

/// Direct evaluation of the flat-coordinate closed form.
cplx massless_mode_flat(const ModeSpec& spec, FlatPoint p);
FlatJet massless_mode_flat_jet(const ModeSpec& spec, FlatPoint p);

struct NormalizedConstant {
  cplx constant;
  /// Sign of the unnormalized KG self-product (+1 or -1).
  int norm_sign = 1;
  /// Unnormalized KG self-product that was measured.
  cplx raw_product;
};

/// Constant C for which the hyperbolic KG self-product at rho_ref has
/// modulus 1, measured by Simpson quadrature over u with quad_points samples.
/// Works for both families (the massless radial factor is rho^{-i k}).
/// Throws DegenerateError when the product vanishes.
NormalizedConstant normalize_mode(const ModeSpec& spec, double rho_ref, std::size_t quad_points = 4097);

/// normalize_mode restricted to mass > 0.
NormalizedConstant normalize_massive(const ModeSpec& spec, double rho_ref,
                                     std::size_t quad_points = 4097);

/// Massive mode with its constant computed once at construction.
class MassiveMode {
 public:
  explicit MassiveMode(ModeSpec spec, double rho_ref = 1.0);

  [[nodiscard]] const ModeSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] const NormalizedConstant& normalization() const noexcept { return norm_; }
  [[nodiscard]] double k() const noexcept { return k_; }

  [[nodiscard]] cplx operator()(HypPoint p) const;
  [[nodiscard]] HypJet jet(HypPoint p) const;
  [[nodiscard]] FlatJet flat_jet(FlatPoint p) const;

 private:
  ModeSpec spec_;
  double k_;
  NormalizedConstant norm_;
};

/// One-shot evaluation; computes the normalization on every call.
cplx massive_mode_hyp(const ModeSpec& spec, HypPoint p);

/// Samples a mode on the flat well at time t (n points on [0, L(t)]).
ComplexField sample_mode_flat(const ModeSpec& spec, double t, std::size_t n);

/// Samples a mode on the static strip u in [0, ln Lambda] at rho.
ComplexField sample_mode_hyp(const ModeSpec& spec, double rho, std::size_t n);

}  // namespace kgwell
