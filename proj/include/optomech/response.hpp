#pragma once

#include "optomech/errors.hpp"
#include "optomech/model.hpp"

#include <cmath>
#include <complex>

namespace optomech {

/// chi_o(w) = 1 / (kappa/2 - i (Delta + w)).
template <typename Real>
std::complex<Real> optical_susceptibility(Real omega, Real Delta, Real kappa) {
  return Real(1) / std::complex<Real>(kappa / Real(2), -(Delta + omega));
}

/// chi_m(w) = 1 / (m (omega_m^2 - w^2) - i m gamma w).
template <typename Real>
std::complex<Real> mechanical_susceptibility(Real omega, Real omega_m, Real gamma, Real m) {
  return Real(1) / std::complex<Real>(m * (omega_m * omega_m - omega * omega), -m * gamma * omega);
}

inline std::complex<double> mechanical_susceptibility(double omega, const SystemParams& p) {
  return mechanical_susceptibility(omega, p.omega_m, p.gamma, p.m);
}

/// Optomechanical self-energy
///   Sigma(w) = 2 i m omega_m g_s^2 (chi_o(w) - conj(chi_o(-w))).
template <typename Real>
std::complex<Real> self_energy(Real omega, Real Delta, Real kappa, Real g_s, Real m, Real omega_m) {
  const auto plus = optical_susceptibility(omega, Delta, kappa);
  const auto minus = std::conj(optical_susceptibility(-omega, Delta, kappa));
  return std::complex<Real>(0, 2) * m * omega_m * g_s * g_s * (plus - minus);
}

/// Mechanical response dressed by the cavity, chi = 1 / (1/chi_m - Sigma).
/// Throws NumericalError at a pole of the dressed response.
template <typename Real>
std::complex<Real> effective_susceptibility(Real omega, Real Delta, Real kappa, Real g_s,
                                            Real omega_m, Real gamma, Real m) {
  const auto chi_m = mechanical_susceptibility(omega, omega_m, gamma, m);
  const auto sigma = self_energy(omega, Delta, kappa, g_s, m, omega_m);
  if (std::abs(Real(1) / chi_m - sigma) < Real(1e-14)) {
    throw NumericalError("effective susceptibility has a pole at this frequency");
  }
  // chi_m / (1 - Sigma chi_m) equals 1 / (1/chi_m - Sigma) and is exactly
  // chi_m when Sigma vanishes.
  return chi_m / (Real(1) - sigma * chi_m);
}

inline std::complex<double> effective_susceptibility(double omega, const SystemParams& p,
                                                     double Delta, double g_s) {
  return effective_susceptibility(omega, Delta, p.kappa, g_s, p.omega_m, p.gamma, p.m);
}

/// Light-induced mechanical damping; positive (cooling) for Delta < 0.
template <typename Real>
Real optomechanical_damping(Real Delta, Real kappa, Real g_s, Real omega_m) {
  const Real k2 = kappa * kappa / Real(4);
  const Real red = omega_m + Delta;
  const Real blue = omega_m - Delta;
  return g_s * g_s * kappa * (Real(1) / (k2 + red * red) - Real(1) / (k2 + blue * blue));
}

/// Optical-spring shift of the mechanical frequency.
template <typename Real>
Real optical_spring_shift(Real Delta, Real kappa, Real g_s, Real omega_m) {
  const Real k2 = kappa * kappa / Real(4);
  const Real red = omega_m + Delta;
  const Real blue = omega_m - Delta;
  return g_s * g_s * (red / (k2 + red * red) - blue / (k2 + blue * blue));
}

struct RegimeFlags {
  double total_damping = 0.0;
  bool self_oscillation = false;       // gamma_om < -gamma
  bool parametric_instability = false; // delta_omega_m < -omega_m
  bool resolved_sideband = false;      // kappa < omega_m / 10
};

RegimeFlags classify_regime(double gamma_om, double delta_omega_m, const SystemParams& params);

struct ResponseQuantities {
  std::complex<double> chi_o;
  std::complex<double> chi_m;
  std::complex<double> chi_eff;
  std::complex<double> Sigma;
  double gamma_om = 0.0;
  double delta_omega_m = 0.0;
  double g_s = 0.0;
};

/// Every linear-response quantity at probe frequency omega, evaluated at a
/// classical fixed point (Delta = Delta_eff, g_s = g0 |alpha_s|).
ResponseQuantities response_quantities(const SystemParams& params, const SteadyState& steady,
                                       double omega);

} // namespace optomech
