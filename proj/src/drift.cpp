#include "optomech/quantum.hpp"

#include "optomech/model.hpp"

namespace optomech {

DriftMatrix drift_matrix(const FluctuationCoefficients& c) {
  const double gR = c.g.real();
  const double gI = c.g.imag();
  DriftMatrix A;
  // clang-format off
  A.entries <<
      -c.kappa / 2.0, -c.Delta,        -2.0 * gI,        0.0,
       c.Delta,       -c.kappa / 2.0,   2.0 * gR,        0.0,
       0.0,            0.0,            -c.gamma / 2.0,   c.omega_m,
       2.0 * gR,       2.0 * gI,       -c.omega_m,      -c.gamma / 2.0;
  // clang-format on
  return A;
}

DriftMatrix drift_matrix(const SystemParams& params, const SteadyState& steady) {
  FluctuationCoefficients c;
  c.kappa = params.kappa;
  c.gamma = params.gamma;
  c.omega_m = params.omega_m;
  c.Delta = steady.Delta_eff;
  c.g = params.g0 * steady.alpha_s;
  return drift_matrix(c);
}

DiffusionMatrix diffusion_matrix(double kappa, double gamma, double n_th) {
  DiffusionMatrix D;
  const double mech = gamma * (n_th + 0.5);
  D.entries.diagonal() << kappa / 2.0, kappa / 2.0, mech, mech;
  return D;
}

DiffusionMatrix diffusion_matrix(const SystemParams& params) {
  return diffusion_matrix(params.kappa, params.gamma, params.n_th);
}

} // namespace optomech
