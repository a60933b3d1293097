#include "optomech/response.hpp"

namespace optomech {

RegimeFlags classify_regime(double gamma_om, double delta_omega_m, const SystemParams& params) {
  RegimeFlags flags;
  flags.total_damping = params.gamma + gamma_om;
  flags.self_oscillation = gamma_om < -params.gamma;
  flags.parametric_instability = delta_omega_m < -params.omega_m;
  flags.resolved_sideband = params.kappa < params.omega_m / 10.0;
  return flags;
}

ResponseQuantities response_quantities(const SystemParams& params, const SteadyState& steady,
                                       double omega) {
  ResponseQuantities r;
  const double Delta = steady.Delta_eff;
  r.g_s = params.g0 * std::abs(steady.alpha_s);
  r.chi_o = optical_susceptibility(omega, Delta, params.kappa);
  r.chi_m = mechanical_susceptibility(omega, params);
  r.Sigma = self_energy(omega, Delta, params.kappa, r.g_s, params.m, params.omega_m);
  r.chi_eff = effective_susceptibility(omega, params, Delta, r.g_s);
  r.gamma_om = optomechanical_damping(Delta, params.kappa, r.g_s, params.omega_m);
  r.delta_omega_m = optical_spring_shift(Delta, params.kappa, r.g_s, params.omega_m);
  return r;
}

} // namespace optomech
