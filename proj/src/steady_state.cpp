#include "optomech/steady_state.hpp"

#include "optomech/errors.hpp"
#include "optomech/quantum.hpp"
#include "optomech/routh_hurwitz.hpp"

#include <cmath>

namespace optomech {

SteadyState steady_state(const SystemParams& params, double N_o) {
  const CubicProblem cubic = intracavity_cubic(params);
  if (!(N_o >= 0.0) || std::abs(cubic(N_o)) > cubic.residual_tolerance()) {
    throw NumericalError("N_o is not a root of the occupancy cubic for these parameters");
  }
  using namespace std::complex_literals;
  SteadyState s;
  s.Delta_eff = params.Delta0 + cubic.C * N_o;
  s.alpha_s = params.A_l / (params.kappa / 2.0 - 1i * s.Delta_eff);
  s.beta_s = 1i * params.g0 * N_o / (params.gamma / 2.0 + 1i * params.omega_m);
  s.N_o = N_o;
  s.verdict = routh_hurwitz(drift_matrix(params, s).entries);
  s.stable = s.verdict == Stability::stable;
  return s;
}

std::vector<SteadyState> steady_states(const SystemParams& params) {
  std::vector<SteadyState> out;
  for (double N : solve_intracavity_occupancy(intracavity_cubic(params))) {
    out.push_back(steady_state(params, N));
  }
  return out;
}

std::complex<double> mean_output_field(std::complex<double> alpha_s, double kappa) {
  if (!(kappa > 0.0)) throw ParameterError("kappa must be > 0");
  return -std::sqrt(kappa) * alpha_s;
}

} // namespace optomech
