#pragma once

#include "optomech/cubic.hpp"
#include "optomech/model.hpp"

#include <complex>
#include <vector>

namespace optomech {

/// Fixed point belonging to occupancy root N_o:
///   alpha_s = A_l / (kappa/2 - i Delta), beta_s = i g0 N_o / (gamma/2 + i omega_m),
/// with Delta = Delta0 + C N_o. Stability comes from the Routh-Hurwitz test
/// on the drift matrix at this point. Throws NumericalError when N_o is not
/// a root of the occupancy cubic.
SteadyState steady_state(const SystemParams& params, double N_o);

/// All fixed points, ascending in N_o.
std::vector<SteadyState> steady_states(const SystemParams& params);

/// Mean field leaving the cavity, <a_out> = -sqrt(kappa) alpha_s.
std::complex<double> mean_output_field(std::complex<double> alpha_s, double kappa);

} // namespace optomech
