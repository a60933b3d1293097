#pragma once

#include "optomech/model.hpp"

#include <complex>
#include <vector>

namespace optomech {

struct MeanFieldSample {
  double t = 0.0;
  std::complex<double> alpha;
  std::complex<double> beta;
};

/// Right-hand side of the classical mean-field equations
///   d(alpha)/dt = -(kappa/2 - i Delta) alpha + A_l,
///   d(beta)/dt  = -(gamma/2 + i omega_m) beta + i g0 |alpha|^2,
/// with Delta = Delta0 + 2 g0 Re(beta).
MeanFieldSample mean_field_rate(const SystemParams& params, std::complex<double> alpha,
                                std::complex<double> beta);

/// Fixed-step RK4 integration from (alpha0, beta0) up to t_end. Samples are
/// taken at t = 0, every `stride` steps and at t_end.
/// Throws ParameterError when dt exceeds 0.05 / max(kappa, gamma, omega_m,
/// |Delta0|) and NumericalError when |alpha| grows past 1e12.
std::vector<MeanFieldSample> integrate_mean_field(const SystemParams& params,
                                                  std::complex<double> alpha0,
                                                  std::complex<double> beta0, double t_end,
                                                  double dt, int stride = 1);

} // namespace optomech
