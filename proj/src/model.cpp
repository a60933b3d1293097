#include "optomech/model.hpp"

#include "optomech/errors.hpp"

#include <cmath>
#include <string>

namespace optomech {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw ParameterError(message);
}

} // namespace

const char* to_string(Stability s) {
  switch (s) {
  case Stability::stable: return "stable";
  case Stability::unstable: return "unstable";
  case Stability::marginal: return "marginal";
  }
  return "unknown";
}

SystemParams validate_params(const SystemParams& raw) {
  const auto finite = [](double v) { return std::isfinite(v); };
  require(finite(raw.omega_m) && raw.omega_m > 0.0, "omega_m must be > 0");
  require(finite(raw.kappa) && raw.kappa > 0.0, "kappa must be > 0");
  require(finite(raw.gamma) && raw.gamma > 0.0, "gamma must be > 0");
  require(finite(raw.m) && raw.m > 0.0, "m must be > 0");
  require(finite(raw.g0) && raw.g0 >= 0.0, "g0 must be >= 0");
  require(finite(raw.A_l) && raw.A_l >= 0.0, "A_l must be >= 0");
  require(finite(raw.n_th) && raw.n_th >= 0.0, "n_th must be >= 0");
  require(finite(raw.Delta0), "Delta0 must be finite");
  return raw;
}

double optical_angular_frequency(double lambda) {
  require(lambda > 0.0, "lambda must be > 0");
  return 2.0 * constants::pi * constants::speed_of_light / lambda;
}

GeometryCoupling coupling_from_geometry(const CavityGeometry& geom) {
  require(geom.L > 0.0, "L must be > 0");
  require(geom.lambda_l > 0.0, "lambda_l must be > 0");
  require(geom.m_eff > 0.0, "m_eff must be > 0");
  require(geom.omega_m_si > 0.0, "omega_m_si must be > 0");

  GeometryCoupling out;
  out.G = optical_angular_frequency(geom.lambda_l) / geom.L;
  out.x_zp = std::sqrt(constants::hbar / (2.0 * geom.m_eff * geom.omega_m_si));
  out.g0 = out.G * out.x_zp;
  out.fsr = constants::pi * constants::speed_of_light / geom.L;
  return out;
}

double mean_thermal_occupancy(double omega_m_si, double temperature) {
  require(omega_m_si > 0.0, "omega_m must be > 0");
  require(temperature >= 0.0, "temperature must be >= 0");
  if (temperature == 0.0) return 0.0;
  const double x = constants::hbar * omega_m_si / (constants::boltzmann * temperature);
  return 1.0 / std::expm1(x);
}

double photon_momentum_kick(double photon_energy) {
  require(photon_energy >= 0.0, "photon energy must be >= 0");
  return 2.0 * photon_energy / constants::speed_of_light;
}

double beam_radiation_force(double power) {
  require(power >= 0.0, "power must be >= 0");
  return 2.0 * power / constants::speed_of_light;
}

} // namespace optomech
