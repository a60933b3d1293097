#pragma once

#include <complex>

namespace optomech {

namespace constants {
inline constexpr double speed_of_light = 299792458.0;    // m/s
inline constexpr double planck = 6.62607015e-34;         // J s
inline constexpr double hbar = 1.054571817e-34;          // J s
inline constexpr double boltzmann = 1.380649e-23;        // J/K
inline constexpr double pi = 3.141592653589793238462643383279502884;
} // namespace constants

/// Dimensionless parameter set of a single-mode driven optomechanical cavity.
///
/// All rates are expressed in units of the mechanical frequency, so the
/// canonical normalization is omega_m = 1. The drive amplitude A_l is real
/// (the laser phase is fixed). The mass m only enters the dimensionful
/// susceptibilities and the self-energy.
struct SystemParams {
  double omega_m = 1.0;
  double kappa = 0.0;
  double gamma = 0.0;
  double g0 = 0.0;
  double Delta0 = 0.0;
  double A_l = 0.0;
  double n_th = 0.0;
  double m = 1.0;

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

/// Checks every invariant and returns the parameters unchanged.
/// Throws ParameterError naming the offending field.
SystemParams validate_params(const SystemParams& raw);

/// Physical (SI) description of a Fabry-Perot cavity with a movable mirror.
struct CavityGeometry {
  double L = 0.0;          // cavity length, m
  double lambda_l = 0.0;   // drive wavelength, m
  double m_eff = 0.0;      // effective mirror mass, kg
  double omega_m_si = 0.0; // mechanical angular frequency, rad/s
};

struct GeometryCoupling {
  double G = 0.0;    // frequency pull omega_o / L, rad/(s m)
  double x_zp = 0.0; // zero-point displacement, m
  double g0 = 0.0;   // single-photon coupling G * x_zp, rad/s
  double fsr = 0.0;  // free spectral range pi c / L, rad/s
};

GeometryCoupling coupling_from_geometry(const CavityGeometry& geom);

/// Cavity resonance omega_o = 2 pi c / lambda.
double optical_angular_frequency(double lambda);

/// Bose-Einstein occupancy [exp(hbar w / kB T) - 1]^-1; exactly 0 at T = 0.
double mean_thermal_occupancy(double omega_m_si, double temperature);

/// Momentum transferred to a perfect mirror by one reflected photon, 2E/c.
double photon_momentum_kick(double photon_energy);

/// Force exerted on a perfect mirror by a reflected beam of power P, 2P/c.
double beam_radiation_force(double power);

/// Verdict of a linear stability test. `marginal` means some Hurwitz
/// quantity sits inside the numerical dead band around zero.
enum class Stability { stable, unstable, marginal };

const char* to_string(Stability s);

/// One classical fixed point of the mean-field equations.
///
/// N_o = |alpha_s|^2 and Delta_eff = Delta0 + 2 g0 Re(beta_s).
struct SteadyState {
  std::complex<double> alpha_s;
  std::complex<double> beta_s;
  double N_o = 0.0;
  double Delta_eff = 0.0;
  Stability verdict = Stability::marginal;
  bool stable = false;
};

} // namespace optomech
