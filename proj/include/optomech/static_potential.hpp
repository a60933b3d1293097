#pragma once

#include <span>
#include <vector>

namespace optomech {

/// Quasi-static mirror in a Fabry-Perot cavity: a harmonic restoring force
/// plus a radiation force made of Lorentzian resonances of peak F0 and FWHM
/// lambda / (2 finesse), repeating every lambda / 2.
struct StaticPotentialModel {
  double k_HO = 0.0;
  double F0 = 0.0;
  double lambda = 0.0;
  double finesse = 0.0;
  std::vector<double> x_res;

  double width() const { return lambda / (2.0 * finesse); }

  /// Resonances at x_first + j lambda/2 for every j whose line lies within
  /// 50 widths of [x_min, x_max].
  static StaticPotentialModel make(double k_HO, double F0, double lambda, double finesse,
                                   double x_first, double x_min, double x_max);

  double force(double x) const;           // F_RP
  double force_derivative(double x) const; // dF_RP/dx
  double radiation_potential(double x) const; // V_RP = -integral of F_RP
  double harmonic_potential(double x) const { return 0.5 * k_HO * x * x; }
  double total_potential(double x) const { return harmonic_potential(x) + radiation_potential(x); }
  double total_slope(double x) const { return k_HO * x - force(x); }       // dV_t/dx
  double total_curvature(double x) const { return k_HO - force_derivative(x); } // d2V_t/dx2
};

struct Equilibrium {
  double x = 0.0;
  double K_eff = 0.0;
};

struct StaticPotentialProfile {
  std::vector<double> x;
  std::vector<double> F_RP;
  std::vector<double> V_RP;
  std::vector<double> V_HO;
  std::vector<double> V_t;
  std::vector<Equilibrium> equilibria;
};

/// Potentials on the grid and the stable equilibria (minima of V_t) found
/// from sign changes of dV_t/dx, bisected to 1e-10 lambda.
/// Throws ParameterError for an empty or unsorted grid or an invalid model.
StaticPotentialProfile static_potential(const StaticPotentialModel& model, std::span<const double> x);

/// Smallest F0 (within rel_tol) at which the grid shows two or more stable
/// equilibria, found by bisection on [0, F0_max]. Returns a negative value if
/// F0_max is not enough.
double multistability_threshold(StaticPotentialModel model, std::span<const double> x,
                                double F0_max, double rel_tol = 1e-6);

} // namespace optomech
