#pragma once

#include "optomech/model.hpp"

#include <vector>

namespace optomech {

/// Steady-state occupancy cubic
///   c3 N^3 + c2 N^2 + c1 N + c0 = 0,
/// with c3 = 4C^2, c2 = 8 C Delta0, c1 = 4 Delta0^2 + kappa^2, c0 = -4 A_l^2
/// and the collapse constant C = 2 g0^2 omega_m / (gamma^2/4 + omega_m^2).
struct CubicProblem {
  double c3 = 0.0;
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;
  double C = 0.0;

  double operator()(double N) const { return ((c3 * N + c2) * N + c1) * N + c0; }
  double derivative(double N) const { return (3.0 * c3 * N + 2.0 * c2) * N + c1; }

  /// Tolerance on |cubic(N)| for an accepted root.
  double residual_tolerance() const;
};

/// The collapse constant C; the effective detuning is Delta0 + C N_o.
double collapse_constant(const SystemParams& params);

CubicProblem intracavity_cubic(const SystemParams& params);

/// Real non-negative roots in ascending order (one to three of them).
/// Roots come from the balanced companion matrix and are Newton-polished;
/// throws NumericalError when polishing cannot reach the residual tolerance.
std::vector<double> solve_intracavity_occupancy(const CubicProblem& problem);

/// Discriminant of the cubic after rescaling N by the occupancy bound.
/// Positive means three distinct real roots, negative means one. Its sign is
/// invariant under the rescaling. Zero for a degenerate (non-cubic) problem.
double scaled_discriminant(const CubicProblem& problem);

} // namespace optomech
