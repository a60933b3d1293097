#include "optomech/quantum.hpp"

#include "optomech/errors.hpp"

#include <cmath>

namespace optomech {

const char* to_string(InteractionKind kind) {
  switch (kind) {
  case InteractionKind::beam_splitter: return "beam_splitter";
  case InteractionKind::two_mode_squeezer: return "two_mode_squeezer";
  case InteractionKind::off_resonant: return "off_resonant";
  }
  return "unknown";
}

RegimeReport rwa_interaction(double Delta, double omega_m, double kappa, double g_s,
                             double tol_res) {
  if (!(tol_res > 0.0)) throw ParameterError("tol_res must be > 0");
  const bool red = std::abs(Delta + omega_m) <= tol_res;
  const bool blue = std::abs(Delta - omega_m) <= tol_res;
  if (red && blue) {
    throw ParameterError("resonance windows overlap: tol_res must be < omega_m");
  }
  RegimeReport report;
  report.interaction_kind = red    ? InteractionKind::beam_splitter
                            : blue ? InteractionKind::two_mode_squeezer
                                   : InteractionKind::off_resonant;
  report.resolved_sideband = kappa < omega_m / 10.0;
  report.g_s = g_s;
  return report;
}

RegimeReport rwa_interaction(double Delta, double omega_m, double kappa, double g_s) {
  return rwa_interaction(Delta, omega_m, kappa, g_s, kappa / 2.0);
}

} // namespace optomech
