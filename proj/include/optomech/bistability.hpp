#pragma once

#include "optomech/model.hpp"

#include <span>
#include <vector>

namespace optomech {

enum class Branch { single, lower, middle, upper };

const char* to_string(Branch b);

/// Branch names for a set of ascending roots: one root is `single`, two are
/// lower/upper, three are lower/middle/upper.
std::vector<Branch> branch_labels(std::size_t root_count);

struct BistabilityPoint {
  double Delta0 = 0.0;
  std::vector<double> roots; // ascending
  std::vector<Branch> labels;
  std::vector<Stability> stability;
};

struct BistabilityBranch {
  std::vector<BistabilityPoint> points;
  /// Detunings where the cubic discriminant changes sign, refined by
  /// bisection to 1e-6. Ascending.
  std::vector<double> window_edges;

  std::vector<double> detunings() const;
};

inline constexpr double kWindowEdgeTolerance = 1e-6;

/// Occupancy roots and their stability over a sorted Delta0 grid
/// (params.Delta0 is overridden per grid point).
BistabilityBranch sweep_bistability(const SystemParams& params, std::span<const double> detunings);

enum class SweepDirection { up, down };

/// Adiabatic sweep: at each grid point the occupancy nearest to the previous
/// one is taken, so the trace jumps only when its branch disappears. The up
/// sweep starts on the lowest root, the down sweep on the highest. The
/// result is reported in grid (ascending) order for both directions.
std::vector<double> hysteresis_sweep(const SystemParams& params, std::span<const double> detunings,
                                     SweepDirection direction);

struct StabilityCell {
  double Delta0 = 0.0;
  double A_l = 0.0;
  std::vector<double> roots;
  std::vector<Stability> stability;
  /// Index into `roots` of the occupied branch: the lowest root, which is the
  /// state reached by sweeping in from the red-detuned side.
  std::size_t occupied = 0;

  bool occupied_stable() const { return stability[occupied] == Stability::stable; }
};

struct StabilityMap {
  std::vector<double> detunings;
  std::vector<double> amplitudes;
  /// Row-major in amplitude: cells[i_amp * detunings.size() + i_det].
  std::vector<StabilityCell> cells;

  const StabilityCell& at(std::size_t i_det, std::size_t i_amp) const {
    return cells[i_amp * detunings.size() + i_det];
  }
};

StabilityMap stability_map(const SystemParams& params, std::span<const double> detunings,
                           std::span<const double> amplitudes);

/// `count` evenly spaced values from start to stop inclusive.
std::vector<double> linspace(double start, double stop, std::size_t count);

} // namespace optomech
