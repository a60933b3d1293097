#include "optomech/bistability.hpp"

#include "optomech/cubic.hpp"
#include "optomech/errors.hpp"
#include "optomech/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace optomech {

namespace {

void require_sorted(std::span<const double> grid, const char* name) {
  if (grid.empty()) throw ParameterError(std::string(name) + " grid is empty");
  if (!std::is_sorted(grid.begin(), grid.end())) {
    throw ParameterError(std::string(name) + " grid must be sorted ascending");
  }
}

SystemParams at_detuning(SystemParams p, double Delta0) {
  p.Delta0 = Delta0;
  return p;
}

int discriminant_sign(const SystemParams& params, double Delta0) {
  const double d = scaled_discriminant(intracavity_cubic(at_detuning(params, Delta0)));
  return (d > 0.0) - (d < 0.0);
}

double refine_edge(const SystemParams& params, double lo, double hi) {
  const int s_lo = discriminant_sign(params, lo);
  while (hi - lo > kWindowEdgeTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (discriminant_sign(params, mid) == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::size_t nearest(const std::vector<double>& roots, double target) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < roots.size(); ++i) {
    if (std::abs(roots[i] - target) < std::abs(roots[best] - target)) best = i;
  }
  return best;
}

} // namespace

const char* to_string(Branch b) {
  switch (b) {
  case Branch::single: return "single";
  case Branch::lower: return "lower";
  case Branch::middle: return "middle";
  case Branch::upper: return "upper";
  }
  return "unknown";
}

std::vector<Branch> branch_labels(std::size_t root_count) {
  switch (root_count) {
  case 1: return {Branch::single};
  case 2: return {Branch::lower, Branch::upper};
  case 3: return {Branch::lower, Branch::middle, Branch::upper};
  default: return {};
  }
}

std::vector<double> BistabilityBranch::detunings() const {
  std::vector<double> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.Delta0);
  return out;
}

BistabilityBranch sweep_bistability(const SystemParams& params, std::span<const double> detunings) {
  require_sorted(detunings, "Delta0");
  BistabilityBranch out;
  out.points.reserve(detunings.size());
  for (double d : detunings) {
    BistabilityPoint point;
    point.Delta0 = d;
    for (const auto& s : steady_states(at_detuning(params, d))) {
      point.roots.push_back(s.N_o);
      point.stability.push_back(s.verdict);
    }
    point.labels = branch_labels(point.roots.size());
    out.points.push_back(std::move(point));
  }

  int previous = discriminant_sign(params, detunings.front());
  for (std::size_t i = 1; i < detunings.size(); ++i) {
    const int current = discriminant_sign(params, detunings[i]);
    if (current != previous && detunings[i] > detunings[i - 1]) {
      out.window_edges.push_back(refine_edge(params, detunings[i - 1], detunings[i]));
    }
    previous = current;
  }
  return out;
}

std::vector<double> hysteresis_sweep(const SystemParams& params, std::span<const double> detunings,
                                     SweepDirection direction) {
  require_sorted(detunings, "Delta0");
  const std::size_t n = detunings.size();
  std::vector<double> trace(n);
  double previous = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = direction == SweepDirection::up ? k : n - 1 - k;
    const auto roots = solve_intracavity_occupancy(intracavity_cubic(at_detuning(params, detunings[i])));
    if (k == 0) {
      previous = direction == SweepDirection::up ? roots.front() : roots.back();
    } else {
      previous = roots[nearest(roots, previous)];
    }
    trace[i] = previous;
  }
  return trace;
}

StabilityMap stability_map(const SystemParams& params, std::span<const double> detunings,
                           std::span<const double> amplitudes) {
  require_sorted(detunings, "Delta0");
  require_sorted(amplitudes, "A_l");
  StabilityMap map;
  map.detunings.assign(detunings.begin(), detunings.end());
  map.amplitudes.assign(amplitudes.begin(), amplitudes.end());
  map.cells.reserve(detunings.size() * amplitudes.size());
  for (double a : amplitudes) {
    for (double d : detunings) {
      SystemParams p = params;
      p.Delta0 = d;
      p.A_l = a;
      StabilityCell cell;
      cell.Delta0 = d;
      cell.A_l = a;
      for (const auto& s : steady_states(validate_params(p))) {
        cell.roots.push_back(s.N_o);
        cell.stability.push_back(s.verdict);
      }
      map.cells.push_back(std::move(cell));
    }
  }
  return map;
}

std::vector<double> linspace(double start, double stop, std::size_t count) {
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = start;
    return out;
  }
  const double step = (stop - start) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = start + step * static_cast<double>(i);
  if (count > 0) out.back() = stop;
  return out;
}

} // namespace optomech
