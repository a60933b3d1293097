#include "optomech/bistability.hpp"
#include "optomech/cubic.hpp"
#include "optomech/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace optomech;

namespace {

SystemParams reference_params(double g0) { return SystemParams{1.0, 0.15, 0.005, g0, 0.0, 5.0, 0.0, 1.0}; }

// Independent window test: three real roots exist iff A_l^2 lies between the
// values of N ((Delta0 + C N)^2 + kappa^2/4) at its two positive critical
// points. Returns the signed margin (positive inside the window).
double fold_margin(const SystemParams& p, double Delta0) {
  const double C = collapse_constant(p);
  const double k2 = p.kappa * p.kappa / 4.0;
  // d/dN [N((D+CN)^2 + k2)] = 3C^2 N^2 + 4 C D N + D^2 + k2
  const double a = 3.0 * C * C, b = 4.0 * C * Delta0, c = Delta0 * Delta0 + k2;
  const double disc = b * b - 4.0 * a * c;
  if (disc <= 0.0) return -1.0;
  const double n1 = (-b - std::sqrt(disc)) / (2.0 * a);
  const double n2 = (-b + std::sqrt(disc)) / (2.0 * a);
  if (n1 <= 0.0) return -1.0;
  const auto f = [&](double N) { return N * ((Delta0 + C * N) * (Delta0 + C * N) + k2); };
  const double target = p.A_l * p.A_l;
  return std::min(f(n1) - target, target - f(n2)) / target;
}

std::vector<double> oracle_edges(const SystemParams& p, const std::vector<double>& grid) {
  std::vector<double> edges;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    double lo = grid[i - 1], hi = grid[i];
    const bool in_lo = fold_margin(p, lo) > 0.0;
    if (in_lo == (fold_margin(p, hi) > 0.0)) continue;
    while (hi - lo > 1e-12) {
      const double mid = 0.5 * (lo + hi);
      ((fold_margin(p, mid) > 0.0) == in_lo ? lo : hi) = mid;
    }
    edges.push_back(0.5 * (lo + hi));
  }
  return edges;
}

} // namespace

TEST_CASE("linspace") {
  const auto g = linspace(-2.0, 1.0, 601);
  CHECK(g.size() == 601);
  CHECK(g.front() == -2.0);
  CHECK(g.back() == 1.0);
  CHECK(g[300] == doctest::Approx(-0.5));
}

TEST_CASE("uncoupled cavity has no bistable window") {
  const auto grid = linspace(-2.0, 1.0, 301);
  const auto sweep = sweep_bistability(reference_params(0.0), grid);
  CHECK(sweep.window_edges.empty());
  for (const auto& pt : sweep.points) CHECK(pt.roots.size() == 1);
  CHECK(hysteresis_sweep(reference_params(0.0), grid, SweepDirection::up) ==
        hysteresis_sweep(reference_params(0.0), grid, SweepDirection::down));
}

TEST_CASE("weak coupling below threshold stays monostable") {
  // C = 1.8e-5 is under kappa^3 / (3 sqrt3 A_l^2) = 2.6e-5.
  const auto grid = linspace(-2.0, 1.0, 601);
  const auto sweep = sweep_bistability(reference_params(0.003), grid);
  CHECK(sweep.window_edges.empty());
  const auto up = hysteresis_sweep(reference_params(0.003), grid, SweepDirection::up);
  const auto down = hysteresis_sweep(reference_params(0.003), grid, SweepDirection::down);
  CHECK(up == down);
}

TEST_CASE("bistable window edges agree with the fold oracle") {
  const SystemParams p = reference_params(0.005);
  const auto grid = linspace(-2.0, 1.0, 601);
  const auto sweep = sweep_bistability(p, grid);
  const auto oracle = oracle_edges(p, grid);
  REQUIRE(oracle.size() == 2);
  REQUIRE(sweep.window_edges.size() == 2);
  CHECK(oracle[0] < 0.0);
  for (std::size_t i = 0; i < 2; ++i) CHECK(std::abs(sweep.window_edges[i] - oracle[i]) <= 1e-6);

  int three = 0;
  for (const auto& pt : sweep.points) {
    const bool inside = pt.Delta0 > sweep.window_edges[0] && pt.Delta0 < sweep.window_edges[1];
    CHECK(pt.roots.size() == (inside ? 3u : 1u));
    if (pt.roots.size() == 3) {
      ++three;
      CHECK(pt.labels == std::vector<Branch>{Branch::lower, Branch::middle, Branch::upper});
      CHECK(pt.stability[0] == Stability::stable);
      CHECK(pt.stability[1] == Stability::unstable);
      CHECK(pt.stability[2] == Stability::stable);
    } else {
      CHECK(pt.labels == std::vector<Branch>{Branch::single});
    }
  }
  CHECK(three > 0);
}

TEST_CASE("hysteresis traces split exactly on the three-root window") {
  const SystemParams p = reference_params(0.005);
  const auto grid = linspace(-2.0, 1.0, 601);
  const auto sweep = sweep_bistability(p, grid);
  const auto up = hysteresis_sweep(p, grid, SweepDirection::up);
  const auto down = hysteresis_sweep(p, grid, SweepDirection::down);
  const double scale = std::max(*std::max_element(up.begin(), up.end()),
                                *std::max_element(down.begin(), down.end()));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const bool differs = std::abs(up[i] - down[i]) > 1e-6 * scale;
    CHECK(differs == (sweep.points[i].roots.size() == 3));
    if (sweep.points[i].roots.size() == 3) {
      // Up sweep rides the lower branch, down sweep the upper one.
      CHECK(up[i] == sweep.points[i].roots.front());
      CHECK(down[i] == sweep.points[i].roots.back());
    }
  }
}

TEST_CASE("sweeps reject unsorted grids") {
  const std::vector<double> bad = {0.0, -1.0, 1.0};
  CHECK_THROWS_AS(sweep_bistability(reference_params(0.005), bad), ParameterError);
  CHECK_THROWS_AS(hysteresis_sweep(reference_params(0.005), bad, SweepDirection::up), ParameterError);
  CHECK_THROWS_AS(stability_map(reference_params(0.005), bad, std::vector<double>{1.0, 2.0}), ParameterError);
}

TEST_CASE("stability map structure") {
  const SystemParams p = reference_params(0.005);
  const auto detunings = linspace(-2.0, 2.0, 41);
  const auto amplitudes = linspace(0.0, 5.0, 11);
  const auto map = stability_map(p, detunings, amplitudes);
  REQUIRE(map.cells.size() == detunings.size() * amplitudes.size());

  for (std::size_t i = 0; i < detunings.size(); ++i) CHECK(map.at(i, 0).occupied_stable());

  bool blue_unstable = false;
  bool any_stable = false;
  for (const auto& c : map.cells) {
    any_stable |= c.occupied_stable();
    if (c.Delta0 > 0.0 && !c.occupied_stable()) blue_unstable = true;
  }
  CHECK(blue_unstable);
  CHECK(any_stable);

  // Uncoupled: drift matrix does not depend on the drive.
  const auto flat = stability_map(reference_params(0.0), detunings, amplitudes);
  for (std::size_t i = 0; i < detunings.size(); ++i) {
    for (std::size_t j = 1; j < amplitudes.size(); ++j) {
      CHECK(flat.at(i, j).stability == flat.at(i, 0).stability);
    }
  }
}
