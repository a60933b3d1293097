#include "optomech/static_potential.hpp"

#include "optomech/errors.hpp"

#include <algorithm>
#include <cmath>

namespace optomech {

StaticPotentialModel StaticPotentialModel::make(double k_HO, double F0, double lambda,
                                                double finesse, double x_first, double x_min,
                                                double x_max) {
  if (!(lambda > 0.0) || !(finesse > 0.0)) throw ParameterError("lambda and finesse must be > 0");
  StaticPotentialModel m{k_HO, F0, lambda, finesse, {}};
  const double spacing = lambda / 2.0;
  const double margin = 50.0 * m.width();
  const auto j_lo = static_cast<long>(std::floor((x_min - margin - x_first) / spacing));
  const auto j_hi = static_cast<long>(std::ceil((x_max + margin - x_first) / spacing));
  for (long j = j_lo; j <= j_hi; ++j) m.x_res.push_back(x_first + static_cast<double>(j) * spacing);
  return m;
}

double StaticPotentialModel::force(double x) const {
  const double w = width();
  double f = 0.0;
  for (double xj : x_res) {
    const double u = 2.0 * (x - xj) / w;
    f += F0 / (1.0 + u * u);
  }
  return f;
}

double StaticPotentialModel::force_derivative(double x) const {
  const double w = width();
  double df = 0.0;
  for (double xj : x_res) {
    const double u = 2.0 * (x - xj) / w;
    const double q = 1.0 + u * u;
    df += -F0 * 2.0 * u / (q * q) * (2.0 / w);
  }
  return df;
}

double StaticPotentialModel::radiation_potential(double x) const {
  const double w = width();
  double v = 0.0;
  for (double xj : x_res) v -= F0 * (w / 2.0) * std::atan(2.0 * (x - xj) / w);
  return v;
}

StaticPotentialProfile static_potential(const StaticPotentialModel& model, std::span<const double> x) {
  if (x.empty()) throw ParameterError("x grid is empty");
  if (!std::is_sorted(x.begin(), x.end())) throw ParameterError("x grid must be sorted ascending");
  if (!(model.k_HO > 0.0)) throw ParameterError("k_HO must be > 0");
  if (!(model.F0 >= 0.0)) throw ParameterError("F0 must be >= 0");
  if (!(model.width() > 0.0)) throw ParameterError("resonance width must be > 0");

  StaticPotentialProfile out;
  out.x.assign(x.begin(), x.end());
  for (double xi : x) {
    out.F_RP.push_back(model.force(xi));
    out.V_RP.push_back(model.radiation_potential(xi));
    out.V_HO.push_back(model.harmonic_potential(xi));
    out.V_t.push_back(out.V_HO.back() + out.V_RP.back());
  }

  const double tol = 1e-10 * model.lambda;
  double prev = model.total_slope(x[0]);
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double cur = model.total_slope(x[i]);
    if (prev < 0.0 && cur >= 0.0) {
      double lo = x[i - 1];
      double hi = x[i];
      while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (model.total_slope(mid) < 0.0) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      const double xe = 0.5 * (lo + hi);
      const double curvature = model.total_curvature(xe);
      if (curvature > 0.0) out.equilibria.push_back({xe, curvature});
    }
    prev = cur;
  }
  return out;
}

double multistability_threshold(StaticPotentialModel model, std::span<const double> x,
                                double F0_max, double rel_tol) {
  const auto count_at = [&](double F0) {
    model.F0 = F0;
    return static_potential(model, x).equilibria.size();
  };
  if (count_at(F0_max) < 2) return -1.0;
  double lo = 0.0;
  double hi = F0_max;
  while (hi - lo > rel_tol * hi) {
    const double mid = 0.5 * (lo + hi);
    if (count_at(mid) >= 2) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

} // namespace optomech
