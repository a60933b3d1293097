#include "optomech/mean_field.hpp"

#include "optomech/errors.hpp"
#include "optomech/quantum.hpp"

#include <cmath>

namespace optomech {

MeanFieldSample mean_field_rate(const SystemParams& p, std::complex<double> alpha,
                                std::complex<double> beta) {
  using namespace std::complex_literals;
  const double Delta = p.Delta0 + 2.0 * p.g0 * beta.real();
  MeanFieldSample rate;
  rate.alpha = -(p.kappa / 2.0 - 1i * Delta) * alpha + p.A_l;
  rate.beta = -(p.gamma / 2.0 + 1i * p.omega_m) * beta + 1i * p.g0 * std::norm(alpha);
  return rate;
}

std::vector<MeanFieldSample> integrate_mean_field(const SystemParams& params,
                                                  std::complex<double> alpha0,
                                                  std::complex<double> beta0, double t_end,
                                                  double dt, int stride) {
  if (!(dt > 0.0)) throw ParameterError("dt must be > 0");
  if (dt > max_time_step(params.kappa, params.gamma, params.omega_m, params.Delta0)) {
    throw ParameterError("dt exceeds the step bound 0.05/max(kappa, gamma, omega_m, |Delta0|)");
  }
  if (!(t_end >= 0.0)) throw ParameterError("t_end must be >= 0");
  if (stride < 1) throw ParameterError("stride must be >= 1");

  const auto steps = static_cast<long long>(std::ceil(t_end / dt - 1e-9));
  std::vector<MeanFieldSample> out;
  out.reserve(static_cast<std::size_t>(steps / stride + 2));
  std::complex<double> a = alpha0;
  std::complex<double> b = beta0;
  out.push_back({0.0, a, b});
  for (long long n = 1; n <= steps; ++n) {
    const double h = std::min(dt, t_end - static_cast<double>(n - 1) * dt);
    const auto k1 = mean_field_rate(params, a, b);
    const auto k2 = mean_field_rate(params, a + 0.5 * h * k1.alpha, b + 0.5 * h * k1.beta);
    const auto k3 = mean_field_rate(params, a + 0.5 * h * k2.alpha, b + 0.5 * h * k2.beta);
    const auto k4 = mean_field_rate(params, a + h * k3.alpha, b + h * k3.beta);
    a += (h / 6.0) * (k1.alpha + 2.0 * k2.alpha + 2.0 * k3.alpha + k4.alpha);
    b += (h / 6.0) * (k1.beta + 2.0 * k2.beta + 2.0 * k3.beta + k4.beta);
    if (!(std::abs(a) <= 1e12)) {
      throw NumericalError("mean-field trajectory diverged (|alpha| > 1e12)");
    }
    if (n % stride == 0 || n == steps) {
      out.push_back({n == steps ? t_end : static_cast<double>(n) * dt, a, b});
    }
  }
  return out;
}

} // namespace optomech
