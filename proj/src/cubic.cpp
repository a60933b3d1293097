#include "optomech/cubic.hpp"

#include "optomech/errors.hpp"

#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>
#include <complex>

namespace optomech {

namespace {

constexpr int kNewtonIterations = 60;

std::complex<double> evaluate(const CubicProblem& p, std::complex<double> z) {
  return ((p.c3 * z + p.c2) * z + p.c1) * z + p.c0;
}

std::complex<double> evaluate_derivative(const CubicProblem& p, std::complex<double> z) {
  return (3.0 * p.c3 * z + 2.0 * p.c2) * z + p.c1;
}

std::complex<double> polish_complex(const CubicProblem& p, std::complex<double> z) {
  for (int it = 0; it < kNewtonIterations; ++it) {
    const auto d = evaluate_derivative(p, z);
    if (std::abs(d) == 0.0) break;
    const auto step = evaluate(p, z) / d;
    z -= step;
    if (std::abs(step) <= 1e-15 * (1.0 + std::abs(z))) break;
  }
  return z;
}

double polish_real(const CubicProblem& p, double x) {
  double best = x;
  double best_residual = std::abs(p(x));
  for (int it = 0; it < kNewtonIterations; ++it) {
    const double d = p.derivative(x);
    if (d == 0.0) break;
    const double step = p(x) / d;
    x -= step;
    const double r = std::abs(p(x));
    if (r < best_residual) {
      best = x;
      best_residual = r;
    }
    if (std::abs(step) <= 1e-15 * (1.0 + std::abs(x))) break;
  }
  return best;
}

} // namespace

double CubicProblem::residual_tolerance() const {
  return 1e-8 * std::max(1.0, std::abs(c0));
}

double collapse_constant(const SystemParams& params) {
  const double w = params.omega_m;
  return 2.0 * params.g0 * params.g0 * w / (params.gamma * params.gamma / 4.0 + w * w);
}

CubicProblem intracavity_cubic(const SystemParams& params) {
  CubicProblem p;
  p.C = collapse_constant(params);
  p.c3 = 4.0 * p.C * p.C;
  p.c2 = 8.0 * p.C * params.Delta0;
  p.c1 = 4.0 * params.Delta0 * params.Delta0 + params.kappa * params.kappa;
  p.c0 = -4.0 * params.A_l * params.A_l;
  return p;
}

std::vector<double> solve_intracavity_occupancy(const CubicProblem& problem) {
  if (problem.c0 == 0.0) return {0.0};
  if (!(problem.c1 > 0.0)) throw NumericalError("occupancy cubic has non-positive linear coefficient");

  std::vector<double> candidates;
  if (problem.c3 == 0.0) {
    candidates.push_back(-problem.c0 / problem.c1);
  } else {
    // Rescale N = s y with s the linear-cavity occupancy so the companion
    // matrix entries stay O(1) for weak coupling.
    const double s = -problem.c0 / problem.c1;
    Eigen::Vector4d coeffs;
    coeffs << problem.c0 / (problem.c1 * s), 1.0, problem.c2 * s / problem.c1,
        problem.c3 * s * s / problem.c1;
    Eigen::PolynomialSolver<double, 3> solver(coeffs);
    for (const auto& y : solver.roots()) {
      const auto z = polish_complex(problem, s * y);
      if (std::abs(z.imag()) <= 1e-9 * (1.0 + std::abs(z.real()))) {
        candidates.push_back(polish_real(problem, z.real()));
      }
    }
  }

  const double tol = problem.residual_tolerance();
  std::vector<double> roots;
  for (double N : candidates) {
    if (N < 0.0) continue;
    if (std::abs(problem(N)) > tol) {
      throw NumericalError("occupancy root failed to reach residual tolerance");
    }
    roots.push_back(N);
  }
  if (roots.empty()) throw NumericalError("no non-negative real occupancy root found");
  std::sort(roots.begin(), roots.end());
  return roots;
}

double scaled_discriminant(const CubicProblem& problem) {
  if (problem.c3 == 0.0) return 0.0;
  const double s = -problem.c0 / problem.c1;
  if (s == 0.0) return 0.0;
  // Divide through by c1 s so the linear coefficient is 1.
  const double a = problem.c3 * s * s / problem.c1;
  const double b = problem.c2 * s / problem.c1;
  const double c = 1.0;
  const double d = problem.c0 / (problem.c1 * s);
  return 18.0 * a * b * c * d - 4.0 * b * b * b * d + b * b * c * c - 4.0 * a * c * c * c -
         27.0 * a * a * d * d;
}

} // namespace optomech
