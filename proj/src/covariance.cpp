#include "optomech/quantum.hpp"

#include "optomech/errors.hpp"
#include "optomech/routh_hurwitz.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <complex>

namespace optomech {

CovarianceMatrix CovarianceMatrix::vacuum_thermal(double n_th) {
  CovarianceMatrix V;
  V.entries.diagonal() << 0.5, 0.5, n_th + 0.5, n_th + 0.5;
  return V;
}

CovarianceMatrix steady_covariance(const DriftMatrix& A, const DiffusionMatrix& D) {
  switch (routh_hurwitz(A.entries)) {
  case Stability::unstable:
    throw NumericalError("drift matrix is unstable: no steady covariance exists");
  case Stability::marginal:
    throw NumericalError("drift matrix is marginally stable: Lyapunov system is singular");
  case Stability::stable:
    break;
  }

  using Matrix16 = Eigen::Matrix<double, 16, 16>;
  using Vector16 = Eigen::Matrix<double, 16, 1>;
  const Matrix4 I = Matrix4::Identity();
  // Column-major vec: vec(A V + V A^T) = (I (x) A + A (x) I) vec(V).
  const Matrix16 K = Eigen::kroneckerProduct(I, A.entries).eval() +
                     Eigen::kroneckerProduct(A.entries, I).eval();
  const Eigen::FullPivLU<Matrix16> lu(K);
  if (!lu.isInvertible()) throw NumericalError("Lyapunov system is singular");

  const Vector16 rhs = -Eigen::Map<const Vector16>(D.entries.data());
  const Vector16 x = lu.solve(rhs);
  CovarianceMatrix V;
  V.entries = Eigen::Map<const Matrix4>(x.data());
  V.entries = (0.5 * (V.entries + V.entries.transpose())).eval();
  return V;
}

double lyapunov_residual(const DriftMatrix& A, const CovarianceMatrix& V,
                         const DiffusionMatrix& D) {
  const Matrix4 R = A.entries * V.entries + V.entries * A.entries.transpose() + D.entries;
  return R.cwiseAbs().maxCoeff();
}

double max_time_step(double kappa, double gamma, double omega_m, double Delta) {
  const double fastest = std::max({kappa, gamma, omega_m, std::abs(Delta)});
  return 0.05 / fastest;
}

std::vector<CovarianceSample> integrate_covariance(const DriftMatrix& A,
                                                   const DiffusionMatrix& D,
                                                   const CovarianceMatrix& V0,
                                                   double t_end, double dt, int stride) {
  const Matrix4& a = A.entries;
  const double bound = max_time_step(-2.0 * a(0, 0), -2.0 * a(2, 2), a(2, 3), a(1, 0));
  if (!(dt > 0.0)) throw ParameterError("dt must be > 0");
  if (dt > bound) throw ParameterError("dt exceeds the step bound 0.05/max(kappa, gamma, omega_m, |Delta|)");
  if (!(t_end >= 0.0)) throw ParameterError("t_end must be >= 0");
  if (stride < 1) throw ParameterError("stride must be >= 1");
  if (!is_symmetric(V0.entries)) throw ParameterError("initial covariance is not symmetric");

  const Matrix4 at = a.transpose();
  const Matrix4& d = D.entries;
  const auto rhs = [&](const Matrix4& V) -> Matrix4 { return a * V + V * at + d; };

  const auto steps = static_cast<long long>(std::ceil(t_end / dt - 1e-9));
  std::vector<CovarianceSample> out;
  out.reserve(static_cast<std::size_t>(steps / stride + 2));
  Matrix4 V = V0.entries;
  out.push_back({0.0, V});
  for (long long n = 1; n <= steps; ++n) {
    const double h = std::min(dt, t_end - static_cast<double>(n - 1) * dt);
    const Matrix4 k1 = rhs(V);
    const Matrix4 k2 = rhs(V + 0.5 * h * k1);
    const Matrix4 k3 = rhs(V + 0.5 * h * k2);
    const Matrix4 k4 = rhs(V + h * k3);
    V += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    V = (0.5 * (V + V.transpose())).eval();
    if (!V.allFinite()) throw NumericalError("covariance integration diverged");
    if (n % stride == 0 || n == steps) {
      out.push_back({n == steps ? t_end : static_cast<double>(n) * dt, V});
    }
  }
  return out;
}

Matrix4 symplectic_form() {
  Matrix4 omega = Matrix4::Zero();
  omega(0, 1) = 1.0;
  omega(1, 0) = -1.0;
  omega(2, 3) = 1.0;
  omega(3, 2) = -1.0;
  return omega;
}

double min_uncertainty_eigenvalue(const Matrix4& V) {
  using Complex4 = Eigen::Matrix4cd;
  const std::complex<double> half_i(0.0, 0.5);
  const Complex4 H = V.cast<std::complex<double>>() + half_i * symplectic_form().cast<std::complex<double>>();
  const Eigen::SelfAdjointEigenSolver<Complex4> solver(H, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool is_symmetric(const Matrix4& V, double tol) {
  const double scale = std::max(1.0, V.cwiseAbs().maxCoeff());
  return (V - V.transpose()).cwiseAbs().maxCoeff() <= tol * scale;
}

bool is_physical(const Matrix4& V, double tol) {
  return is_symmetric(V) && min_uncertainty_eigenvalue(V) >= -tol;
}

QuadratureVariances quadrature_variances(const CovarianceMatrix& V) {
  const auto diag = V.entries.diagonal();
  QuadratureVariances out{diag(0), diag(1), diag(2), diag(3), {}};
  for (int i = 0; i < 4; ++i) {
    if (diag(i) < 0.5 - 1e-9) out.squeezed.push_back(i);
  }
  return out;
}

const char* quadrature_name(int index) {
  static constexpr const char* names[] = {"X", "Y", "Q", "P"};
  return (index >= 0 && index < 4) ? names[index] : "?";
}

} // namespace optomech
