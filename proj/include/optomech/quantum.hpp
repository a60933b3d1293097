#pragma once

#include "optomech/model.hpp"

#include <Eigen/Core>

#include <complex>
#include <vector>

namespace optomech {

// Quadrature ordering used throughout: u = (dX, dY, dQ, dP) with
// dX = (da^dag + da)/sqrt2, dY = i(da^dag - da)/sqrt2 and likewise for the
// mechanics. Vacuum variance is 1/2 per quadrature.
using Matrix4 = Eigen::Matrix4d;
using Vector4 = Eigen::Vector4d;

/// Coefficient matrix A of du/dt = A u + n.
struct DriftMatrix {
  Matrix4 entries = Matrix4::Zero();
};

/// Diagonal noise matrix D = diag[k/2, k/2, g(n_th + 1/2), g(n_th + 1/2)].
struct DiffusionMatrix {
  Matrix4 entries = Matrix4::Zero();
};

/// Symmetrized second moments V_ij = <u_i u_j + u_j u_i>/2.
struct CovarianceMatrix {
  Matrix4 entries = Matrix4::Zero();

  static CovarianceMatrix vacuum_thermal(double n_th);
};

/// Rates entering the linearized fluctuation equations. g = g0 * alpha_s is
/// the drive-enhanced coupling and Delta the effective detuning.
struct FluctuationCoefficients {
  double kappa = 0.0;
  double gamma = 0.0;
  double omega_m = 1.0;
  double Delta = 0.0;
  std::complex<double> g;
};

DriftMatrix drift_matrix(const FluctuationCoefficients& c);

/// Drift matrix linearized about a classical fixed point.
DriftMatrix drift_matrix(const SystemParams& params, const SteadyState& steady);

DiffusionMatrix diffusion_matrix(const SystemParams& params);
DiffusionMatrix diffusion_matrix(double kappa, double gamma, double n_th);

/// Solves A V + V A^T + D = 0 through the 16x16 Kronecker-sum system.
/// Throws NumericalError if A is unstable or marginal, or if the linear
/// system is singular.
CovarianceMatrix steady_covariance(const DriftMatrix& A, const DiffusionMatrix& D);

/// max |A V + V A^T + D|.
double lyapunov_residual(const DriftMatrix& A, const CovarianceMatrix& V,
                         const DiffusionMatrix& D);

struct CovarianceSample {
  double t = 0.0;
  Matrix4 V;
};

/// Fixed-step RK4 integration of dV/dt = A V + V A^T + D, symmetrizing after
/// every step. The first sample is V0 at t = 0; further samples are taken
/// every `stride` steps, and the final time is always included.
/// Throws ParameterError on a step above 0.05 / max(kappa, gamma, omega_m,
/// |Delta|) or a non-symmetric V0.
std::vector<CovarianceSample> integrate_covariance(const DriftMatrix& A,
                                                   const DiffusionMatrix& D,
                                                   const CovarianceMatrix& V0,
                                                   double t_end, double dt,
                                                   int stride = 1);

/// Largest step allowed by the integrators for the given rates.
double max_time_step(double kappa, double gamma, double omega_m, double Delta);

/// The symplectic form for the (X, Y), (Q, P) pairs.
Matrix4 symplectic_form();

/// Smallest eigenvalue of the Hermitian matrix V + (i/2) Omega. Negative
/// values signal a covariance matrix that violates the uncertainty relation.
double min_uncertainty_eigenvalue(const Matrix4& V);

bool is_symmetric(const Matrix4& V, double tol = 1e-12);
bool is_physical(const Matrix4& V, double tol = 1e-9);

struct QuadratureVariances {
  double var_X = 0.0;
  double var_Y = 0.0;
  double var_Q = 0.0;
  double var_P = 0.0;
  /// Indices (0..3 in X, Y, Q, P order) of quadratures below the vacuum level.
  std::vector<int> squeezed;
};

QuadratureVariances quadrature_variances(const CovarianceMatrix& V);

const char* quadrature_name(int index);

enum class InteractionKind { beam_splitter, two_mode_squeezer, off_resonant };

const char* to_string(InteractionKind kind);

struct RegimeReport {
  InteractionKind interaction_kind = InteractionKind::off_resonant;
  bool resolved_sideband = false;
  double g_s = 0.0;
};

/// Which rotating-wave interaction dominates at effective detuning Delta.
/// Beam splitter near Delta = -omega_m, two-mode squeezer near +omega_m.
/// Throws ParameterError when tol_res > 0 fails or both windows contain Delta.
RegimeReport rwa_interaction(double Delta, double omega_m, double kappa, double g_s,
                             double tol_res);

/// Overload with the default resonance tolerance kappa / 2.
RegimeReport rwa_interaction(double Delta, double omega_m, double kappa, double g_s);

} // namespace optomech
