#pragma once

#include "optomech/model.hpp"

#include <Eigen/Core>

namespace optomech {

/// Coefficients (a1, a2, a3, a4) of the monic characteristic polynomial
/// det(sI - A) = s^4 + a1 s^3 + a2 s^2 + a3 s + a4, via Faddeev-LeVerrier.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, 4, 1>
characteristic_coefficients(const Eigen::MatrixBase<Derived>& A) {
  using Scalar = typename Derived::Scalar;
  using Mat = Eigen::Matrix<Scalar, 4, 4>;
  static_assert(Derived::RowsAtCompileTime == 4 && Derived::ColsAtCompileTime == 4,
                "characteristic_coefficients expects a 4x4 matrix");
  const Mat a = A;
  Eigen::Matrix<Scalar, 4, 1> coeffs;
  Mat M = Mat::Identity();
  for (int k = 1; k <= 4; ++k) {
    const Mat AM = a * M;
    const Scalar c = -AM.trace() / Scalar(k);
    coeffs(k - 1) = c;
    M = AM + c * Mat::Identity();
  }
  return coeffs;
}

/// The four quantities whose positivity is necessary and sufficient for a
/// real quartic to be Hurwitz: a1, a3, a4 and a1 a2 a3 - a3^2 - a1^2 a4.
template <typename Scalar>
Eigen::Matrix<Scalar, 4, 1> hurwitz_quantities(const Eigen::Matrix<Scalar, 4, 1>& a) {
  Eigen::Matrix<Scalar, 4, 1> h;
  h << a(0), a(2), a(3), a(0) * a(1) * a(2) - a(2) * a(2) - a(0) * a(0) * a(3);
  return h;
}

inline constexpr double kHurwitzMarginalBand = 1e-10;

/// Routh-Hurwitz test on a 4x4 real matrix. Any Hurwitz quantity below
/// -band makes the verdict unstable; otherwise one inside [-band, band]
/// makes it marginal.
template <typename Derived>
Stability routh_hurwitz(const Eigen::MatrixBase<Derived>& A,
                        double band = kHurwitzMarginalBand) {
  const auto h = hurwitz_quantities(characteristic_coefficients(A).eval());
  if (!h.allFinite()) return Stability::marginal;
  if ((h.array() < -band).any()) return Stability::unstable;
  if ((h.array() <= band).any()) return Stability::marginal;
  return Stability::stable;
}

/// True only for a strictly (non-marginally) stable matrix.
template <typename Derived>
bool routh_hurwitz_stable(const Eigen::MatrixBase<Derived>& A) {
  return routh_hurwitz(A) == Stability::stable;
}

} // namespace optomech
