// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <algorithm>

#include "docdeg/errors.hpp"

namespace docdeg {

template <typename Scalar>
struct OlsFit {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> coefficients;
  Scalar r_squared;
};

/// Least squares for `design * b ~ response` via column-pivoted QR, which
/// solves the same normal equations without squaring the condition number.
/// Throws InsufficientData when rows < cols and DegenerateDesign when the
/// design is rank deficient. R^2 is reported as 1 for a constant response.
template <typename DerivedX, typename DerivedY>
OlsFit<typename DerivedX::Scalar> ols(const Eigen::MatrixBase<DerivedX>& design,
                                      const Eigen::MatrixBase<DerivedY>& response) {
  using Scalar = typename DerivedX::Scalar;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  if (design.rows() < design.cols()) throw InsufficientData();

  const Eigen::ColPivHouseholderQR<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>>
      qr(design);
  if (qr.rank() < design.cols()) throw DegenerateDesign();

  OlsFit<Scalar> fit;
  fit.coefficients = qr.solve(response);
  const Vector residual = response - design * fit.coefficients;
  const Scalar ss_res = residual.squaredNorm();
  const Scalar ss_tot = (response.array() - response.mean()).matrix().squaredNorm();
  fit.r_squared = ss_tot > Scalar(0)
                      ? std::clamp(Scalar(1) - ss_res / ss_tot, Scalar(0), Scalar(1))
                      : Scalar(1);
  return fit;
}

}  // namespace docdeg
