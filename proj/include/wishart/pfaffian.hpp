/*
 * Copyright 2026 The wishart-reals Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef WISHART_PFAFFIAN_HPP
#define WISHART_PFAFFIAN_HPP

#include <cmath>

#include <Eigen/Core>

#include "wishart/errors.hpp"

namespace wishart {

/// Largest |A + A^T| entry relative to the largest |A| entry.
template <typename Derived>
typename Derived::RealScalar antisymmetry_defect(const Eigen::MatrixBase<Derived>& A) {
  using Real = typename Derived::RealScalar;
  const Real amax = A.cwiseAbs().maxCoeff();
  if (amax == Real(0)) {
    return Real(0);
  }
  return (A + A.transpose()).cwiseAbs().maxCoeff() / amax;
}

/**
 * Pfaffian of an antisymmetric matrix by Parlett-Reid skew
 * tridiagonalization with partial pivoting. Odd dimension gives 0.
 */
template <typename Derived>
typename Derived::Scalar pfaffian(const Eigen::MatrixBase<Derived>& A_in) {
  using Scalar = typename Derived::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (A_in.rows() != A_in.cols()) {
    throw NotAntisymmetric("pfaffian: matrix must be square");
  }
  if (antisymmetry_defect(A_in) > 1e-12) {
    throw NotAntisymmetric("pfaffian: matrix is not antisymmetric");
  }
  const Eigen::Index n = A_in.rows();
  if (n == 0) {
    return Scalar(1);
  }
  if (n % 2 == 1) {
    return Scalar(0);
  }
  Mat A = A_in;
  Scalar pf(1);
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    Eigen::Index kp;
    A.col(k).tail(n - k - 1).cwiseAbs().maxCoeff(&kp);
    kp += k + 1;
    if (kp != k + 1) {
      A.row(k + 1).swap(A.row(kp));
      A.col(k + 1).swap(A.col(kp));
      pf = -pf;
    }
    if (A(k + 1, k) == Scalar(0)) {
      return Scalar(0);
    }
    pf *= A(k, k + 1);
    if (k + 2 < n) {
      const Eigen::Index m = n - k - 2;
      const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> g = A.row(k).tail(m).transpose() / A(k, k + 1);
      const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> c = A.col(k + 1).tail(m);
      A.bottomRightCorner(m, m) += g * c.transpose() - c * g.transpose();
    }
  }
  return pf;
}

}  // namespace wishart

#endif  // WISHART_PFAFFIAN_HPP
