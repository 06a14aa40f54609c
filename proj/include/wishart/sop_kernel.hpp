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

#ifndef WISHART_SOP_KERNEL_HPP
#define WISHART_SOP_KERNEL_HPP

#include <vector>

#include <Eigen/Core>

#include "wishart/ensemble.hpp"
#include "wishart/signed_log.hpp"

namespace wishart {

struct KernelEval {
  double value = 0.0;
  double abs_err_estimate = 0.0;
};

/// One 2x2 block of the rescaled Pfaffian correlation kernel at (x, y).
struct MatrixKernel2x2 {
  double d = 0.0;
  double s_xy = 0.0;
  double s_yx = 0.0;
  double itilde = 0.0;
};

/// Phi_0..Phi_{N-1} at one point with componentwise quadrature errors.
struct PhiValues {
  Eigen::ArrayXd value;
  Eigen::ArrayXd err;
};

/**
 * Immutable per-parameter data: normalizations r_j and total masses
 * M_j = ∫ w p_j over the real line.
 */
class SOPCache {
 public:
  explicit SOPCache(const EnsembleParams& params);

  const EnsembleParams& params() const { return params_; }
  const std::vector<SignedLogd>& r() const { return r_; }
  const Eigen::ArrayXd& r_values() const { return r_values_; }
  const Eigen::ArrayXd& phi_total() const { return phi_total_; }
  const Eigen::ArrayXd& phi_total_err() const { return phi_total_err_; }

 private:
  EnsembleParams params_;
  std::vector<SignedLogd> r_;
  Eigen::ArrayXd r_values_;
  Eigen::ArrayXd phi_total_;
  Eigen::ArrayXd phi_total_err_;
};

/// w(x) = |x|^{nu/2} K_{nu/2}(|x|/(1-tau^2)) exp(tau x/(1-tau^2)).
SignedLogd weight_w(const EnsembleParams& params, double x);

/// Skew-orthogonal polynomial p_j(x); tau = 0 uses the limiting monomials.
SignedLogd sop_p(const EnsembleParams& params, int j, double x);

/// p_0(x), ..., p_{N-1}(x).
Eigen::ArrayXd sop_p_all(const EnsembleParams& params, double x);

/// Phi_j(y) = ∫ sgn(y - v) w(v) p_j(v) dv.
KernelEval phi(const SOPCache& cache, int j, double y);
PhiValues phi_all(const SOPCache& cache, double y);

/// S_N(x, y) in unscaled coordinates.
KernelEval s_kernel(const SOPCache& cache, double x, double y);

/// N S_N(Nx, Ny).
KernelEval s_kernel_rescaled(const SOPCache& cache, double x, double y);

/// -∂_y of the rescaled kernel.
KernelEval d_kernel(const SOPCache& cache, double x, double y);

/// ∫_x^y (rescaled S)(t, y) dt + sgn(x - y)/2.
KernelEval itilde_kernel(const SOPCache& cache, double x, double y);

/// All four rescaled entries at (x, y).
MatrixKernel2x2 matrix_kernel(const SOPCache& cache, double x, double y);

/// Rescaled one-point intensity N R_N(Nx).
KernelEval r_one_point(const SOPCache& cache, double x);

/// Unscaled one-point intensity R_N(x) = S_N(x, x).
KernelEval r_one_point_unscaled(const SOPCache& cache, double x);

/// Rescaled k-point correlation: the Pfaffian of the 2k x 2k kernel matrix.
double correlation_k(const SOPCache& cache, const std::vector<double>& points);

/// The assembled 2k x 2k antisymmetric matrix used by correlation_k.
Eigen::MatrixXd correlation_matrix(const SOPCache& cache, const std::vector<double>& points);

/// Expected number of real eigenvalues, ∫ R_N.
KernelEval expected_number(const SOPCache& cache);

/**
 * The sgn-weighted double integral ∫∫ sgn(v - u) w(u) w(v) f(u) g(v) du dv
 * for f = p_i, g = p_k, computed as ∫ w p_k Phi_i.
 */
Eigen::MatrixXd real_skew_gram(const SOPCache& cache, int count);

}  // namespace wishart

#endif  // WISHART_SOP_KERNEL_HPP
