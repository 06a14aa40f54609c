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

#ifndef WISHART_DECOMPOSITION_HPP
#define WISHART_DECOMPOSITION_HPP

#include <array>

#include "wishart/ensemble.hpp"
#include "wishart/sop_kernel.hpp"

namespace wishart {

/// The three pieces of S_N(x, y) and their sum.
struct DecompEval {
  double s1 = 0.0;
  double s1_tilde = 0.0;
  double s2 = 0.0;
  double total = 0.0;
  double abs_err_estimate = 0.0;
};

/// Bessel-weighted complex-kernel piece (unscaled coordinates).
double s1(const EnsembleParams& params, double x, double y);

/// Derivative piece y w(x) w(y) ∂_y K_{N-1}(x, y) / pi.
double s1_tilde(const EnsembleParams& params, double x, double y);

/// Rank-one piece built from L_{N-1}(x/tau) and a signed integral of w L_{N-2}.
double s2(const EnsembleParams& params, double x, double y);

DecompEval decompose(const EnsembleParams& params, double x, double y);

/// Relative residual between the decomposition and the direct kernel.
double verify_decomposition(const SOPCache& cache, double x, double y);
double verify_decomposition(const EnsembleParams& params, double x, double y);

/// (omega_1, omega_2, omega_3) at rescaled x; x = 0 is a domain error.
std::array<double, 3> omega_weights(const EnsembleParams& params, double x);

/// First piece of the rescaled one-point split, built from the complex kernel.
double r_hat_1(const EnsembleParams& params, double x);

/// Second (rank-one) piece of the rescaled one-point split.
double r_n2(const EnsembleParams& params, double x);

/// Derivative of r_complex_weighted in x, by the chain rule.
double r_complex_weighted_dx(const EnsembleParams& params, double x);

/// Closed-form tau = 0 one-point intensity R_N(x) (unscaled).
double tau0_one_point(const EnsembleParams& params, double x);

}  // namespace wishart

#endif  // WISHART_DECOMPOSITION_HPP
