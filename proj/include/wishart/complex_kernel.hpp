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

#ifndef WISHART_COMPLEX_KERNEL_HPP
#define WISHART_COMPLEX_KERNEL_HPP

#include "wishart/ensemble.hpp"
#include "wishart/signed_log.hpp"

namespace wishart {

struct ComplexKernelEval {
  SignedLogd value;
  double abs_err_estimate = 0.0;
};

/**
 * Sum over j < n of j! tau^{2j} / Γ(j+nu+1) * D^dx L_j(x/tau) * D^dy L_j(y/tau),
 * where D is the derivative in the unscaled argument. k_complex and its
 * derivatives are special cases.
 */
ComplexKernelEval k_complex_partial(const EnsembleParams& params, int n, double x, double y, int dx, int dy);

/// Complex-ensemble kernel K_N(x, y) with N = params.N terms.
ComplexKernelEval k_complex(const EnsembleParams& params, double x, double y);

/// ∂_y K_N(x, y).
ComplexKernelEval k_complex_dy(const EnsembleParams& params, double x, double y);

/// Weighted rescaled one-point function of the complex ensemble on the real line.
double r_complex_weighted(const EnsembleParams& params, double x);

/// ln of the weight |x|^nu K_nu(2N|x|/(1-tau^2)) exp(2N tau x/(1-tau^2)), with its x = 0 limit.
double log_omega_c(const EnsembleParams& params, double x);

/**
 * Residual of the off-diagonal Christoffel-Darboux identity for K_N, relative
 * to the largest of the three operator terms and the right-hand side.
 */
double cd_offdiag_residual(const EnsembleParams& params, double z, double w);

/// Diagonal analogue for K_{N-1}(x, x), normalized the same way.
double cd_diag_residual(const EnsembleParams& params, double x);

/// Closed form N / (rho (1-tau^2)^2) (1 - I_{tau^2}(N-1, nu+1)) at the origin.
double rc_zero_closed_form(const EnsembleParams& params);

/// Relative difference between r_complex_weighted(0) and rc_zero_closed_form.
double rc_zero_identity_residual(const EnsembleParams& params);

}  // namespace wishart

#endif  // WISHART_COMPLEX_KERNEL_HPP
