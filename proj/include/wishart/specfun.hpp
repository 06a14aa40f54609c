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

#ifndef WISHART_SPECFUN_HPP
#define WISHART_SPECFUN_HPP

#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "wishart/signed_log.hpp"

namespace wishart {

/// Value together with the error bound claimed by the routine.
struct SpecFunResult {
  SignedLogd value;
  double abs_err_estimate = 0.0;
};

/// ln Γ(x) for x > 0. Throws DomainError otherwise.
double ln_gamma(double x);

/**
 * Fills out[k] = L_k^{(nu)}(x) for k = 0..out.size()-1 with the three-term
 * forward recurrence. The running pair is rescaled whenever it leaves
 * [1e-150, 1e150], so the sequence never overflows.
 */
template <typename Scalar>
void laguerre_sequence(Scalar nu, Scalar x, std::span<SignedLog<Scalar>> out) {
  if (out.empty()) {
    return;
  }
  Scalar prev = 0;
  Scalar cur = 1;
  Scalar shift = 0;
  out[0] = SignedLog<Scalar>::one();
  const Scalar big = Scalar(1e150);
  const Scalar small = Scalar(1e-150);
  for (std::size_t k = 0; k + 1 < out.size(); ++k) {
    const Scalar kk = Scalar(k);
    const Scalar next = ((2 * kk + 1 + nu - x) * cur - (kk + nu) * prev) / (kk + 1);
    prev = cur;
    cur = next;
    auto v = SignedLog<Scalar>::from_value(cur);
    if (v.sign != 0) {
      v.logmag += shift;
    }
    out[k + 1] = v;
    const Scalar m = std::max(std::abs(cur), std::abs(prev));
    if (m > big || (m < small && m > 0)) {
      const Scalar s = std::log(m);
      cur /= m;
      prev /= m;
      shift += s;
    }
  }
}

template <typename Scalar>
std::vector<SignedLog<Scalar>> laguerre_sequence(int n, Scalar nu, Scalar x) {
  std::vector<SignedLog<Scalar>> out(n > 0 ? n : 0);
  laguerre_sequence<Scalar>(nu, x, std::span<SignedLog<Scalar>>(out));
  return out;
}

/// L_j^{(nu)}(x); L_{-1} is identically zero.
SignedLogd laguerre(int j, double nu, double x);

/// d/dx L_j^{(nu)}(x) = -L_{j-1}^{(nu+1)}(x).
SignedLogd laguerre_deriv(int j, double nu, double x);

/// ln K_order(z) for order >= 0 and z > 0.
double bessel_k_scaled(double order, double z);

/// (ln K_order(z), ln K_{order+1}(z)); negative orders use K_{-v} = K_v.
std::pair<double, double> bessel_k_scaled_pair(double order, double z);

/// ln I_order(z) for order >= 0 and z >= 0 (returns -inf when I vanishes).
double bessel_i_scaled(double order, double z);

double erf(double x);
double erfc(double x);

/// 2F1(a, b; c; z) from the Euler integral, valid for c > b > 0 and z < 1.
double hyp2f1_euler(double a, double b, double c, double z);

/// Regularized incomplete beta I_x(a, b).
double reg_inc_beta(double x, double a, double b);

}  // namespace wishart

#endif  // WISHART_SPECFUN_HPP
