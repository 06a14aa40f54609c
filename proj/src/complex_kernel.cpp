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

#include "wishart/complex_kernel.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "wishart/errors.hpp"
#include "wishart/specfun.hpp"

namespace wishart {

namespace {

using Real = long double;
using SL = SignedLog<Real>;

// Laguerre sequences L_k^{(nu+m)}(t/tau), m = 0, 1, 2, for k < n.
struct LaguerreTable {
  std::array<std::vector<SL>, 3> L;
};

LaguerreTable laguerre_table(int n, Real nu, Real t) {
  LaguerreTable tab;
  for (int m = 0; m < 3; ++m) {
    tab.L[m] = laguerre_sequence<Real>(n, nu + m, t);
  }
  return tab;
}

// D^m L_j(t/tau) = (-1)^m tau^{-m} L_{j-m}^{(nu+m)}(t/tau)
SL laguerre_derivative(const LaguerreTable& tab, int j, int m, Real log_tau) {
  if (j - m < 0) {
    return SL::zero();
  }
  SL v = tab.L[m][j - m];
  v.logmag -= m * log_tau;
  if (m % 2 == 1) {
    v = -v;
  }
  return v;
}

struct PartialSum {
  SL value;
  Real log_max_term;
};

PartialSum partial_sum(const EnsembleParams& p, int n, const LaguerreTable& tx, const LaguerreTable& ty, int dx,
                       int dy) {
  const Real lt = std::log(static_cast<Real>(p.tau));
  const Real nu = p.nu;
  std::vector<SL> terms;
  terms.reserve(n);
  for (int j = 0; j < n; ++j) {
    const Real lc = std::lgamma(static_cast<Real>(j) + 1) + 2 * j * lt - std::lgamma(static_cast<Real>(j) + nu + 1);
    terms.push_back(SL(1, lc) * laguerre_derivative(tx, j, dx, lt) * laguerre_derivative(ty, j, dy, lt));
  }
  const auto s = log_sum(terms);
  return {s.value, s.log_max_term};
}

void require_tau(const EnsembleParams& p) {
  if (!(p.tau > 0.0) || !(p.tau < 1.0)) {
    throw DomainError("complex kernel: requires 0 < tau < 1");
  }
}

SignedLogd narrow(const SL& v) { return SignedLogd(v.sign, static_cast<double>(v.logmag)); }

Real to_real(const SL& v) { return v.sign == 0 ? Real(0) : v.sign * std::exp(v.logmag); }

// |lhs - rhs| relative to the largest single term on either side
double normalized(const std::array<Real, 3>& terms, Real rhs) {
  Real lhs = 0;
  Real den = std::abs(rhs) + std::numeric_limits<Real>::min();
  for (Real t : terms) {
    lhs += t;
    den = std::max(den, std::abs(t));
  }
  return static_cast<double>(std::abs(lhs - rhs) / den);
}

}  // namespace

ComplexKernelEval k_complex_partial(const EnsembleParams& params, int n, double x, double y, int dx, int dy) {
  require_tau(params);
  if (n < 0 || dx < 0 || dx > 2 || dy < 0 || dy > 2) {
    throw DomainError("k_complex_partial: bad arguments");
  }
  const Real tau = params.tau;
  const auto tx = laguerre_table(n, params.nu, x / tau);
  const auto ty = laguerre_table(n, params.nu, y / tau);
  const auto s = partial_sum(params, n, tx, ty, dx, dy);
  ComplexKernelEval out;
  out.value = narrow(s.value);
  out.abs_err_estimate = std::isfinite(static_cast<double>(s.log_max_term))
                             ? static_cast<double>(std::exp(s.log_max_term) * n * 4 * std::numeric_limits<Real>::epsilon())
                             : 0.0;
  return out;
}

ComplexKernelEval k_complex(const EnsembleParams& params, double x, double y) {
  return k_complex_partial(params, params.N, x, y, 0, 0);
}

ComplexKernelEval k_complex_dy(const EnsembleParams& params, double x, double y) {
  return k_complex_partial(params, params.N, x, y, 0, 1);
}

double log_omega_c(const EnsembleParams& params, double x) {
  const double N = params.N;
  const double a = 1.0 / (1.0 - params.tau * params.tau);
  if (x == 0.0) {
    if (!(params.nu > 0.0)) {
      throw DomainError("omega_c: x = 0 requires nu > 0");
    }
    return std::lgamma(params.nu) - std::log(2.0) - params.nu * std::log(N * a);
  }
  const double ax = std::abs(x);
  return params.nu * std::log(ax) + bessel_k_scaled(std::abs(params.nu), 2.0 * N * a * ax) + 2.0 * N * params.tau * x * a;
}

double r_complex_weighted(const EnsembleParams& params, double x) {
  require_tau(params);
  const int N = params.N;
  const double a = 1.0 / (1.0 - params.tau * params.tau);
  const auto k = k_complex_partial(params, N - 1, N * x, N * x, 0, 0);
  if (k.value.sign <= 0) {
    return 0.0;
  }
  const double lpref = std::log(2.0) + (params.nu + 2.0) * std::log(static_cast<double>(N)) + std::log(a);
  return std::exp(log_omega_c(params, x) + lpref + k.value.logmag);
}

double cd_offdiag_residual(const EnsembleParams& params, double z, double w) {
  require_tau(params);
  const int N = params.N;
  const Real tau = params.tau;
  const Real nu = params.nu;
  const Real s = 1 - tau * tau;
  // one extra degree so the right-hand side can use L_N
  const auto tz = laguerre_table(N + 1, nu, z / tau);
  const auto tw = laguerre_table(N + 1, nu, w / tau);
  const Real K = to_real(partial_sum(params, N, tz, tw, 0, 0).value);
  const Real Kz = to_real(partial_sum(params, N, tz, tw, 1, 0).value);
  const Real Kzz = to_real(partial_sum(params, N, tz, tw, 2, 0).value);
  const Real Z = z;
  const Real W = w;
  const std::array<Real, 3> lhs = {s * Z * Kzz, (s * (nu + 1) + 2 * tau * Z) * Kz,
                                   ((tau * tau * Z - W) / s + (nu + 1) * tau) * K};
  const Real lpref = std::lgamma(static_cast<Real>(N) + 1) - std::lgamma(static_cast<Real>(N) + nu) +
                     (2 * N - 1) * std::log(tau) - std::log(s);
  const Real br = to_real(tz.L[0][N - 1] * tw.L[0][N]) - tau * tau * to_real(tz.L[0][N] * tw.L[0][N - 1]);
  const Real rhs = std::exp(lpref) * br;
  return normalized(lhs, rhs);
}

double cd_diag_residual(const EnsembleParams& params, double x) {
  require_tau(params);
  const int N = params.N;
  if (N < 2) {
    throw DomainError("cd_diag_residual: N >= 2 required");
  }
  const Real tau = params.tau;
  const Real nu = params.nu;
  const Real s = 1 - tau * tau;
  const auto t = laguerre_table(N, nu, x / tau);
  const int n = N - 1;
  const Real k = to_real(partial_sum(params, n, t, t, 0, 0).value);
  const Real kx = to_real(partial_sum(params, n, t, t, 1, 0).value);
  const Real kxx = to_real(partial_sum(params, n, t, t, 2, 0).value);
  const Real kxy = to_real(partial_sum(params, n, t, t, 1, 1).value);
  // derivatives of the diagonal map x -> K_{N-1}(x, x)
  const Real d1 = 2 * kx;
  const Real d2 = 2 * kxx + 2 * kxy;
  const Real X = x;
  const std::array<Real, 3> lhs = {s * X * d2, (4 * tau * X + (2 * nu + 1) * s) * d1,
                                   -2 * (2 * X - (2 * nu + 1) * tau) * k};
  // L_{N-1}^{(nu-1)} = L_{N-1}^{(nu)} - L_{N-2}^{(nu)}
  const Real l_nm1 = to_real(t.L[0][N - 1]);
  const Real l_nm2 = N >= 2 ? to_real(t.L[0][N - 2]) : Real(0);
  const Real l1_nm2 = to_real(t.L[1][N - 2]);
  const Real lm1_nm1 = l_nm1 - l_nm2;
  const Real lpref = std::log(Real(2)) + std::lgamma(static_cast<Real>(N)) + (2 * N - 3) * std::log(tau) -
                     std::lgamma(static_cast<Real>(N) + nu - 1);
  const Real rhs = std::exp(lpref) * (l_nm1 * l_nm2 + l1_nm2 * lm1_nm1);
  return normalized(lhs, rhs);
}

double rc_zero_closed_form(const EnsembleParams& params) {
  if (!(params.nu > 0.0)) {
    throw DomainError("rc_zero_closed_form: nu > 0 required");
  }
  const double N = params.N;
  const double rho = params.rho();
  const double s = 1.0 - params.tau * params.tau;
  return N / (rho * s * s) * (1.0 - reg_inc_beta(params.tau * params.tau, N - 1.0, params.nu + 1.0));
}

double rc_zero_identity_residual(const EnsembleParams& params) {
  const double direct = r_complex_weighted(params, 0.0);
  const double closed = rc_zero_closed_form(params);
  return std::abs(direct - closed) / std::abs(closed);
}

}  // namespace wishart
