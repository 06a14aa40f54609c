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

#include "wishart/decomposition.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "wishart/complex_kernel.hpp"
#include "wishart/errors.hpp"
#include "wishart/quad.hpp"
#include "wishart/specfun.hpp"

namespace wishart {

namespace {

constexpr double kPi = std::numbers::pi;

void require_nonzero(const EnsembleParams& p, double x, const char* what) {
  if (x == 0.0 && p.nu <= 0.0) {
    throw DomainError(std::string(what) + ": argument 0 is singular for nu <= 0");
  }
}

void require_positive_tau(const EnsembleParams& p, const char* what) {
  p.validate(false);
  if (!(p.tau > 0.0)) {
    throw DomainError(std::string(what) + ": tau > 0 required");
  }
}

double log_w(const EnsembleParams& p, double x) { return weight_w(p, x).logmag; }

// ∫ (1/2 - 1_{t<y}) f(t) dt over the real line, from two tails and a split at y.
template <typename F, typename Env>
double signed_half_integral(F&& f, Env&& env, double y, const std::vector<double>& singular) {
  const quad::Tolerance tol{0.0, 1e-12};
  std::vector<double> sing = singular;
  const double lo = quad::integrate_tail<double>(f, env, 0.0, quad::Direction::Minus, sing, tol).value;
  const double hi = quad::integrate_tail<double>(f, env, 0.0, quad::Direction::Plus, sing, tol).value;
  const double total = lo + hi;
  if (std::isinf(y)) {
    return y > 0 ? -0.5 * total : 0.5 * total;
  }
  if (std::abs(y) < 0.5 && y != 0.0) {
    sing.push_back(y);
  }
  if (y >= 0.0) {
    const double upper = quad::integrate_tail<double>(f, env, y, quad::Direction::Plus, sing, tol).value;
    return upper - 0.5 * total;
  }
  const double lower = quad::integrate_tail<double>(f, env, y, quad::Direction::Minus, sing, tol).value;
  return 0.5 * total - lower;
}

}  // namespace

double s1(const EnsembleParams& params, double x, double y) {
  require_positive_tau(params, "s1");
  require_nonzero(params, x, "s1");
  require_nonzero(params, y, "s1");
  const double a = 1.0 / (1.0 - params.tau * params.tau);
  const double mu = 0.5 * params.nu;
  const auto k = k_complex_partial(params, params.N - 1, x, y, 0, 0);
  if (k.value.sign == 0) {
    return 0.0;
  }
  // tau y K_{mu}(|y|a) + |y| K_{mu+1}(|y|a) = K_{mu}(|y|a) (tau y + |y| K_{mu+1}/K_{mu})
  double bracket = params.tau * y;
  if (y != 0.0) {
    const auto [lk0, lk1] = bessel_k_scaled_pair(mu, std::abs(y) * a);
    bracket += std::abs(y) * std::exp(lk1 - lk0);
  }
  if (bracket == 0.0) {
    return 0.0;
  }
  const double lmag = std::log(a / kPi) + log_w(params, x) + log_w(params, y) + std::log(std::abs(bracket)) + k.value.logmag;
  const int sign = (bracket > 0 ? 1 : -1) * k.value.sign;
  return sign * std::exp(lmag);
}

double s1_tilde(const EnsembleParams& params, double x, double y) {
  require_positive_tau(params, "s1_tilde");
  require_nonzero(params, x, "s1_tilde");
  require_nonzero(params, y, "s1_tilde");
  if (y == 0.0) {
    return 0.0;
  }
  const auto kd = k_complex_partial(params, params.N - 1, x, y, 0, 1);
  if (kd.value.sign == 0) {
    return 0.0;
  }
  const double lmag = -std::log(kPi) + std::log(std::abs(y)) + log_w(params, x) + log_w(params, y) + kd.value.logmag;
  const int sign = (y > 0 ? 1 : -1) * kd.value.sign;
  return sign * std::exp(lmag);
}

double s2(const EnsembleParams& params, double x, double y) {
  require_positive_tau(params, "s2");
  require_nonzero(params, x, "s2");
  const int N = params.N;
  const double tau = params.tau;
  const double a = 1.0 / (1.0 - tau * tau);
  const double lt = std::log(tau);
  // tau^{N-2} w(t) L_{N-2}(t/tau): a monic-scale integrand
  const EnsembleParams prm = params;
  auto f = [prm, lt, N](double t) {
    const auto L = laguerre(N - 2, prm.nu, t / prm.tau);
    if (L.sign == 0) {
      return 0.0;
    }
    return L.sign * std::exp(L.logmag + (N - 2) * lt + log_w(prm, t));
  };
  const double c = 1.0 + 4.0 * tau * (N + std::abs(params.nu) + 1.0);
  auto env = [prm, c, N](double t) { return log_w(prm, t) + (N - 2) * std::log(c + std::abs(t)); };
  const double J = signed_half_integral(f, env, y, {0.0});
  const auto Lx = laguerre(N - 1, params.nu, x / tau);
  if (Lx.sign == 0 || J == 0.0) {
    return 0.0;
  }
  const double lpref = std::log(a / kPi) + std::lgamma(static_cast<double>(N)) - std::lgamma(N + params.nu - 1.0) +
                       (N - 1) * lt + log_w(params, x) + Lx.logmag;
  return Lx.sign * J * std::exp(lpref);
}

DecompEval decompose(const EnsembleParams& params, double x, double y) {
  DecompEval d;
  d.s1 = s1(params, x, y);
  d.s1_tilde = s1_tilde(params, x, y);
  d.s2 = s2(params, x, y);
  d.total = d.s1 + d.s1_tilde + d.s2;
  d.abs_err_estimate =
      (std::abs(d.s1) + std::abs(d.s1_tilde) + std::abs(d.s2)) * 64.0 * std::numeric_limits<double>::epsilon();
  return d;
}

double verify_decomposition(const SOPCache& cache, double x, double y) {
  const DecompEval d = decompose(cache.params(), x, y);
  const KernelEval s = s_kernel(cache, x, y);
  const double maxc = std::max({std::abs(d.s1), std::abs(d.s1_tilde), std::abs(d.s2)});
  return std::abs(d.total - s.value) / (std::abs(s.value) + maxc * 1e-16 + std::numeric_limits<double>::min());
}

double verify_decomposition(const EnsembleParams& params, double x, double y) {
  return verify_decomposition(SOPCache(params), x, y);
}

std::array<double, 3> omega_weights(const EnsembleParams& params, double x) {
  if (x == 0.0) {
    throw DomainError("omega_weights: x = 0");
  }
  const double N = params.N;
  const double a = 1.0 / (1.0 - params.tau * params.tau);
  const double mu = 0.5 * params.nu;
  const auto [lkh, lkh1] = bessel_k_scaled_pair(mu, N * std::abs(x) * a);
  const double z2 = 2.0 * N * a * std::abs(x);
  const double lkn = bessel_k_scaled(std::abs(params.nu), z2);
  const double lknm1 = bessel_k_scaled(std::abs(params.nu - 1.0), z2);
  return {std::exp(2.0 * lkh - lkn), std::exp(lkh + lkh1 - lkn), std::exp(lknm1 - lkn)};
}

double r_complex_weighted_dx(const EnsembleParams& params, double x) {
  if (x == 0.0) {
    throw DomainError("r_complex_weighted_dx: x = 0");
  }
  const int N = params.N;
  const double a = 1.0 / (1.0 - params.tau * params.tau);
  const double sx = x > 0 ? 1.0 : -1.0;
  const double w3 = omega_weights(params, x)[2];
  const double lpref = std::log(2.0) + (params.nu + 2.0) * std::log(static_cast<double>(N)) + std::log(a);
  const double lom = log_omega_c(params, x);
  const auto k = k_complex_partial(params, N - 1, N * x, N * x, 0, 0);
  const auto kx = k_complex_partial(params, N - 1, N * x, N * x, 1, 0);
  // d/dx ln omega_c = 2Na tau - 2Na sgn(x) omega_3; d/dx K(Nx, Nx) = 2N ∂_1 K
  const double rc = k.value.sign == 0 ? 0.0 : k.value.sign * std::exp(lom + lpref + k.value.logmag);
  const double dk = kx.value.sign == 0 ? 0.0 : kx.value.sign * std::exp(lom + lpref + kx.value.logmag) * 2.0 * N;
  return rc * 2.0 * N * a * (params.tau - sx * w3) + dk;
}

double r_hat_1(const EnsembleParams& params, double x) {
  require_positive_tau(params, "r_hat_1");
  if (x == 0.0) {
    throw DomainError("r_hat_1: x = 0");
  }
  const double N = params.N;
  const auto w = omega_weights(params, x);
  const double rc = r_complex_weighted(params, x);
  const double drc = r_complex_weighted_dx(params, x);
  const double s = 1.0 - params.tau * params.tau;
  return std::abs(x) / (2.0 * kPi) * (w[0] * w[2] + w[1]) * rc + s / (4.0 * kPi * N) * x * w[0] * drc;
}

double r_n2(const EnsembleParams& params, double x) {
  require_positive_tau(params, "r_n2");
  if (x == 0.0) {
    throw DomainError("r_n2: x = 0");
  }
  const int N = params.N;
  const double nu = params.nu;
  const double tau = params.tau;
  const double a = 1.0 / (1.0 - tau * tau);
  const double lt = std::log(tau);
  const double mu = 0.5 * nu;
  // ln sqrt(N^{nu-1} (N-1)! / Γ(N-1+nu))
  const double lnorm = 0.5 * ((nu - 1.0) * std::log(static_cast<double>(N)) + std::lgamma(static_cast<double>(N)) -
                              std::lgamma(N - 1.0 + nu));
  // |t|^{nu/2} K_{nu/2}(N|t|a) e^{N tau t a}
  auto lweight = [=](double t) {
    const double at = std::abs(t);
    return mu * std::log(at) + bessel_k_scaled(std::abs(mu), N * at * a) + N * tau * t * a;
  };
  const auto L1 = laguerre(N - 1, nu, N * x / tau);
  if (L1.sign == 0) {
    return 0.0;
  }
  const double lr1 = lnorm + (N - 1) * lt + lweight(x) + L1.logmag;
  auto f = [=](double t) {
    const auto L = laguerre(N - 2, nu, N * t / tau);
    if (L.sign == 0) {
      return 0.0;
    }
    return L.sign * std::exp(L.logmag + (N - 2) * lt + lweight(t));
  };
  const double c = 1.0 + 4.0 * tau * (1.0 + (std::abs(nu) + 1.0) / N);
  auto env = [=](double t) { return lweight(t) + (N - 2) * std::log(c + std::abs(t)); };
  const double J = signed_half_integral(f, env, x, {0.0});
  const double r2 = 2.0 * std::exp(lnorm) * J;
  return std::pow(static_cast<double>(N), 3) / (2.0 * kPi * (1.0 - tau * tau)) * L1.sign * std::exp(lr1) * r2;
}

double tau0_one_point(const EnsembleParams& params, double x) {
  if (params.tau != 0.0) {
    throw DomainError("tau0_one_point: tau must be 0");
  }
  if (x == 0.0) {
    throw DomainError("tau0_one_point: x = 0");
  }
  const int N = params.N;
  const double nu = params.nu;
  const double mu = 0.5 * nu;
  const double ax = std::abs(x);
  const double u = x * x;
  // f(u) = sum_{j <= N-2} u^j / (j! Γ(j+nu+1)) and f'(u)
  double f = 0.0;
  double fp = 0.0;
  for (int j = 0; j <= N - 2; ++j) {
    const double lc = -std::lgamma(j + 1.0) - std::lgamma(j + nu + 1.0);
    f += std::exp(lc + j * std::log(u));
    if (j >= 1) {
      fp += j * std::exp(lc + (j - 1) * std::log(u));
    }
  }
  const auto [lk0, lk1] = bessel_k_scaled_pair(mu, ax);
  const double k0 = std::exp(lk0);
  const double k1 = std::exp(lk1);
  const double first = std::pow(ax, nu) * k0 / (2.0 * kPi) * (x * k0 * 2.0 * x * fp + 2.0 * ax * k1 * f);
  auto g = [=](double t) {
    const double at = std::abs(t);
    return std::pow(t, N - 2) * std::exp(mu * std::log(at) + bessel_k_scaled(std::abs(mu), at));
  };
  const double lo = std::min(0.0, x);
  const double hi = std::max(0.0, x);
  const double I = quad::integrate_finite<double>(g, lo, hi, {0.0}, quad::Tolerance{0.0, 1e-13}).value * (x > 0 ? 1.0 : -1.0);
  const double lpref = mu * std::log(ax) + lk0 - std::log(kPi) - std::lgamma(N - 1.0) - std::lgamma(N - 1.0 + nu);
  const double second = std::pow(x, N - 1) * std::exp(lpref) * I;
  return first + second;
}

}  // namespace wishart
