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


#include "wishart/limits.hpp"

#include <cmath>
#include <numbers>

#include "wishart/errors.hpp"
#include "wishart/quad.hpp"
#include "wishart/specfun.hpp"

namespace wishart {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;

void check_tau_rho(double tau, double rho, bool allow_tau_one) {
  if (!(tau >= 0.0) || tau > 1.0 || (!allow_tau_one && tau == 1.0)) {
    throw DomainError("limits: tau out of range");
  }
  if (!(rho >= 0.0) || !std::isfinite(rho)) {
    throw DomainError("limits: rho must be finite and >= 0");
  }
}

double half_width(double tau, double rho) { return (1.0 - tau * tau) * rho / 2.0; }

// w = z - tau (2 + rho) and s = sqrt(w - c) sqrt(w + c), c = 2 tau sqrt(1 + rho)
struct Branch {
  cplx w;
  cplx s;
};

Branch branch(double tau, double rho, cplx z) {
  const double c = 2.0 * tau * std::sqrt(1.0 + rho);
  const cplx w = z - tau * (2.0 + rho);
  return {w, std::sqrt(w - c) * std::sqrt(w + c)};
}

void check_off_cut(double tau, double rho, double z) {
  const auto g = droplet(tau, rho);
  if (z >= g.f_minus && z <= g.f_plus) {
    throw DomainError("limits: real argument lies on the cut [f_-, f_+]");
  }
}

struct CKey {
  double a = std::numeric_limits<double>::quiet_NaN();
  double b = std::numeric_limits<double>::quiet_NaN();
  double value = 0.0;
};

double c_strong_cached(double tau, double rho) {
  thread_local CKey key;
  if (key.a != tau || key.b != rho) {
    key = {tau, rho, c_strong(tau, rho)};
  }
  return key.value;
}

double c_weak_cached(double alpha) {
  thread_local CKey key;
  if (key.a != alpha) {
    key = {alpha, 0.0, c_weak(alpha)};
  }
  return key.value;
}

}  // namespace

DropletGeometry droplet(double tau, double rho) {
  check_tau_rho(tau, rho, true);
  const double sq = std::sqrt(1.0 + rho);
  DropletGeometry g;
  g.xi_minus = tau * (2.0 + rho) - (1.0 + tau * tau) * sq;
  g.xi_plus = tau * (2.0 + rho) + (1.0 + tau * tau) * sq;
  g.lambda_minus = (sq - 1.0) * (sq - 1.0);
  g.lambda_plus = (sq + 1.0) * (sq + 1.0);
  g.f_minus = tau * g.lambda_minus;
  g.f_plus = tau * g.lambda_plus;
  g.tau_crit = 1.0 / sq;
  return g;
}

double c_strong(double tau, double rho) {
  check_tau_rho(tau, rho, false);
  const auto g = droplet(tau, rho);
  const double A = half_width(tau, rho);
  auto f = [A](double x) { return std::pow(x * x + A * A, -0.25); };
  std::vector<double> sing;
  if (rho == 0.0) {
    sing.push_back(0.0);
  }
  return quad::integrate_finite<double>(f, g.xi_minus, g.xi_plus, sing, quad::Tolerance{0.0, 1e-13}).value;
}

double c_strong_hyp(double tau, double rho) {
  check_tau_rho(tau, rho, false);
  if (!(rho > 0.0)) {
    throw DomainError("c_strong_hyp: requires rho > 0");
  }
  const auto g = droplet(tau, rho);
  const double scale = rho * rho * (1.0 - tau * tau) * (1.0 - tau * tau);
  auto term = [&](double xi) { return hyp2f1_euler(0.25, 0.5, 1.5, -4.0 * xi * xi / scale) * xi; };
  return std::sqrt(2.0 / rho) / std::sqrt(1.0 - tau * tau) * (term(g.xi_plus) - term(g.xi_minus));
}

double c_weak(double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw DomainError("c_weak: alpha must be finite and >= 0");
  }
  const double z = alpha * alpha / 2.0;
  return std::exp(bessel_i_scaled(0.0, z) - z) + std::exp(bessel_i_scaled(1.0, z) - z);
}

double c_weak_series(double alpha) {
  if (!(alpha >= 0.0) || alpha > 3.0) {
    throw DomainError("c_weak_series: requires 0 <= alpha <= 3");
  }
  const double a2 = alpha * alpha;
  CompensatedSum<double> sum;
  double term = 1.0;
  for (int k = 0; k < 200; ++k) {
    sum.add(term);
    term *= -a2 * (2.0 * k + 1.0) / (2.0 * (k + 1.0) * (k + 2.0));
    if (std::abs(term) < 1e-16 * std::abs(sum.value())) {
      return sum.value();
    }
  }
  throw NonConvergence("c_weak_series: 200 terms were not enough");
}

double c_weak_integral(double alpha, double rho) {
  if (!(alpha > 0.0)) {
    throw DomainError("c_weak_integral: requires alpha > 0");
  }
  check_tau_rho(0.0, rho, false);
  const auto g = droplet(1.0, rho);
  const double lm = g.lambda_minus;
  const double lp = g.lambda_plus;
  auto f = [=](double x) {
    const double u = std::max(0.0, (lp - x) * (x - lm) / x);
    return std::erf(0.5 * alpha * std::sqrt(u)) / std::sqrt(x);
  };
  const auto r = quad::integrate_finite<double>(f, lm, lp, {lm, lp}, quad::Tolerance{0.0, 1e-13});
  return r.value / (2.0 * alpha * std::sqrt(kPi));
}

double expected_number_asymptotic(int N, double nu, double tau) {
  if (N <= 0) {
    throw DomainError("expected_number_asymptotic: N must be positive");
  }
  return std::sqrt(N / (4.0 * kPi * (1.0 - tau * tau))) * c_strong(tau, nu / N);
}

double expected_number_asymptotic_weak(int N, double alpha) {
  if (N <= 0) {
    throw DomainError("expected_number_asymptotic_weak: N must be positive");
  }
  return c_weak(alpha) * N;
}

double rho_strong(double tau, double rho, double x) {
  const auto g = droplet(tau, rho);
  if (x < g.xi_minus || x > g.xi_plus) {
    return 0.0;
  }
  const double A = half_width(tau, rho);
  return std::pow(x * x + A * A, -0.25) / c_strong_cached(tau, rho);
}

double rho_weak(double alpha, double rho, double x) {
  if (!(alpha > 0.0)) {
    throw DomainError("rho_weak: requires alpha > 0");
  }
  const auto g = droplet(1.0, rho);
  if (x <= g.lambda_minus || x >= g.lambda_plus) {
    return 0.0;
  }
  const double u = (g.lambda_plus - x) * (x - g.lambda_minus) / x;
  return std::erf(0.5 * alpha * std::sqrt(u)) / std::sqrt(x) / (2.0 * alpha * std::sqrt(kPi) * c_weak_cached(alpha));
}

double rho_mp(double rho, double x) {
  const auto g = droplet(1.0, rho);
  if (x <= g.lambda_minus || x >= g.lambda_plus) {
    return 0.0;
  }
  return std::sqrt((g.lambda_plus - x) * (x - g.lambda_minus)) / (2.0 * kPi * x);
}

double rho_equilibrium(double tau, double rho, double x, double y) {
  check_tau_rho(tau, rho, false);
  const double sq = std::sqrt(1.0 + rho);
  const double u = (x - tau * (2.0 + rho)) / ((1.0 + tau * tau) * sq);
  const double v = y / ((1.0 - tau * tau) * sq);
  if (u * u + v * v > 1.0) {
    return 0.0;
  }
  const double A = half_width(tau, rho);
  return 1.0 / ((1.0 - tau * tau) * kPi * 2.0 * std::sqrt(x * x + y * y + A * A));
}

double equilibrium_mass(double tau, double rho) {
  check_tau_rho(tau, rho, false);
  const auto g = droplet(tau, rho);
  const double sq = std::sqrt(1.0 + rho);
  const double A = half_width(tau, rho);
  // the y-integral of the density over a vertical chord is an asinh
  auto f = [=](double x) {
    const double u = (x - tau * (2.0 + rho)) / ((1.0 + tau * tau) * sq);
    const double h = (1.0 - tau * tau) * sq * std::sqrt(std::max(0.0, 1.0 - u * u));
    return std::asinh(h / std::sqrt(x * x + A * A));
  };
  std::vector<double> sing{g.xi_minus, g.xi_plus};
  if (rho == 0.0) {
    sing.push_back(0.0);
  }
  const auto r = quad::integrate_finite<double>(f, g.xi_minus, g.xi_plus, sing, quad::Tolerance{0.0, 1e-12});
  return r.value / ((1.0 - tau * tau) * kPi);
}

double sqrt_relation_residual(double tau, double rho, double x) {
  const auto g = droplet(tau, rho);
  if (!(x > g.xi_minus && x < g.xi_plus)) {
    throw DomainError("sqrt_relation_residual: x must lie inside (xi_-, xi_+)");
  }
  auto ratio = [&](double t) { return rho_strong(tau, rho, t) / std::sqrt(rho_equilibrium(tau, rho, t, 0.0)); };
  double mid = 0.5 * (g.xi_minus + g.xi_plus);
  if (rho == 0.0 && mid == 0.0) {
    mid = 0.5 * g.xi_plus;
  }
  const double r0 = ratio(mid);
  return std::abs(ratio(x) - r0) / r0;
}

cplx conformal_psi(double tau, double rho, cplx z) {
  check_tau_rho(tau, rho, false);
  const auto b = branch(tau, rho, z);
  return (b.w + b.s) / (2.0 * std::sqrt(1.0 + rho));
}

cplx conformal_psi_deriv(double tau, double rho, cplx z) {
  check_tau_rho(tau, rho, false);
  const auto b = branch(tau, rho, z);
  if (b.s == 0.0) {
    throw DomainError("conformal_psi_deriv: branch point");
  }
  return (1.0 + b.w / b.s) / (2.0 * std::sqrt(1.0 + rho));
}

double conformal_psi(double tau, double rho, double z) {
  check_off_cut(tau, rho, z);
  return conformal_psi(tau, rho, cplx(z, 0.0)).real();
}

cplx g_func(double tau, double rho, cplx z) {
  check_tau_rho(tau, rho, false);
  const auto b = branch(tau, rho, z);
  const cplx ws = b.w + b.s;
  cplx g = 1.0 + 2.0 * tau * (1.0 + rho) / ws + (1.0 + rho) * std::log(ws) - std::log(2.0);
  if (rho != 0.0) {
    g -= rho * std::log(ws + 2.0 * tau);
  }
  return g;
}

double g_func(double tau, double rho, double z) {
  check_off_cut(tau, rho, z);
  return g_func(tau, rho, cplx(z, 0.0)).real();
}

double omega_rho(double tau, double rho, double x) {
  check_tau_rho(tau, rho, false);
  const double A = half_width(tau, rho);
  const double r = std::sqrt(x * x + A * A);
  double om = 2.0 / (1.0 - tau * tau) * (r - tau * x);
  if (rho != 0.0) {
    om += -rho * std::log(r + A) - rho + (1.0 + rho) * std::log1p(rho);
  }
  return om - 2.0 * g_func(tau, rho, cplx(x, 0.0)).real();
}

double local_density_delta(double tau, double rho, double p) {
  check_tau_rho(tau, rho, false);
  const double A = half_width(tau, rho);
  return 1.0 / (2.0 * (1.0 - tau * tau) * std::sqrt(p * p + A * A));
}

double edge_expansion_residual(double tau, double rho, double p, double zeta, int N) {
  const auto g = droplet(tau, rho);
  int n = 0;
  if (p == g.xi_plus) {
    n = 1;
  } else if (p == g.xi_minus) {
    n = -1;
  } else {
    throw DomainError("edge_expansion_residual: p must be xi_- or xi_+");
  }
  if (N <= 0) {
    throw DomainError("edge_expansion_residual: N must be positive");
  }
  const double delta = local_density_delta(tau, rho, p);
  const double x = p + n * zeta / std::sqrt(N * delta);
  return std::abs(N * omega_rho(tau, rho, x) - 2.0 * zeta * zeta);
}

SignedLogd laguerre_pr_exponential(int N, double tau, const PRMode& mode, int r, int m, double z) {
  if (N <= 0 || !(tau > 0.0) || !(tau < 1.0)) {
    throw DomainError("laguerre_pr_exponential: need N > 0 and 0 < tau < 1");
  }
  const bool fixed = std::holds_alternative<FixedNu>(mode);
  const double rho = fixed ? 0.0 : std::get<ProportionalRho>(mode).rho;
  if (fixed && m != 0) {
    throw DomainError("laguerre_pr_exponential: fixed-nu mode has no m shift");
  }
  check_off_cut(tau, rho, z);
  const cplx zc(z, 0.0);
  const auto b = branch(tau, rho, zc);
  const cplx psi = (b.w + b.s) / (2.0 * std::sqrt(1.0 + rho));
  const cplx dpsi = (1.0 + b.w / b.s) / (2.0 * std::sqrt(1.0 + rho));
  const double Nd = N;
  cplx lg = -0.5 * std::log(2.0 * kPi * Nd) - (Nd + r) * std::log(tau) + cplx(0.0, kPi * ((N + r) % 2));
  lg += 0.5 * std::log(dpsi) + Nd * g_func(tau, rho, zc);
  if (fixed) {
    const double nu = std::get<FixedNu>(mode).nu;
    lg += (r + nu / 2.0) * std::log(psi) - (nu / 2.0) * std::log(zc);
  } else {
    const cplx varpi = (b.w + b.s) / (b.w + b.s + 2.0 * tau);
    lg += (2.0 * r + 1.0) / 4.0 * std::log1p(rho) + double(r) * std::log(psi) + double(m) * std::log(varpi);
  }
  const double c = std::cos(lg.imag());
  if (c == 0.0) {
    return SignedLogd::zero();
  }
  return SignedLogd(c > 0.0 ? 1 : -1, lg.real() + std::log(std::abs(c)));
}

std::vector<double> graded_grid(double a, double b, int n) {
  if (n < 2 || !(a < b)) {
    throw DomainError("graded_grid: need n >= 2 and a < b");
  }
  std::vector<double> out(n);
  for (int k = 0; k < n; ++k) {
    out[k] = a + (b - a) * 0.5 * (1.0 - std::cos(kPi * k / (n - 1)));
  }
  out.front() = a;
  out.back() = b;
  return out;
}

std::vector<double> strong_grid(double tau, double rho, int n) {
  const auto g = droplet(tau, rho);
  if (rho > 0.0 || g.xi_minus >= 0.0) {
    return graded_grid(g.xi_minus, g.xi_plus, n);
  }
  constexpr double gap = 1e-6;
  const int nl = std::max(2, n / 2);
  auto left = graded_grid(g.xi_minus, -gap, nl);
  const auto right = graded_grid(gap, g.xi_plus, std::max(2, n - nl));
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

std::vector<double> weak_grid(double rho, int n) {
  const auto g = droplet(1.0, rho);
  const double lo = rho == 0.0 ? 1e-8 : g.lambda_minus;
  return graded_grid(lo, g.lambda_plus, n);
}

DensityCurve strong_curve(double tau, double rho, int n) {
  DensityCurve c;
  c.grid = strong_grid(tau, rho, n);
  c.values.reserve(c.grid.size());
  for (double x : c.grid) {
    c.values.push_back(rho_strong(tau, rho, x));
  }
  const auto g = droplet(tau, rho);
  auto f = [tau, rho](double x) { return rho_strong(tau, rho, x); };
  std::vector<double> sing;
  if (rho == 0.0) {
    sing.push_back(0.0);
  }
  c.total_mass =
      quad::integrate_finite<double>(f, g.xi_minus, g.xi_plus, sing, quad::Tolerance{0.0, 1e-12}).value;
  c.label = "strong";
  return c;
}

DensityCurve weak_curve(double alpha, double rho, int n) {
  DensityCurve c;
  c.grid = weak_grid(rho, n);
  c.values.reserve(c.grid.size());
  for (double x : c.grid) {
    c.values.push_back(rho_weak(alpha, rho, x));
  }
  c.total_mass = c_weak_integral(alpha, rho) / c_weak(alpha);
  c.label = "weak";
  return c;
}

DensityCurve mp_curve(double rho, int n) {
  DensityCurve c;
  c.grid = weak_grid(rho, n);
  c.values.reserve(c.grid.size());
  for (double x : c.grid) {
    c.values.push_back(rho_mp(rho, x));
  }
  const auto g = droplet(1.0, rho);
  auto f = [rho](double x) { return rho_mp(rho, x); };
  c.total_mass =
      quad::integrate_finite<double>(f, g.lambda_minus, g.lambda_plus, {g.lambda_minus, g.lambda_plus},
                                     quad::Tolerance{0.0, 1e-12})
          .value;
  c.label = "marchenko-pastur";
  return c;
}

double trapezoid_mass(const DensityCurve& curve) {
  CompensatedSum<double> sum;
  for (std::size_t k = 1; k < curve.grid.size(); ++k) {
    sum.add(0.5 * (curve.values[k] + curve.values[k - 1]) * (curve.grid[k] - curve.grid[k - 1]));
  }
  return sum.value();
}

}  // namespace wishart
