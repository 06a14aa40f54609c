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


#ifndef WISHART_LIMITS_HPP
#define WISHART_LIMITS_HPP

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "wishart/signed_log.hpp"

namespace wishart {

/// Real-axis data of the elliptic droplet and its symmetric limit.
struct DropletGeometry {
  double xi_minus = 0.0;
  double xi_plus = 0.0;
  double lambda_minus = 0.0;
  double lambda_plus = 0.0;
  double f_minus = 0.0;
  double f_plus = 0.0;
  double tau_crit = 0.0;
};

/// A density sampled on a sorted grid. total_mass is the quadrature mass of the exact density.
struct DensityCurve {
  std::vector<double> grid;
  std::vector<double> values;
  double total_mass = 0.0;
  std::string label;
};

DropletGeometry droplet(double tau, double rho);

/// c(tau, rho) = ∫ (x^2 + A^2)^{-1/4} dx over [xi_-, xi_+], A = (1-tau^2) rho / 2.
double c_strong(double tau, double rho);

/// The same constant from two 2F1(1/4, 1/2; 3/2; .) evaluations. Needs rho > 0.
double c_strong_hyp(double tau, double rho);

/// c(alpha) = e^{-z} (I_0(z) + I_1(z)) with z = alpha^2 / 2.
double c_weak(double alpha);

/// Power series in alpha^2. Restricted to alpha <= 3.
double c_weak_series(double alpha);

/// Mass integral of the unnormalized weak density over [lambda_-, lambda_+].
double c_weak_integral(double alpha, double rho);

/**
 * Leading-order expected number of real eigenvalues:
 * sqrt(N / (4 pi (1-tau^2))) c(tau, rho) at strong and c(alpha) N at weak
 * non-Hermiticity.
 */
double expected_number_asymptotic(int N, double nu, double tau);
double expected_number_asymptotic_weak(int N, double alpha);

double rho_strong(double tau, double rho, double x);
double rho_weak(double alpha, double rho, double x);
double rho_mp(double rho, double x);

/// Density of the limiting complex spectrum at x + iy with respect to area.
double rho_equilibrium(double tau, double rho, double x, double y);

/// Total mass of rho_equilibrium over the droplet.
double equilibrium_mass(double tau, double rho);

/**
 * Relative deviation of rho_strong(x) / sqrt(rho_equilibrium(x, 0)) from
 * its value at the midpoint of [xi_-, xi_+].
 */
double sqrt_relation_residual(double tau, double rho, double x);

/// Exterior conformal map of the droplet on the real axis off [f_-, f_+].
double conformal_psi(double tau, double rho, double z);

/// The map and its derivative at a complex point (principal square roots).
std::complex<double> conformal_psi(double tau, double rho, std::complex<double> z);
std::complex<double> conformal_psi_deriv(double tau, double rho, std::complex<double> z);

/// g-function of the exponential regime. Real z must lie off [f_-, f_+].
double g_func(double tau, double rho, double z);
std::complex<double> g_func(double tau, double rho, std::complex<double> z);

/// Ω_rho(x) on the whole real line; on the cut the boundary value from above is used.
double omega_rho(double tau, double rho, double x);

/// Equilibrium density on the real slice, 1 / (2 (1-tau^2) sqrt(p^2 + A^2)).
double local_density_delta(double tau, double rho, double p);

/**
 * |N Ω(p + n zeta / sqrt(N delta(p))) - 2 zeta^2| at an edge p, where n is
 * the outward normal (+1 at xi_+, -1 at xi_-).
 */
double edge_expansion_residual(double tau, double rho, double p, double zeta, int N);

struct FixedNu {
  double nu = 0.0;
};
struct ProportionalRho {
  double rho = 0.0;
};
using PRMode = std::variant<FixedNu, ProportionalRho>;

/**
 * Leading exponential-regime approximation of L_{N+r}^{(nu+m)}(N z / tau)
 * for real z off the cut. In FixedNu mode m must be zero.
 */
SignedLogd laguerre_pr_exponential(int N, double tau, const PRMode& mode, int r, int m, double z);

/// Chebyshev-graded points on [a, b], clustered at both ends.
std::vector<double> graded_grid(double a, double b, int n);

/// Graded grid over [xi_-, xi_+]; for rho = 0 it is split at the origin and skips |x| < 1e-6.
std::vector<double> strong_grid(double tau, double rho, int n);

/// Graded grid over [lambda_-, lambda_+]; for rho = 0 it starts at 1e-8.
std::vector<double> weak_grid(double rho, int n);

DensityCurve strong_curve(double tau, double rho, int n);
DensityCurve weak_curve(double alpha, double rho, int n);
DensityCurve mp_curve(double rho, int n);

/// Trapezoid rule over the curve samples.
double trapezoid_mass(const DensityCurve& curve);

}  // namespace wishart

#endif  // WISHART_LIMITS_HPP
