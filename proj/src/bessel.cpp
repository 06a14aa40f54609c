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

#include <cmath>
#include <limits>
#include <numbers>

#include "wishart/errors.hpp"
#include "wishart/specfun.hpp"

namespace wishart {

namespace {

constexpr double kEps = 1e-16;

// Taylor coefficients of 1/Γ(1+x) about x = 0.
constexpr double kRecipGamma[] = {
    1.0,
    0.577215664901532860607,
    -0.655878071520253881077,
    -0.042002635034095235529,
    0.166538611382291489502,
    -0.0421977345555443367482,
    -0.00962197152787697356211,
    0.0072189432466630995424,
    -0.00116516759185906511211,
    -0.000215241674114950972816,
    0.000128050282388116186153,
    -0.0000201348547807882386557,
    -0.00000125049348214267065735,
    0.00000113302723198169588237,
    -2.05633841697760710345e-7,
    6.11609510448141581786e-9,
    5.00200764446922293006e-9,
    -1.18127457048702014459e-9,
    1.04342671169110051049e-10,
    7.78226343990507125405e-12,
    -3.69680561864220570819e-12,
    5.10037028745447597902e-13,
    -2.05832605356650678322e-14,
    -5.34812253942301798237e-15,
    1.22677862823826079016e-15,
    -1.18125930169745876951e-16,
    1.18669225475160033258e-18,
    1.41238065531803178156e-18,
    -2.29874568443537020659e-19,
    1.71440632192733743338e-20,
};
constexpr int kRecipGammaTerms = sizeof(kRecipGamma) / sizeof(kRecipGamma[0]);

// gam1 = (1/Γ(1-mu) - 1/Γ(1+mu)) / (2 mu), gam2 = (1/Γ(1-mu) + 1/Γ(1+mu)) / 2
void temme_gammas(double mu, double& gam1, double& gam2, double& gampl, double& gammi) {
  double even = 0.0;
  double odd = 0.0;
  double mu2k = 1.0;
  for (int k = 0; k < kRecipGammaTerms; k += 2) {
    even += kRecipGamma[k] * mu2k;
    if (k + 1 < kRecipGammaTerms) {
      odd += kRecipGamma[k + 1] * mu2k;
    }
    mu2k *= mu * mu;
  }
  gam1 = -odd;
  gam2 = even;
  gampl = gam2 - mu * gam1;
  gammi = gam2 + mu * gam1;
}

// K_mu(x), K_{mu+1}(x) for |mu| <= 1/2 and x < 2 (Temme series).
void temme_series(double mu, double x, double& kmu, double& kmu1) {
  const double x2 = 0.5 * x;
  const double pimu = std::numbers::pi * mu;
  const double fact = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
  double d = -std::log(x2);
  double e = mu * d;
  const double fact2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
  double gam1, gam2, gampl, gammi;
  temme_gammas(mu, gam1, gam2, gampl, gammi);
  double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
  double sum = ff;
  e = std::exp(e);
  double p = 0.5 * e / gampl;
  double q = 0.5 / (e * gammi);
  double c = 1.0;
  d = x2 * x2;
  double sum1 = p;
  for (int i = 1; i < 10000; ++i) {
    ff = (i * ff + p + q) / (i * static_cast<double>(i) - mu * mu);
    c *= d / i;
    p /= i - mu;
    q /= i + mu;
    const double del = c * ff;
    sum += del;
    const double del1 = c * (p - i * ff);
    sum1 += del1;
    if (std::abs(del) < std::abs(sum) * kEps) {
      kmu = sum;
      kmu1 = sum1 * (2.0 / x);
      return;
    }
  }
  throw NonConvergence("bessel_k: Temme series did not converge");
}

// ln K_mu(x) and K_{mu+1}/K_mu for |mu| <= 1/2 and x >= 2 (Steed's CF2).
void steed_cf2(double mu, double x, double& log_kmu, double& ratio) {
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25 - mu * mu;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  int i = 2;
  for (; i < 100000; ++i) {
    a -= 2 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kEps) {
      break;
    }
  }
  if (i >= 100000) {
    throw NonConvergence("bessel_k: continued fraction did not converge");
  }
  h = a1 * h;
  log_kmu = 0.5 * std::log(std::numbers::pi / (2.0 * x)) - x - std::log(s);
  ratio = (mu + x + 0.5 - h) / x;
}

}  // namespace

std::pair<double, double> bessel_k_scaled_pair(double order, double z) {
  if (!(z > 0.0)) {
    throw DomainError("bessel_k: z must be positive");
  }
  if (order < 0.0) {
    // K_{-v} = K_v
    return {bessel_k_scaled_pair(-order, z).first, bessel_k_scaled_pair(order + 1.0, z).first};
  }
  const int nl = static_cast<int>(order + 0.5);
  const double mu = order - nl;
  double log_k;
  double ratio;  // K_{mu+1} / K_mu
  if (z < 2.0) {
    double kmu, kmu1;
    temme_series(mu, z, kmu, kmu1);
    log_k = std::log(kmu);
    ratio = kmu1 / kmu;
  } else {
    steed_cf2(mu, z, log_k, ratio);
  }
  // Upward recurrence on ratios r_k = K_{mu+k+1}/K_{mu+k}; all terms positive.
  for (int k = 1; k <= nl; ++k) {
    log_k += std::log(ratio);
    ratio = 1.0 / ratio + 2.0 * (mu + k) / z;
  }
  return {log_k, log_k + std::log(ratio)};
}

double bessel_k_scaled(double order, double z) { return bessel_k_scaled_pair(order, z).first; }

double bessel_i_scaled(double order, double z) {
  if (!(order >= 0.0)) {
    throw DomainError("bessel_i: order must be nonnegative");
  }
  if (!(z >= 0.0)) {
    throw DomainError("bessel_i: z must be nonnegative");
  }
  if (z == 0.0) {
    return order == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
  }
  if (z > 2.0 * order * order + 25.0) {
    // e^z / sqrt(2 pi z) * sum_k (-1)^k a_k(order) / z^k
    const double m = 4.0 * order * order;
    double term = 1.0;
    double sum = 1.0;
    double prev_abs = 1.0;
    for (int k = 1; k < 500; ++k) {
      const double odd = 2.0 * k - 1.0;
      term *= -(m - odd * odd) / (8.0 * k * z);
      const double at = std::abs(term);
      if (at > prev_abs) {
        break;
      }
      sum += term;
      prev_abs = at;
      if (at < kEps * std::abs(sum)) {
        break;
      }
    }
    return z - 0.5 * std::log(2.0 * std::numbers::pi * z) + std::log(sum);
  }
  // Power series sum_k (z/2)^{2k+order} / (k! Γ(k+order+1)), accumulated
  // relative to a running log scale.
  const double lz2 = std::log(0.5 * z);
  const double q = 0.25 * z * z;
  double log_t0 = order * lz2 - std::lgamma(order + 1.0);
  double scale = log_t0;
  double sum = 1.0;
  double t = 1.0;  // current term relative to exp(scale)
  for (int k = 0; k < 1000000; ++k) {
    t *= q / ((k + 1.0) * (k + 1.0 + order));
    if (t > 1e100) {
      sum /= t;
      scale += std::log(t);
      t = 1.0;
    }
    sum += t;
    if (t < kEps * sum * 0.1 && k + 1 > 0.5 * z) {
      break;
    }
  }
  return scale + std::log(sum);
}

}  // namespace wishart
