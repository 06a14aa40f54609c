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

#include "wishart/sop_kernel.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "wishart/errors.hpp"
#include "wishart/pfaffian.hpp"
#include "wishart/quad.hpp"
#include "wishart/specfun.hpp"

namespace wishart {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPhiRelTol = 1e-12;

double inv_one_minus_tau2(const EnsembleParams& p) { return 1.0 / (1.0 - p.tau * p.tau); }

// ln w(x); +inf at the origin when nu <= 0.
double log_weight(const EnsembleParams& p, double x) {
  const double a = inv_one_minus_tau2(p);
  const double mu = 0.5 * p.nu;
  if (x == 0.0) {
    if (p.nu > 0.0) {
      return std::lgamma(mu) - std::numbers::ln2 + mu * std::log(2.0 / a);
    }
    return std::numeric_limits<double>::infinity();
  }
  const double ax = std::abs(x);
  return mu * std::log(ax) + bessel_k_scaled(std::abs(mu), ax * a) + p.tau * x * a;
}

double weight_value(const EnsembleParams& p, double x) { return std::exp(log_weight(p, x)); }

// Upper-bound shape for ln |w(v) p_j(v)| over all j < N.
double log_envelope(const EnsembleParams& p, double v) {
  const double c = 1.0 + 4.0 * p.tau * (p.N + std::abs(p.nu) + 1.0);
  return log_weight(p, v) + (p.N - 1) * std::log(c + std::abs(v));
}

Eigen::ArrayXd weighted_p(const EnsembleParams& p, double v) {
  return sop_p_all(p, v) * weight_value(p, v);
}

struct PointData {
  double x = 0.0;
  double w = 0.0;
  Eigen::ArrayXd p;
  PhiValues phi;
};

PointData point_data(const SOPCache& cache, double x, bool with_phi) {
  const auto& prm = cache.params();
  if (x == 0.0 && prm.nu <= 0.0) {
    throw DomainError("kernel: x = 0 is singular for nu <= 0");
  }
  PointData d;
  d.x = x;
  d.w = weight_value(prm, x);
  d.p = sop_p_all(prm, x);
  if (with_phi) {
    d.phi = phi_all(cache, x);
  }
  return d;
}

// S_N(x, y) from precomputed point data. With guard set, a roundoff bound
// above 1e-6 of the value raises PrecisionLoss.
KernelEval s_from(const SOPCache& cache, const PointData& X, const PointData& Y, bool guard) {
  const auto& r = cache.r_values();
  const int half = cache.params().N / 2;
  CompensatedSum<double> acc;
  double qerr = 0.0;
  for (int j = 0; j < half; ++j) {
    const double t1 = X.p[2 * j + 1] * Y.phi.value[2 * j] / r[j];
    const double t2 = -X.p[2 * j] * Y.phi.value[2 * j + 1] / r[j];
    acc.add(t1);
    acc.add(t2);
    qerr += (std::abs(X.p[2 * j + 1]) * Y.phi.err[2 * j] + std::abs(X.p[2 * j]) * Y.phi.err[2 * j + 1]) / r[j];
  }
  KernelEval out;
  out.value = X.w * acc.value();
  const double roundoff = X.w * acc.max_abs() * cache.params().N * kEps;
  out.abs_err_estimate = roundoff + X.w * qerr;
  if (guard && roundoff > 1e-6 * std::abs(out.value)) {
    throw PrecisionLoss("s_kernel: cancellation exceeds double precision at N=" +
                        std::to_string(cache.params().N));
  }
  return out;
}

KernelEval d_from(const SOPCache& cache, const PointData& X, const PointData& Y) {
  const auto& r = cache.r_values();
  const int half = cache.params().N / 2;
  CompensatedSum<double> acc;
  for (int j = 0; j < half; ++j) {
    acc.add(X.p[2 * j + 1] * Y.p[2 * j] / r[j]);
    acc.add(-X.p[2 * j] * Y.p[2 * j + 1] / r[j]);
  }
  const double f = -2.0 * X.w * Y.w;
  return {f * acc.value(), std::abs(f) * acc.max_abs() * cache.params().N * kEps};
}

KernelEval itilde_from(const SOPCache& cache, const PointData& X, const PointData& Y) {
  const auto& r = cache.r_values();
  const int half = cache.params().N / 2;
  CompensatedSum<double> acc;
  double qerr = 0.0;
  for (int j = 0; j < half; ++j) {
    acc.add(X.phi.value[2 * j] * Y.phi.value[2 * j + 1] / r[j]);
    acc.add(-X.phi.value[2 * j + 1] * Y.phi.value[2 * j] / r[j]);
    qerr += (X.phi.err[2 * j] * std::abs(Y.phi.value[2 * j + 1]) + std::abs(X.phi.value[2 * j]) * Y.phi.err[2 * j + 1] +
             X.phi.err[2 * j + 1] * std::abs(Y.phi.value[2 * j]) + std::abs(X.phi.value[2 * j + 1]) * Y.phi.err[2 * j]) /
            r[j];
  }
  const double sgn = X.x > Y.x ? 1.0 : (X.x < Y.x ? -1.0 : 0.0);
  KernelEval out;
  out.value = 0.5 * acc.value() + 0.5 * sgn;
  out.abs_err_estimate = 0.5 * (qerr + acc.max_abs() * cache.params().N * kEps);
  return out;
}

}  // namespace

SignedLogd weight_w(const EnsembleParams& params, double x) {
  if (x == 0.0 && params.nu <= 0.0) {
    throw DomainError("weight_w: log singularity at x = 0 for nu <= 0");
  }
  return SignedLogd(1, log_weight(params, x));
}

SignedLogd sop_p(const EnsembleParams& params, int j, double x) {
  if (j < 0) {
    return SignedLogd::zero();
  }
  if (params.tau == 0.0) {
    if (j % 2 == 0) {
      return SignedLogd::from_value(std::pow(x, j));
    }
    const int k = (j - 1) / 2;
    return SignedLogd::from_value(std::pow(x, j) - 2.0 * k * (2.0 * k + params.nu) * std::pow(x, j - 2));
  }
  const double lt = std::log(params.tau);
  const auto L = laguerre_sequence<double>(j + 1, params.nu, x / params.tau);
  SignedLogd lead = L[j] * SignedLogd(1, j * lt + std::lgamma(j + 1.0));
  if (j % 2 == 0) {
    return lead;
  }
  SignedLogd out = -lead;
  if (j >= 3) {
    const double c = j - 1 + params.nu;
    out += L[j - 2] * SignedLogd(1, (j - 2) * lt + std::lgamma(static_cast<double>(j))) * SignedLogd::from_value(c);
  }
  return out;
}

Eigen::ArrayXd sop_p_all(const EnsembleParams& params, double x) {
  const int N = params.N;
  Eigen::ArrayXd out(N);
  if (params.tau == 0.0) {
    double pw = 1.0;  // x^j
    double pw_prev2 = 0.0;
    double pw_prev1 = 0.0;
    for (int j = 0; j < N; ++j) {
      if (j % 2 == 0) {
        out[j] = pw;
      } else {
        const int k = (j - 1) / 2;
        out[j] = pw - 2.0 * k * (2.0 * k + params.nu) * pw_prev2;
      }
      pw_prev2 = pw_prev1;
      pw_prev1 = pw;
      pw *= x;
    }
    return out;
  }
  const double lt = std::log(params.tau);
  std::vector<SignedLogd> L(N);
  laguerre_sequence<double>(params.nu, x / params.tau, std::span<SignedLogd>(L));
  std::vector<SignedLogd> lead(N);
  for (int j = 0; j < N; ++j) {
    lead[j] = L[j] * SignedLogd(1, j * lt + std::lgamma(j + 1.0));
  }
  for (int j = 0; j < N; ++j) {
    if (j % 2 == 0) {
      out[j] = lead[j].value();
    } else if (j == 1) {
      out[j] = -lead[j].value();
    } else {
      // tau^{j-2} (j-1)! (j-1+nu) L_{j-2}
      SignedLogd second = L[j - 2] * SignedLogd(1, (j - 2) * lt + std::lgamma(static_cast<double>(j))) *
                          SignedLogd::from_value(j - 1 + params.nu);
      out[j] = (second - lead[j]).value();
    }
  }
  return out;
}

SOPCache::SOPCache(const EnsembleParams& params) : params_(params) {
  params_.validate(false);
  const int half = params_.N / 2;
  r_.resize(half);
  r_values_.resize(half);
  for (int j = 0; j < half; ++j) {
    const double lr = std::log(2.0 * std::numbers::pi * (1.0 - params_.tau * params_.tau)) + std::lgamma(2.0 * j + 1.0) +
                      std::lgamma(2.0 * j + 1.0 + params_.nu);
    r_[j] = SignedLogd(1, lr);
    r_values_[j] = std::exp(lr);
  }
  const EnsembleParams prm = params_;
  auto g = [prm](double v) { return weighted_p(prm, v); };
  auto env = [prm](double v) { return log_envelope(prm, v); };
  const quad::Tolerance tol{0.0, kPhiRelTol};
  const auto lo = quad::integrate_tail<Eigen::ArrayXd>(g, env, 0.0, quad::Direction::Minus, {0.0}, tol);
  const auto hi = quad::integrate_tail<Eigen::ArrayXd>(g, env, 0.0, quad::Direction::Plus, {0.0}, tol);
  phi_total_ = lo.value + hi.value;
  phi_total_err_ = lo.abs_err_estimate + hi.abs_err_estimate;
}

PhiValues phi_all(const SOPCache& cache, double y) {
  const auto& prm = cache.params();
  PhiValues out;
  if (std::isinf(y)) {
    out.value = y > 0 ? cache.phi_total() : Eigen::ArrayXd(-cache.phi_total());
    out.err = cache.phi_total_err();
    return out;
  }
  auto g = [&prm](double v) { return weighted_p(prm, v); };
  auto env = [&prm](double v) { return log_envelope(prm, v); };
  const quad::Tolerance tol{0.0, kPhiRelTol};
  std::vector<double> singular{0.0};
  if (std::abs(y) < 0.5 && y != 0.0) {
    singular.push_back(y);
  }
  if (y >= 0.0) {
    const auto t = quad::integrate_tail<Eigen::ArrayXd>(g, env, y, quad::Direction::Plus, singular, tol);
    out.value = cache.phi_total() - 2.0 * t.value;
    out.err = cache.phi_total_err() + 2.0 * t.abs_err_estimate;
  } else {
    const auto t = quad::integrate_tail<Eigen::ArrayXd>(g, env, y, quad::Direction::Minus, singular, tol);
    out.value = 2.0 * t.value - cache.phi_total();
    out.err = cache.phi_total_err() + 2.0 * t.abs_err_estimate;
  }
  return out;
}

KernelEval phi(const SOPCache& cache, int j, double y) {
  if (j < 0 || j >= cache.params().N) {
    throw DomainError("phi: index out of range");
  }
  const PhiValues v = phi_all(cache, y);
  return {v.value[j], v.err[j]};
}

KernelEval s_kernel(const SOPCache& cache, double x, double y) {
  const PointData X = point_data(cache, x, false);
  const PointData Y = point_data(cache, y, true);
  return s_from(cache, X, Y, x == y);
}

KernelEval s_kernel_rescaled(const SOPCache& cache, double x, double y) {
  const int N = cache.params().N;
  KernelEval k = s_kernel(cache, N * x, N * y);
  return {N * k.value, N * k.abs_err_estimate};
}

KernelEval d_kernel(const SOPCache& cache, double x, double y) {
  const double N = cache.params().N;
  const PointData X = point_data(cache, N * x, false);
  const PointData Y = point_data(cache, N * y, false);
  KernelEval k = d_from(cache, X, Y);
  return {N * N * k.value, N * N * k.abs_err_estimate};
}

KernelEval itilde_kernel(const SOPCache& cache, double x, double y) {
  const double N = cache.params().N;
  if (x == y) {
    return {0.0, 0.0};
  }
  const PointData X = point_data(cache, N * x, true);
  const PointData Y = point_data(cache, N * y, true);
  return itilde_from(cache, X, Y);
}

MatrixKernel2x2 matrix_kernel(const SOPCache& cache, double x, double y) {
  const double N = cache.params().N;
  const PointData X = point_data(cache, N * x, true);
  const PointData Y = point_data(cache, N * y, true);
  MatrixKernel2x2 m;
  m.d = N * N * d_from(cache, X, Y).value;
  m.s_xy = N * s_from(cache, X, Y, x == y).value;
  m.s_yx = N * s_from(cache, Y, X, x == y).value;
  m.itilde = x == y ? 0.0 : itilde_from(cache, X, Y).value;
  return m;
}

KernelEval r_one_point_unscaled(const SOPCache& cache, double x) {
  const PointData X = point_data(cache, x, true);
  return s_from(cache, X, X, true);
}

KernelEval r_one_point(const SOPCache& cache, double x) {
  const int N = cache.params().N;
  KernelEval k = r_one_point_unscaled(cache, N * x);
  return {N * k.value, N * k.abs_err_estimate};
}

Eigen::MatrixXd correlation_matrix(const SOPCache& cache, const std::vector<double>& points) {
  const double N = cache.params().N;
  const auto k = static_cast<Eigen::Index>(points.size());
  std::vector<PointData> data;
  data.reserve(points.size());
  for (double x : points) {
    data.push_back(point_data(cache, N * x, true));
  }
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(2 * k, 2 * k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const double sii = N * s_from(cache, data[i], data[i], true).value;
    A(2 * i, 2 * i + 1) = sii;
    A(2 * i + 1, 2 * i) = -sii;
    for (Eigen::Index j = i + 1; j < k; ++j) {
      Eigen::Matrix2d B;
      B(0, 0) = N * N * d_from(cache, data[i], data[j]).value;
      B(0, 1) = N * s_from(cache, data[i], data[j], false).value;
      B(1, 0) = -N * s_from(cache, data[j], data[i], false).value;
      B(1, 1) = itilde_from(cache, data[i], data[j]).value;
      A.block<2, 2>(2 * i, 2 * j) = B;
      A.block<2, 2>(2 * j, 2 * i) = -B.transpose();
    }
  }
  return A;
}

double correlation_k(const SOPCache& cache, const std::vector<double>& points) {
  if (points.empty()) {
    return 1.0;
  }
  return pfaffian(correlation_matrix(cache, points));
}

KernelEval expected_number(const SOPCache& cache) {
  const auto& prm = cache.params();
  auto R = [&cache](double x) { return r_one_point_unscaled(cache, x).value; };
  auto env = [&prm](double x) { return log_envelope(prm, x); };
  const quad::Tolerance tol{0.0, 1e-9};
  const auto lo = quad::integrate_tail<double>(R, env, 0.0, quad::Direction::Minus, {0.0}, tol);
  const auto hi = quad::integrate_tail<double>(R, env, 0.0, quad::Direction::Plus, {0.0}, tol);
  return {lo.value + hi.value, lo.abs_err_estimate + hi.abs_err_estimate};
}

Eigen::MatrixXd real_skew_gram(const SOPCache& cache, int count) {
  const auto& prm = cache.params();
  if (count < 1 || count > prm.N) {
    throw DomainError("real_skew_gram: count out of range");
  }
  auto g = [&cache, &prm, count](double v) {
    const Eigen::ArrayXd wp = weighted_p(prm, v).head(count);
    const Eigen::ArrayXd ph = phi_all(cache, v).value.head(count);
    Eigen::ArrayXd out(count * count);
    for (int i = 0; i < count; ++i) {
      for (int k = 0; k < count; ++k) {
        out[i * count + k] = ph[i] * wp[k];
      }
    }
    return out;
  };
  auto env = [&prm](double v) { return log_envelope(prm, v); };
  const quad::Tolerance tol{0.0, 1e-10};
  const auto lo = quad::integrate_tail<Eigen::ArrayXd>(g, env, 0.0, quad::Direction::Minus, {0.0}, tol);
  const auto hi = quad::integrate_tail<Eigen::ArrayXd>(g, env, 0.0, quad::Direction::Plus, {0.0}, tol);
  const Eigen::ArrayXd tot = lo.value + hi.value;
  Eigen::MatrixXd G(count, count);
  for (int i = 0; i < count; ++i) {
    for (int k = 0; k < count; ++k) {
      G(i, k) = tot[i * count + k];
    }
  }
  return G;
}

}  // namespace wishart
