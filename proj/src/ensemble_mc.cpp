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


#include "wishart/ensemble_mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "wishart/quad.hpp"
#include "wishart/signed_log.hpp"

namespace wishart {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_sampling_params(const EnsembleParams& params) {
  params.validate(true);
  if (params.nu < 0.0 || params.nu != std::floor(params.nu)) {
    throw ConfigError("sampling needs an integer nu >= 0");
  }
}

// integral of the piecewise-linear interpolant of the curve over [a, b]
double integrate_linear(const DensityCurve& c, double a, double b) {
  CompensatedSum<double> sum;
  for (std::size_t k = 1; k < c.grid.size(); ++k) {
    const double x0 = c.grid[k - 1];
    const double x1 = c.grid[k];
    const double lo = std::max(a, x0);
    const double hi = std::min(b, x1);
    if (!(hi > lo) || !(x1 > x0)) {
      continue;
    }
    const double slope = (c.values[k] - c.values[k - 1]) / (x1 - x0);
    const double flo = c.values[k - 1] + slope * (lo - x0);
    const double fhi = c.values[k - 1] + slope * (hi - x0);
    sum.add(0.5 * (flo + fhi) * (hi - lo));
  }
  return sum.value();
}

}  // namespace

std::uint64_t trial_stream_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(splitmix64(seed) ^ splitmix64(trial + 0x632be59bd9b4e019ULL));
}

Eigen::MatrixXd sample_matrix(const EnsembleParams& params, std::mt19937_64& rng) {
  check_sampling_params(params);
  const int n = params.N;
  const int m = params.N + static_cast<int>(params.nu);
  std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(2.0 * n));
  Eigen::MatrixXd P(n, m);
  Eigen::MatrixXd Q(n, m);
  for (auto* M : {&P, &Q}) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) {
        (*M)(i, j) = normal(rng);
      }
    }
  }
  const double a = std::sqrt(1.0 + params.tau);
  const double b = std::sqrt(1.0 - params.tau);
  const Eigen::MatrixXd Xp = a * P + b * Q;
  const Eigen::MatrixXd Xm = a * P - b * Q;
  return Xp * Xm.transpose();
}

int worker_count(int tasks) {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) {
    n = 1;
  }
  if (const char* env = std::getenv("WISHART_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) {
      n = std::min(n, cap);
    }
  }
  return std::max(1, std::min(n, tasks));
}

void parallel_for(int count, const std::function<void(int)>& task) {
  const int workers = worker_count(count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) {
      task(i);
    }
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        task(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back(worker);
  }
  for (auto& t : pool) {
    t.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

TrialBatch run_trials(const EnsembleParams& params, int trials, std::uint64_t seed, Classification mode) {
  check_sampling_params(params);
  if (trials < 1) {
    throw ConfigError("run_trials: trials must be >= 1");
  }
  std::vector<std::vector<double>> per_trial(trials);
  parallel_for(trials, [&](int t) {
    std::mt19937_64 rng(trial_stream_seed(seed, static_cast<std::uint64_t>(t)));
    const Eigen::MatrixXd X = sample_matrix(params, rng);
    try {
      per_trial[t] = real_eigenvalues(X, mode);
    } catch (const NonConvergence& e) {
      throw NonConvergence(std::string(e.what()) + " (seed " + std::to_string(seed) + ", trial " +
                           std::to_string(t) + ")");
    }
  });
  TrialBatch batch;
  batch.params = params;
  batch.seed = seed;
  batch.trials = trials;
  batch.real_counts.reserve(trials);
  for (const auto& reals : per_trial) {
    batch.real_counts.push_back(static_cast<int>(reals.size()));
    batch.pooled_reals.insert(batch.pooled_reals.end(), reals.begin(), reals.end());
  }
  return batch;
}

std::vector<EigenSample> sample_eigenvalues(const EnsembleParams& params, int trials, std::uint64_t seed) {
  check_sampling_params(params);
  if (trials < 1) {
    throw ConfigError("sample_eigenvalues: trials must be >= 1");
  }
  std::vector<std::vector<std::complex<double>>> per_trial(trials);
  parallel_for(trials, [&](int t) {
    std::mt19937_64 rng(trial_stream_seed(seed, static_cast<std::uint64_t>(t)));
    per_trial[t] = all_eigenvalues(sample_matrix(params, rng));
  });
  std::vector<EigenSample> out;
  out.reserve(static_cast<std::size_t>(trials) * params.N);
  for (int t = 0; t < trials; ++t) {
    for (const auto& l : per_trial[t]) {
      out.push_back({l.real(), l.imag(), t});
    }
  }
  return out;
}

std::pair<double, double> mean_count(const TrialBatch& batch) {
  if (batch.real_counts.empty()) {
    throw EmptyBatch("mean_count: no trials");
  }
  const double n = static_cast<double>(batch.real_counts.size());
  double mean = 0.0;
  for (int c : batch.real_counts) {
    mean += c;
  }
  mean /= n;
  double var = 0.0;
  for (int c : batch.real_counts) {
    var += (c - mean) * (c - mean);
  }
  var = n > 1 ? var / (n - 1.0) : 0.0;
  return {mean, std::sqrt(var / n)};
}

Histogram histogram_density(const TrialBatch& batch, int bins, double lo, double hi, Normalization norm) {
  if (batch.pooled_reals.empty()) {
    throw EmptyBatch("histogram_density: no real eigenvalues in the batch");
  }
  if (bins < 1 || !(lo < hi)) {
    throw DomainError("histogram_density: need bins >= 1 and lo < hi");
  }
  Histogram h;
  h.normalization = norm;
  h.edges.resize(bins + 1);
  for (int k = 0; k <= bins; ++k) {
    h.edges[k] = lo + (hi - lo) * k / bins;
  }
  h.masses.assign(bins, 0.0);
  std::size_t inside = 0;
  for (double x : batch.pooled_reals) {
    if (x < lo || x > hi) {
      continue;
    }
    const int k = std::min(bins - 1, static_cast<int>((x - lo) / (hi - lo) * bins));
    h.masses[k] += 1.0;
    ++inside;
  }
  if (inside == 0) {
    throw EmptyBatch("histogram_density: no real eigenvalues inside the range");
  }
  const double denom = norm == Normalization::Density ? static_cast<double>(inside) : static_cast<double>(batch.trials);
  for (double& m : h.masses) {
    m /= denom;
  }
  return h;
}

int default_bins(std::size_t samples) {
  return std::max(4, static_cast<int>(std::lround(std::cbrt(static_cast<double>(samples)))));
}

Histogram histogram_density(const TrialBatch& batch, int bins) {
  if (batch.pooled_reals.empty()) {
    throw EmptyBatch("histogram_density: no real eigenvalues in the batch");
  }
  const auto [mn, mx] = std::minmax_element(batch.pooled_reals.begin(), batch.pooled_reals.end());
  double lo = *mn;
  double hi = *mx;
  if (!(lo < hi)) {
    lo -= 0.5;
    hi += 0.5;
  }
  return histogram_density(batch, bins, lo, hi);
}

double l1_distance(const Histogram& h, const std::function<double(double)>& density,
                   const std::vector<double>& singular_points) {
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < h.edges.size(); ++k) {
    const double a = h.edges[k];
    const double b = h.edges[k + 1];
    const auto r = quad::integrate_finite<double>(density, a, b, singular_points, quad::Tolerance{1e-10, 1e-10});
    total += std::abs(h.masses[k] - r.value);
  }
  return total;
}

double l1_distance(const Histogram& h, const DensityCurve& curve) {
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < h.edges.size(); ++k) {
    total += std::abs(h.masses[k] - integrate_linear(curve, h.edges[k], h.edges[k + 1]));
  }
  return total;
}

}  // namespace wishart
