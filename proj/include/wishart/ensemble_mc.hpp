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


#ifndef WISHART_ENSEMBLE_MC_HPP
#define WISHART_ENSEMBLE_MC_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "wishart/ensemble.hpp"
#include "wishart/errors.hpp"
#include "wishart/limits.hpp"

namespace wishart {

struct TrialBatch {
  EnsembleParams params;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<int> real_counts;
  // real eigenvalues of all trials, in trial order
  std::vector<double> pooled_reals;
};

enum class Normalization { Density, CountPerMatrix };

struct Histogram {
  std::vector<double> edges;
  std::vector<double> masses;
  Normalization normalization = Normalization::Density;
};

/// How real eigenvalues are told apart from complex pairs.
enum class Classification {
  Schur,      // 1x1 blocks of the real Schur form
  Threshold,  // |Im| <= 1e-9 (1 + |lambda|) from the general eigensolver
};

/// Deterministic 64-bit state for the given trial of a seeded run.
std::uint64_t trial_stream_seed(std::uint64_t seed, std::uint64_t trial);

/// X = X_+ X_-^T with X_± = sqrt(1+tau) P ± sqrt(1-tau) Q.
Eigen::MatrixXd sample_matrix(const EnsembleParams& params, std::mt19937_64& rng);

namespace detail {

template <typename Scalar, typename Visit>
void visit_schur_blocks(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& T, Visit&& visit) {
  const Eigen::Index n = T.rows();
  Eigen::Index i = 0;
  while (i < n) {
    if (i + 1 == n || T(i + 1, i) == Scalar(0)) {
      visit(std::complex<Scalar>(T(i, i), Scalar(0)), false);
      ++i;
      continue;
    }
    const Scalar a = T(i, i);
    const Scalar b = T(i, i + 1);
    const Scalar c = T(i + 1, i);
    const Scalar d = T(i + 1, i + 1);
    const Scalar half = (a - d) / 2;
    const std::complex<Scalar> disc = std::sqrt(std::complex<Scalar>(half * half + b * c, Scalar(0)));
    const Scalar mid = (a + d) / 2;
    visit(std::complex<Scalar>(mid, Scalar(0)) + disc, true);
    visit(std::complex<Scalar>(mid, Scalar(0)) - disc, true);
    i += 2;
  }
}

template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> schur_t(const Eigen::MatrixBase<Derived>& X) {
  using Mat = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (X.rows() != X.cols()) {
    throw DomainError("real_eigenvalues: matrix must be square");
  }
  Eigen::RealSchur<Mat> schur(Mat(X), false);
  if (schur.info() != Eigen::Success) {
    throw NonConvergence("real_eigenvalues: real Schur iteration did not converge");
  }
  return schur.matrixT();
}

}  // namespace detail

/**
 * Real eigenvalues of a square real matrix. In Schur mode these are the
 * diagonal entries of the 1x1 blocks of the real Schur form.
 */
template <typename Derived>
std::vector<typename Derived::Scalar> real_eigenvalues(const Eigen::MatrixBase<Derived>& X,
                                                        Classification mode = Classification::Schur) {
  using Scalar = typename Derived::Scalar;
  std::vector<Scalar> out;
  if (mode == Classification::Threshold) {
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    Eigen::EigenSolver<Mat> es(Mat(X), false);
    if (es.info() != Eigen::Success) {
      throw NonConvergence("real_eigenvalues: eigensolver did not converge");
    }
    for (const auto& l : es.eigenvalues()) {
      if (std::abs(l.imag()) <= Scalar(1e-9) * (1 + std::abs(l))) {
        out.push_back(l.real());
      }
    }
    return out;
  }
  const auto T = detail::schur_t(X);
  detail::visit_schur_blocks<Scalar>(T, [&](std::complex<Scalar> l, bool pair) {
    if (!pair) {
      out.push_back(l.real());
    }
  });
  return out;
}

/// All eigenvalues; those from 1x1 Schur blocks have an exactly zero imaginary part.
template <typename Derived>
std::vector<std::complex<typename Derived::Scalar>> all_eigenvalues(const Eigen::MatrixBase<Derived>& X) {
  using Scalar = typename Derived::Scalar;
  std::vector<std::complex<Scalar>> out;
  const auto T = detail::schur_t(X);
  detail::visit_schur_blocks<Scalar>(T, [&](std::complex<Scalar> l, bool) { out.push_back(l); });
  return out;
}

/// Worker count: hardware concurrency capped by WISHART_THREADS and by the number of tasks.
int worker_count(int tasks);

/**
 * Runs task(i) for i in [0, count) on worker_count(count) threads. Each
 * index runs exactly once; the first exception is rethrown.
 */
void parallel_for(int count, const std::function<void(int)>& task);

TrialBatch run_trials(const EnsembleParams& params, int trials, std::uint64_t seed,
                      Classification mode = Classification::Schur);

struct EigenSample {
  double re = 0.0;
  double im = 0.0;
  int trial = 0;
};

/// Every eigenvalue of every trial, ordered by trial; same streams as run_trials.
std::vector<EigenSample> sample_eigenvalues(const EnsembleParams& params, int trials, std::uint64_t seed);

/// Mean real count and its standard error.
std::pair<double, double> mean_count(const TrialBatch& batch);

/// Equal-width bins on [lo, hi]; pooled reals outside the range are dropped before normalizing.
Histogram histogram_density(const TrialBatch& batch, int bins, double lo, double hi,
                            Normalization norm = Normalization::Density);

/// Cube-root rule, at least 4 bins.
int default_bins(std::size_t samples);

/// Bins over the range of the pooled reals.
Histogram histogram_density(const TrialBatch& batch, int bins);

/// Σ over bins of |histogram mass - ∫_bin density|, with the density integrated by quadrature.
double l1_distance(const Histogram& h, const std::function<double(double)>& density,
                   const std::vector<double>& singular_points = {});

/// Same, with the curve integrated as a piecewise-linear interpolant (zero outside its grid).
double l1_distance(const Histogram& h, const DensityCurve& curve);

}  // namespace wishart

#endif  // WISHART_ENSEMBLE_MC_HPP
