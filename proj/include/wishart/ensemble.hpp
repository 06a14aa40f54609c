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

#ifndef WISHART_ENSEMBLE_HPP
#define WISHART_ENSEMBLE_HPP

#include <string>

namespace wishart {

enum class Regime { Strong, Weak };

/**
 * Parameters of the asymmetric Wishart ensemble: matrix size N (even),
 * rectangularity nu and non-Hermiticity tau. In the weak regime tau is
 * tied to alpha through tau = 1 - alpha^2 / (2N).
 */
struct EnsembleParams {
  int N = 2;
  double nu = 0.0;
  double tau = 0.5;
  Regime regime = Regime::Strong;
  double alpha = 0.0;

  static EnsembleParams strong(int N, double nu, double tau);
  static EnsembleParams weak(int N, double nu, double alpha);

  /// Throws ConfigError unless the invariants hold. Sampling accepts tau = 1.
  void validate(bool allow_tau_one = false) const;

  double rho() const { return nu / N; }

  std::string describe() const;
};

}  // namespace wishart

#endif  // WISHART_ENSEMBLE_HPP
