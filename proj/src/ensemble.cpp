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

#include "wishart/ensemble.hpp"

#include <cmath>
#include <sstream>

#include "wishart/errors.hpp"

namespace wishart {

EnsembleParams EnsembleParams::strong(int N, double nu, double tau) {
  EnsembleParams p;
  p.N = N;
  p.nu = nu;
  p.tau = tau;
  p.regime = Regime::Strong;
  p.validate(true);
  return p;
}

EnsembleParams EnsembleParams::weak(int N, double nu, double alpha) {
  EnsembleParams p;
  p.N = N;
  p.nu = nu;
  p.alpha = alpha;
  p.regime = Regime::Weak;
  p.tau = 1.0 - alpha * alpha / (2.0 * N);
  p.validate(true);
  return p;
}

void EnsembleParams::validate(bool allow_tau_one) const {
  if (N <= 0 || N % 2 != 0) {
    throw ConfigError("N must be a positive even integer");
  }
  if (!(nu > -1.0) || !std::isfinite(nu)) {
    throw ConfigError("nu must be a finite real > -1");
  }
  if (!(tau >= 0.0) || tau > 1.0 || (!allow_tau_one && tau >= 1.0)) {
    throw ConfigError(allow_tau_one ? "tau must lie in [0, 1]" : "tau must lie in [0, 1)");
  }
  if (regime == Regime::Weak) {
    if (!(alpha > 0.0)) {
      throw ConfigError("weak regime needs alpha > 0");
    }
    if (tau != 1.0 - alpha * alpha / (2.0 * N)) {
      throw ConfigError("weak regime needs tau = 1 - alpha^2/(2N)");
    }
  }
}

std::string EnsembleParams::describe() const {
  std::ostringstream os;
  os << "N=" << N << " nu=" << nu << " tau=" << tau;
  if (regime == Regime::Weak) {
    os << " (weak, alpha=" << alpha << ")";
  }
  return os.str();
}

}  // namespace wishart
