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


#ifndef WISHART_VERIFY_HPP
#define WISHART_VERIFY_HPP

#include <map>
#include <string>
#include <vector>

namespace wishart::verify {

/// One tolerance-checked quantity inside a check.
struct SubCheck {
  std::string label;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct CheckResult {
  std::string name;
  std::vector<SubCheck> parts;
  // exception text when the check could not be evaluated
  std::string error;

  bool passed() const;
  double max_residual() const;
};

/// Tolerance overrides keyed by "check.label"; missing keys fall back to the built-in defaults.
using Tolerances = std::map<std::string, double>;

/// Names accepted by run(), in execution order.
const std::vector<std::string>& check_names();

CheckResult decomposition(const Tolerances& tol = {});
CheckResult christoffel_darboux(const Tolerances& tol = {});
CheckResult skew_orthogonality(const Tolerances& tol = {});
CheckResult pfaffian(const Tolerances& tol = {});
CheckResult c_strong(const Tolerances& tol = {});
CheckResult c_weak(const Tolerances& tol = {});
CheckResult mass_one(const Tolerances& tol = {});
CheckResult one_point_split(const Tolerances& tol = {});
CheckResult incomplete_beta(const Tolerances& tol = {});
CheckResult omega(const Tolerances& tol = {});
CheckResult plancherel_rotach(const Tolerances& tol = {});
CheckResult tau_zero(const Tolerances& tol = {});

/// Runs one check by name. Throws std::invalid_argument for unknown names.
CheckResult run(const std::string& name, const Tolerances& tol = {});

}  // namespace wishart::verify

#endif  // WISHART_VERIFY_HPP
