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

#include "wishart/quad.hpp"

namespace wishart::quad {

QuadResult integrate(const Integrand& f, double a, double b, double tol) {
  if (!(tol > 0.0)) {
    throw DomainError("integrate: tol must be positive");
  }
  auto eval = [&f](double x) { return f.eval(x); };
  return integrate_finite<double>(eval, a, b, f.singular_points, Tolerance{tol, 0.0});
}

QuadResult integrate_semi_infinite(const Integrand& f, double a, Direction direction, double tol) {
  if (!f.log_envelope) {
    throw DomainError("integrate_semi_infinite: log_envelope required");
  }
  if (!(tol > 0.0)) {
    throw DomainError("integrate_semi_infinite: tol must be positive");
  }
  auto eval = [&f](double x) { return f.eval(x); };
  return integrate_tail<double>(eval, f.log_envelope, a, direction, f.singular_points, Tolerance{tol, 0.0});
}

}  // namespace wishart::quad
