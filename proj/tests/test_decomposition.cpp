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


#include <doctest.h>

#include <cmath>

#include "wishart/complex_kernel.hpp"
#include "wishart/decomposition.hpp"
#include "wishart/errors.hpp"
#include "wishart/sop_kernel.hpp"

using namespace wishart;

TEST_CASE("decomposition pieces add up to the kernel") {
  const auto p = EnsembleParams::strong(6, 1.0, 0.5);
  const SOPCache cache(p);
  for (double x : {-1.0, 0.3, 2.2}) {
    for (double y : {-0.6, 0.9, 4.0}) {
      const auto d = decompose(p, x, y);
      CHECK(d.total == doctest::Approx(d.s1 + d.s1_tilde + d.s2).epsilon(1e-15));
      CHECK(d.total == doctest::Approx(s_kernel(cache, x, y).value).epsilon(1e-9));
    }
  }
}

TEST_CASE("verify_decomposition stays small on a mixed-sign grid") {
  for (double tau : {0.2, 0.8}) {
    const auto p = EnsembleParams::strong(8, 2.0, tau);
    const SOPCache cache(p);
    for (double x : {-1.5, 0.6, 5.0}) {
      for (double y : {-0.4, 2.0}) {
        CHECK(verify_decomposition(cache, x, y) <= 1e-9);
      }
    }
  }
}

TEST_CASE("s1 is proportional to the complex kernel") {
  const auto p = EnsembleParams::strong(6, 0.0, 0.4);
  // only the y-dependent prefactor differs between two x values
  const double r1 = s1(p, 0.5, 1.3) / s1(p, 0.5, -0.7);
  const double r2 = s1(p, 2.0, 1.3) / s1(p, 2.0, -0.7);
  const auto kpart = [&](double x, double y) { return k_complex_partial(p, p.N - 1, x, y, 0, 0).value.value(); };
  CHECK(r1 / r2 == doctest::Approx(kpart(0.5, 1.3) / kpart(0.5, -0.7) / (kpart(2.0, 1.3) / kpart(2.0, -0.7))));
}

TEST_CASE("one-point split agrees with the kernel") {
  for (double nu : {0.0, 3.0}) {
    const auto p = EnsembleParams::strong(10, nu, 0.5);
    const SOPCache cache(p);
    for (double x : {-0.2, 0.4, 1.5, 2.4}) {
      const double r = r_one_point(cache, x).value;
      CHECK(r_hat_1(p, x) + r_n2(p, x) == doctest::Approx(r).epsilon(1e-9));
    }
  }
}

TEST_CASE("omega weights") {
  const auto p = EnsembleParams::strong(10, 2.0, 0.5);
  const auto w = omega_weights(p, 0.7);
  for (double v : w) {
    CHECK(v > 0.0);
    CHECK(std::isfinite(v));
  }
  CHECK_THROWS_AS(omega_weights(p, 0.0), DomainError);
}

TEST_CASE("derivative of the weighted complex one-point function") {
  const auto p = EnsembleParams::strong(8, 1.0, 0.6);
  const double h = 1e-6;
  for (double x : {-0.3, 0.5, 1.8}) {
    const double fd = (r_complex_weighted(p, x + h) - r_complex_weighted(p, x - h)) / (2 * h);
    CHECK(r_complex_weighted_dx(p, x) == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("tau = 0 closed form") {
  for (int N : {4, 8}) {
    for (double nu : {0.0, 2.0}) {
      const auto p = EnsembleParams::strong(N, nu, 0.0);
      const SOPCache cache(p);
      for (double x : {-1.0, -0.5, 0.5, 1.0, 3.0}) {
        CHECK(tau0_one_point(p, x) == doctest::Approx(r_one_point_unscaled(cache, x).value).epsilon(1e-9));
      }
    }
  }
}
