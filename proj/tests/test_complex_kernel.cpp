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
#include "wishart/errors.hpp"
#include "wishart/specfun.hpp"

using namespace wishart;

TEST_CASE("K_N against a 40-digit finite sum") {
  const auto p = EnsembleParams::strong(10, 1.5, 0.4);
  CHECK(k_complex(p, 3.1, -0.8).value.value() == doctest::Approx(0.055506121047764650343).epsilon(1e-13));
}

TEST_CASE("K_N is symmetric and its derivative matches finite differences") {
  const auto p = EnsembleParams::strong(8, 0.7, 0.55);
  CHECK(k_complex(p, 1.2, 4.0).value.value() == doctest::Approx(k_complex(p, 4.0, 1.2).value.value()).epsilon(1e-15));
  const double h = 1e-5;
  const double fd = (k_complex(p, 1.2, 4.0 + h).value.value() - k_complex(p, 1.2, 4.0 - h).value.value()) / (2 * h);
  CHECK(k_complex_dy(p, 1.2, 4.0).value.value() == doctest::Approx(fd).epsilon(1e-7));
  const auto mixed = k_complex_partial(p, 8, 1.2, 4.0, 1, 1);
  const double fd2 = (k_complex_partial(p, 8, 1.2 + h, 4.0, 0, 1).value.value() -
                      k_complex_partial(p, 8, 1.2 - h, 4.0, 0, 1).value.value()) /
                     (2 * h);
  CHECK(mixed.value.value() == doctest::Approx(fd2).epsilon(1e-7));
}

TEST_CASE("Christoffel-Darboux residuals at assorted points") {
  for (int N : {2, 6, 14, 20}) {
    for (double nu : {0.0, 1.5, 3.0}) {
      for (double tau : {0.2, 0.6, 0.9}) {
        const auto p = EnsembleParams::strong(N, nu, tau);
        CAPTURE(N);
        CAPTURE(nu);
        CAPTURE(tau);
        CHECK(cd_offdiag_residual(p, 0.4 * N, -0.1 * N) <= 1e-12);
        CHECK(cd_offdiag_residual(p, 2.3 * N, 1.7 * N) <= 1e-12);
        CHECK(cd_diag_residual(p, 0.9 * N) <= 1e-12);
        CHECK(cd_diag_residual(p, -0.3 * N) <= 1e-12);
      }
    }
  }
}

TEST_CASE("the kernel depends on N at bulk-scale arguments") {
  const auto p = EnsembleParams::strong(8, 1.0, 0.5);
  const auto q = EnsembleParams::strong(10, 1.0, 0.5);
  const double k8 = k_complex(p, 12.0, 15.0).value.value();
  const double k10 = k_complex(q, 12.0, 15.0).value.value();
  CHECK(std::abs(k8 - k10) / std::abs(k10) > 1e-3);
  CHECK(cd_offdiag_residual(p, 12.0, 15.0) <= 1e-12);
}

TEST_CASE("origin value of the weighted one-point function") {
  for (int N : {10, 20}) {
    for (double nu : {5.0, 20.0}) {
      for (double tau : {0.3, 0.7}) {
        const auto p = EnsembleParams::strong(N, nu, tau);
        CHECK(rc_zero_identity_residual(p) <= 1e-10);
        CHECK(r_complex_weighted(p, 0.0) > 0.0);
      }
    }
  }
  CHECK_THROWS_AS(rc_zero_closed_form(EnsembleParams::strong(10, 0.0, 0.5)), DomainError);
}

TEST_CASE("omega_c is continuous at the origin") {
  const auto p = EnsembleParams::strong(10, 3.0, 0.4);
  CHECK(log_omega_c(p, 1e-9) == doctest::Approx(log_omega_c(p, 0.0)).epsilon(1e-7));
  CHECK(log_omega_c(p, -1e-9) == doctest::Approx(log_omega_c(p, 0.0)).epsilon(1e-7));
}

TEST_CASE("complex kernel requires 0 < tau < 1") {
  CHECK_THROWS_AS(k_complex(EnsembleParams::strong(4, 0.0, 0.0), 1.0, 1.0), DomainError);
}
