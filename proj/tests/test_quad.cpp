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
#include <numbers>

#include <Eigen/Core>

#include "wishart/errors.hpp"
#include "wishart/quad.hpp"

using namespace wishart::quad;

TEST_CASE("smooth integrands") {
  const auto r = integrate(Integrand{[](double x) { return std::exp(-x * x); }, {}, {}}, -3.0, 2.0, 1e-14);
  const double exact = std::sqrt(std::numbers::pi) / 2.0 * (std::erf(2.0) + std::erf(3.0));
  CHECK(r.value == doctest::Approx(exact).epsilon(1e-14));
  CHECK(r.abs_err_estimate <= 1e-13);

  auto osc = [](double x) { return std::cos(40.0 * x); };
  const auto o = integrate_finite<double>(osc, 0.0, 1.0, {}, Tolerance{0.0, 1e-13});
  CHECK(o.value == doctest::Approx(std::sin(40.0) / 40.0).epsilon(1e-12));
}

TEST_CASE("endpoint and interior singularities") {
  // ∫_0^1 x^{-1/2} = 2
  auto f = [](double x) { return 1.0 / std::sqrt(x); };
  CHECK(integrate_finite<double>(f, 0.0, 1.0, {0.0}, Tolerance{0.0, 1e-13}).value ==
        doctest::Approx(2.0).epsilon(1e-12));
  // ∫_{-1}^{2} |x|^{-1/2} = 2 + 2 sqrt 2
  auto g = [](double x) { return 1.0 / std::sqrt(std::abs(x)); };
  CHECK(integrate_finite<double>(g, -1.0, 2.0, {0.0}, Tolerance{0.0, 1e-13}).value ==
        doctest::Approx(2.0 + 2.0 * std::sqrt(2.0)).epsilon(1e-12));
  // ∫_0^1 log x = -1
  auto h = [](double x) { return std::log(x); };
  CHECK(integrate_finite<double>(h, 0.0, 1.0, {0.0}, Tolerance{0.0, 1e-13}).value ==
        doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("semi-infinite tails") {
  Integrand f{[](double x) { return std::exp(-x) * x * x; }, [](double x) { return -x + 2.0 * std::log(std::abs(x) + 1.0); },
              {}};
  CHECK(integrate_semi_infinite(f, 0.0, Direction::Plus, 1e-13).value == doctest::Approx(2.0).epsilon(1e-12));

  Integrand g{[](double x) { return std::exp(x); }, [](double x) { return x; }, {}};
  CHECK(integrate_semi_infinite(g, 1.0, Direction::Minus, 1e-13).value == doctest::Approx(std::exp(1.0)).epsilon(1e-12));

  Integrand flat{[](double) { return 1.0; }, [](double) { return 0.0; }, {}};
  CHECK_THROWS_AS(integrate_semi_infinite(flat, 0.0, Direction::Plus, 1e-10), wishart::EnvelopeNotDecaying);
  Integrand no_env{[](double x) { return std::exp(-x); }, {}, {}};
  CHECK_THROWS_AS(integrate_semi_infinite(no_env, 0.0, Direction::Plus, 1e-10), wishart::DomainError);
}

TEST_CASE("vector-valued integrands use per-component tolerances") {
  auto f = [](double x) {
    Eigen::ArrayXd v(3);
    v << 1.0, x, 1e-20 * x * x;
    return v;
  };
  const auto r = integrate_finite<Eigen::ArrayXd>(f, 0.0, 3.0, {}, Tolerance{0.0, 1e-13});
  CHECK(r.value[0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(r.value[1] == doctest::Approx(4.5).epsilon(1e-14));
  CHECK(r.value[2] == doctest::Approx(9e-20).epsilon(1e-13));
}

TEST_CASE("bad input is rejected") {
  auto f = [](double x) { return x; };
  CHECK_THROWS_AS(integrate_finite<double>(f, 1.0, 0.0, {}, Tolerance{1e-10, 0.0}), wishart::DomainError);
  auto nan = [](double) { return std::nan(""); };
  CHECK_THROWS_AS(integrate_finite<double>(nan, 0.0, 1.0, {}, Tolerance{1e-10, 0.0}), wishart::NonConvergence);
  CHECK_THROWS_AS(integrate(Integrand{f, {}, {}}, 0.0, 1.0, 0.0), wishart::DomainError);
}
