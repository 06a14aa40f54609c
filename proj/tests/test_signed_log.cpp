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
#include <vector>

#include "wishart/signed_log.hpp"

using wishart::CompensatedSum;
using wishart::SignedLogd;

TEST_CASE("SignedLog arithmetic") {
  const auto a = SignedLogd::from_value(3.0);
  const auto b = SignedLogd::from_value(-2.0);
  CHECK((a * b).value() == doctest::Approx(-6.0));
  CHECK((a / b).value() == doctest::Approx(-1.5));
  CHECK((a + b).value() == doctest::Approx(1.0));
  CHECK((b - a).value() == doctest::Approx(-5.0));
  CHECK((a - a).is_zero());
  CHECK((a * SignedLogd::zero()).is_zero());
  CHECK(SignedLogd::from_value(0.0).is_zero());
  CHECK((SignedLogd::zero() + b) == b);
}

TEST_CASE("SignedLog handles magnitudes outside double range") {
  const SignedLogd huge(1, 2000.0);
  const SignedLogd tiny(1, -2000.0);
  const auto prod = huge * tiny;
  CHECK(prod.value() == doctest::Approx(1.0));
  const auto sum = huge + huge;
  CHECK(sum.logmag == doctest::Approx(2000.0 + std::log(2.0)));
  const auto diff = SignedLogd(1, 2000.0) - SignedLogd(1, 1999.0);
  CHECK(diff.sign == 1);
  CHECK(diff.logmag == doctest::Approx(2000.0 + std::log1p(-std::exp(-1.0))));
}

TEST_CASE("log_sum factors out the largest term") {
  std::vector<SignedLogd> terms = {SignedLogd(1, 20.0), SignedLogd(-1, 20.0), SignedLogd(1, 10.0)};
  const auto s = wishart::log_sum(terms);
  CHECK(s.value.sign == 1);
  CHECK(s.value.logmag == doctest::Approx(10.0).epsilon(1e-9));
  CHECK(s.log_max_term == 20.0);
  CHECK(s.terms == 3);

  std::vector<SignedLogd> plain;
  for (double v : {1.5, -0.25, 3.0}) {
    plain.push_back(SignedLogd::from_value(v));
  }
  CHECK(wishart::log_sum(plain).value.value() == doctest::Approx(4.25));
  CHECK(wishart::log_sum(std::vector<SignedLogd>{}).value.is_zero());
}

TEST_CASE("CompensatedSum recovers small terms lost by naive summation") {
  CompensatedSum<double> acc;
  double naive = 0.0;
  acc.add(1.0);
  naive += 1.0;
  for (int i = 0; i < 1000; ++i) {
    acc.add(1e-17);
    naive += 1e-17;
  }
  acc.add(-1.0);
  naive -= 1.0;
  CHECK(naive == 0.0);
  CHECK(acc.value() == doctest::Approx(1e-14).epsilon(1e-6));
  CHECK(acc.max_abs() == 1.0);
  CHECK(acc.count() == 1002);
}
