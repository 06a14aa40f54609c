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

#include <random>

#include <Eigen/Dense>

#include "wishart/errors.hpp"
#include "wishart/pfaffian.hpp"

namespace {

Eigen::MatrixXd random_antisymmetric(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      A(i, j) = normal(rng);
      A(j, i) = -A(i, j);
    }
  }
  return A;
}

}  // namespace

TEST_CASE("pfaffian squared equals determinant") {
  std::mt19937_64 rng(99);
  for (int n = 2; n <= 12; n += 2) {
    for (int t = 0; t < 10; ++t) {
      const Eigen::MatrixXd A = random_antisymmetric(n, rng);
      const double pf = wishart::pfaffian(A);
      CHECK(pf * pf == doctest::Approx(A.determinant()).epsilon(1e-11));
    }
  }
}

TEST_CASE("small cases match the explicit formulas") {
  Eigen::Matrix2d B;
  B << 0, 2.5, -2.5, 0;
  CHECK(wishart::pfaffian(B) == 2.5);

  std::mt19937_64 rng(5);
  const Eigen::MatrixXd A = random_antisymmetric(4, rng);
  const double expansion = A(0, 1) * A(2, 3) - A(0, 2) * A(1, 3) + A(0, 3) * A(1, 2);
  CHECK(wishart::pfaffian(A) == doctest::Approx(expansion).epsilon(1e-14));
}

TEST_CASE("odd dimension, singular input and validation") {
  std::mt19937_64 rng(17);
  CHECK(wishart::pfaffian(random_antisymmetric(5, rng)) == 0.0);
  CHECK(wishart::pfaffian(Eigen::MatrixXd::Zero(4, 4)) == 0.0);
  Eigen::MatrixXd A = random_antisymmetric(4, rng);
  A(0, 1) += 1.0;
  CHECK(wishart::antisymmetry_defect(A) > 0.1);
  CHECK_THROWS_AS(wishart::pfaffian(A), wishart::NotAntisymmetric);
}

TEST_CASE("swapping two index pairs flips the sign") {
  std::mt19937_64 rng(23);
  const Eigen::MatrixXd A = random_antisymmetric(6, rng);
  Eigen::PermutationMatrix<Eigen::Dynamic> P(6);
  P.setIdentity();
  P.applyTranspositionOnTheRight(0, 3);
  const Eigen::MatrixXd B = P.transpose() * A * P;
  CHECK(wishart::pfaffian(B) == doctest::Approx(-wishart::pfaffian(A)).epsilon(1e-12));
}
