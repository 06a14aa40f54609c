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

#ifndef WISHART_ERRORS_HPP
#define WISHART_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wishart {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative or adaptive method ran out of budget.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Double precision cannot certify the requested value.
class PrecisionLoss : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No tail truncation point was found for a semi-infinite integral.
class EnvelopeNotDecaying : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAntisymmetric : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EmptyBatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid ensemble or run configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace wishart

#endif  // WISHART_ERRORS_HPP
