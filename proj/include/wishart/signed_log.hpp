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

#ifndef WISHART_SIGNED_LOG_HPP
#define WISHART_SIGNED_LOG_HPP

#include <cmath>
#include <limits>
#include <utility>

namespace wishart {

/**
 * A real number stored as a sign in {-1, 0, +1} and the natural log of its
 * magnitude. The log magnitude is ignored when the sign is zero.
 */
template <typename Scalar = double>
struct SignedLog {
  int sign = 0;
  Scalar logmag = -std::numeric_limits<Scalar>::infinity();

  SignedLog() = default;
  SignedLog(int s, Scalar lm) : sign(s), logmag(s == 0 ? -std::numeric_limits<Scalar>::infinity() : lm) {}

  static SignedLog from_value(Scalar v) {
    if (v == Scalar(0)) {
      return SignedLog();
    }
    return SignedLog(v > 0 ? 1 : -1, std::log(std::abs(v)));
  }

  static SignedLog from_log(int s, Scalar lm) { return SignedLog(s, lm); }

  static SignedLog zero() { return SignedLog(); }
  static SignedLog one() { return SignedLog(1, Scalar(0)); }

  Scalar value() const {
    if (sign == 0) {
      return Scalar(0);
    }
    return Scalar(sign) * std::exp(logmag);
  }

  bool is_zero() const { return sign == 0; }

  SignedLog operator-() const { return SignedLog(-sign, logmag); }

  SignedLog& operator*=(const SignedLog& o) {
    sign *= o.sign;
    logmag = sign == 0 ? -std::numeric_limits<Scalar>::infinity() : logmag + o.logmag;
    return *this;
  }

  SignedLog& operator/=(const SignedLog& o) {
    sign *= o.sign;
    logmag = sign == 0 ? -std::numeric_limits<Scalar>::infinity() : logmag - o.logmag;
    return *this;
  }

  // Max-factoring: the larger magnitude is pulled out and the smaller one
  // enters through log1p, so the result is exact up to one rounding of the
  // smaller term.
  SignedLog& operator+=(const SignedLog& o) {
    if (o.sign == 0) {
      return *this;
    }
    if (sign == 0) {
      *this = o;
      return *this;
    }
    const SignedLog* big = this;
    const SignedLog* small = &o;
    if (o.logmag > logmag) {
      std::swap(big, small);
    }
    const Scalar ratio = std::exp(small->logmag - big->logmag);
    const int s = big->sign;
    const Scalar lm = big->logmag;
    if (small->sign == s) {
      *this = SignedLog(s, lm + std::log1p(ratio));
    } else if (ratio == Scalar(1)) {
      *this = SignedLog();
    } else {
      *this = SignedLog(s, lm + std::log1p(-ratio));
    }
    return *this;
  }

  SignedLog& operator-=(const SignedLog& o) { return *this += -o; }

  friend SignedLog operator*(SignedLog a, const SignedLog& b) { return a *= b; }
  friend SignedLog operator/(SignedLog a, const SignedLog& b) { return a /= b; }
  friend SignedLog operator+(SignedLog a, const SignedLog& b) { return a += b; }
  friend SignedLog operator-(SignedLog a, const SignedLog& b) { return a -= b; }

  friend bool operator==(const SignedLog& a, const SignedLog& b) {
    return a.sign == b.sign && (a.sign == 0 || a.logmag == b.logmag);
  }
};

using SignedLogd = SignedLog<double>;

/**
 * Neumaier-compensated accumulator that also tracks the largest absolute
 * summand, which callers use to bound cancellation.
 */
template <typename Scalar = double>
class CompensatedSum {
 public:
  void add(Scalar v) {
    const Scalar t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
    max_abs_ = std::max(max_abs_, std::abs(v));
    ++count_;
  }

  Scalar value() const { return sum_ + comp_; }
  Scalar max_abs() const { return max_abs_; }
  int count() const { return count_; }

 private:
  Scalar sum_ = 0;
  Scalar comp_ = 0;
  Scalar max_abs_ = 0;
  int count_ = 0;
};

/**
 * Sums SignedLog terms by factoring out the largest magnitude. The result
 * carries a roundoff bound proportional to the largest term.
 */
template <typename Scalar = double>
struct LogSumResult {
  SignedLog<Scalar> value;
  // log of (max |term|), used by callers for cancellation bounds
  Scalar log_max_term = -std::numeric_limits<Scalar>::infinity();
  int terms = 0;
};

template <typename Range>
auto log_sum(const Range& terms) {
  using SL = std::decay_t<decltype(*std::begin(terms))>;
  using Scalar = decltype(SL().logmag);
  LogSumResult<Scalar> out;
  Scalar lmax = -std::numeric_limits<Scalar>::infinity();
  for (const auto& t : terms) {
    if (t.sign != 0 && t.logmag > lmax) {
      lmax = t.logmag;
    }
    ++out.terms;
  }
  out.log_max_term = lmax;
  if (!std::isfinite(lmax)) {
    return out;
  }
  CompensatedSum<Scalar> acc;
  for (const auto& t : terms) {
    if (t.sign != 0) {
      acc.add(Scalar(t.sign) * std::exp(t.logmag - lmax));
    }
  }
  const Scalar v = acc.value();
  if (v != Scalar(0)) {
    out.value = SignedLog<Scalar>(v > 0 ? 1 : -1, lmax + std::log(std::abs(v)));
  }
  return out;
}

}  // namespace wishart

#endif  // WISHART_SIGNED_LOG_HPP
