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


// Acceptance driver. With no argument every criterion runs and prints one
// line; with a criterion number only that one runs. The exit status is
// nonzero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "wishart/ensemble.hpp"
#include "wishart/ensemble_mc.hpp"
#include "wishart/limits.hpp"
#include "wishart/sop_kernel.hpp"
#include "wishart/verify.hpp"

using namespace wishart;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

Outcome from_check(const std::string& name) {
  const auto r = verify::run(name);
  Outcome o;
  o.passed = r.passed();
  if (!r.error.empty()) {
    o.detail = "error: " + r.error;
    return o;
  }
  for (const auto& p : r.parts) {
    if (!o.detail.empty()) {
      o.detail += "; ";
    }
    o.detail += p.label + fmt("=%.3g (tol %.3g)", p.residual, p.tolerance);
    if (!p.passed) {
      o.detail += " FAIL";
    }
  }
  return o;
}

// kernel vs Monte Carlo mean count at N = 16
Outcome kernel_vs_mc() {
  constexpr int kN = 16;
  constexpr int kTrials = 4000;
  constexpr double kSigmas = 3.0;
  const auto p = EnsembleParams::strong(kN, 0.0, 0.5);
  const double exact = expected_number(SOPCache(p)).value;
  const auto [mean, se] = mean_count(run_trials(p, kTrials, 7));
  Outcome o;
  o.passed = std::abs(mean - exact) <= kSigmas * se;
  o.detail = fmt("kernel=%.6f mc=%.4f stderr=%.4f z=%.2f", exact, mean, se, (mean - exact) / se);
  return o;
}

// finite-N trend towards the leading-order counts at N = 256
Outcome count_trends() {
  constexpr int kN = 256;
  constexpr int kTrials = 200;
  constexpr double kRel = 0.10;
  const double strong_target = std::sqrt(4.0 / (std::numbers::pi * 0.75));
  const double weak_target = c_weak(1.0);
  const double strong = mean_count(run_trials(EnsembleParams::strong(kN, 0.0, 0.5), kTrials, 11)).first /
                        std::sqrt(double(kN));
  const double weak = mean_count(run_trials(EnsembleParams::weak(kN, kN, 1.0), kTrials, 13)).first / kN;
  const double es = std::abs(strong / strong_target - 1.0);
  const double ew = std::abs(weak / weak_target - 1.0);
  Outcome o;
  o.passed = es <= kRel && ew <= kRel;
  o.detail = fmt("count/sqrtN=%.4f (target %.4f) count/N=%.4f (target %.4f)", strong, strong_target, weak,
                 weak_target);
  return o;
}

// histogram of pooled real eigenvalues against the limiting densities at N = 400
Outcome histograms() {
  constexpr int kN = 400;
  constexpr int kTrials = 20;
  constexpr double kMaxL1 = 0.15;
  struct Config {
    EnsembleParams params;
    std::function<double(double)> density;
    std::vector<double> singular;
    const char* label;
  };
  std::vector<Config> configs;
  for (double nu : {0.0, double(kN)}) {
    const double rho = nu / kN;
    const auto g = droplet(0.5, rho);
    std::vector<double> sing{g.xi_minus, g.xi_plus};
    if (rho == 0.0) {
      sing.push_back(0.0);
    }
    configs.push_back({EnsembleParams::strong(kN, nu, 0.5), [rho](double x) { return rho_strong(0.5, rho, x); },
                       sing, rho == 0.0 ? "strong nu=0" : "strong nu=N"});
    const auto w = droplet(1.0, rho);
    std::vector<double> wsing{w.lambda_minus, w.lambda_plus};
    configs.push_back({EnsembleParams::weak(kN, nu, 1.0), [rho](double x) { return rho_weak(1.0, rho, x); }, wsing,
                       rho == 0.0 ? "weak nu=0" : "weak nu=N"});
  }
  Outcome o;
  o.passed = true;
  std::uint64_t seed = 400;
  for (const auto& c : configs) {
    const auto batch = run_trials(c.params, kTrials, seed++);
    const auto g = c.params.regime == Regime::Strong ? droplet(0.5, c.params.rho())
                                                     : droplet(1.0, c.params.rho());
    const double lo = c.params.regime == Regime::Strong ? g.xi_minus : g.lambda_minus;
    const double hi = c.params.regime == Regime::Strong ? g.xi_plus : g.lambda_plus;
    const auto [mn, mx] = std::minmax_element(batch.pooled_reals.begin(), batch.pooled_reals.end());
    const auto h = histogram_density(batch, default_bins(batch.pooled_reals.size()), std::min(*mn, lo),
                                     std::max(*mx, hi));
    const double l1 = l1_distance(h, c.density, c.singular);
    o.passed = o.passed && l1 <= kMaxL1;
    if (!o.detail.empty()) {
      o.detail += "; ";
    }
    o.detail += std::string(c.label) + fmt(" L1=%.4f", l1);
  }
  return o;
}

Outcome run_criterion(int k) {
  static const char* const checks[] = {nullptr,  "decomposition", "cd",     "skew",   "pfaffian",
                                       "c_strong", "c_weak",      "mass",   "split",  nullptr,
                                       nullptr,  nullptr,         "incbeta", "omega", "pr",
                                       "tau0"};
  switch (k) {
    case 9:
      return kernel_vs_mc();
    case 10:
      return count_trends();
    case 11:
      return histograms();
    default:
      return from_check(checks[k]);
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  if (argc > 1) {
    const int k = std::atoi(argv[1]);
    if (k < 1 || k > 15) {
      std::fprintf(stderr, "usage: %s [criterion 1-15]\n", argv[0]);
      return 2;
    }
    selected.push_back(k);
  } else {
    for (int k = 1; k <= 15; ++k) {
      selected.push_back(k);
    }
  }
  bool all = true;
  for (int k : selected) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run_criterion(k);
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d: %s [%.1fs] %s\n", k, o.passed ? "PASS" : "FAIL", secs, o.detail.c_str());
    std::fflush(stdout);
    all = all && o.passed;
  }
  return all ? 0 : 1;
}
