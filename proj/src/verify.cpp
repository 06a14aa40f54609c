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


#include "wishart/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "wishart/complex_kernel.hpp"
#include "wishart/decomposition.hpp"
#include "wishart/limits.hpp"
#include "wishart/pfaffian.hpp"
#include "wishart/quad.hpp"
#include "wishart/sop_kernel.hpp"
#include "wishart/specfun.hpp"

namespace wishart::verify {

namespace {

constexpr double kGrid[5] = {-1.5, -0.4, 0.6, 2.0, 5.0};
constexpr int kSweepN[4] = {4, 6, 8, 10};
constexpr double kSweepNu[4] = {0.0, 1.0, 2.0, 3.0};
constexpr double kSweepTau[3] = {0.2, 0.5, 0.8};

class Builder {
 public:
  Builder(std::string name, const Tolerances& tol) : tol_(tol) { result_.name = std::move(name); }

  double tol(const std::string& label, double fallback) const {
    const auto it = tol_.find(result_.name + "." + label);
    return it == tol_.end() ? fallback : it->second;
  }

  // residual <= tolerance
  void at_most(const std::string& label, double residual, double fallback) {
    const double t = tol(label, fallback);
    result_.parts.push_back({label, residual, t, residual <= t});
  }

  // residual < tolerance, for strict positivity checks phrased as -min < 0
  void below(const std::string& label, double residual, double fallback) {
    const double t = tol(label, fallback);
    result_.parts.push_back({label, residual, t, residual < t});
  }

  CheckResult finish() { return result_; }

  template <typename Body>
  CheckResult guarded(Body&& body) {
    try {
      body(*this);
    } catch (const std::exception& e) {
      result_.error = e.what();
    }
    return result_;
  }

 private:
  const Tolerances& tol_;
  CheckResult result_;
};

// a NaN residual must fail every comparison
double worse(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return std::max(a, b);
}

}  // namespace

bool CheckResult::passed() const {
  if (!error.empty() || parts.empty()) {
    return false;
  }
  return std::all_of(parts.begin(), parts.end(), [](const SubCheck& s) { return s.passed; });
}

double CheckResult::max_residual() const {
  double m = 0.0;
  for (const auto& s : parts) {
    m = worse(m, s.residual);
  }
  return m;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "decomposition", "cd",    "skew", "pfaffian", "c_strong", "c_weak",
      "mass",          "split", "incbeta", "omega", "pr",       "tau0"};
  return names;
}

CheckResult decomposition(const Tolerances& tol) {
  return Builder("decomposition", tol).guarded([](Builder& b) {
    double worst = 0.0;
    for (int N : kSweepN) {
      for (double nu : kSweepNu) {
        for (double tau : kSweepTau) {
          const SOPCache cache(EnsembleParams::strong(N, nu, tau));
          for (double x : kGrid) {
            for (double y : kGrid) {
              worst = worse(worst, verify_decomposition(cache, x, y));
            }
          }
        }
      }
    }
    b.at_most("relative", worst, 1e-6);
  });
}

CheckResult christoffel_darboux(const Tolerances& tol) {
  return Builder("cd", tol).guarded([](Builder& b) {
    std::mt19937_64 rng(20260219);
    std::uniform_int_distribution<int> half_n(1, 10);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double off = 0.0;
    double diag = 0.0;
    for (int t = 0; t < 50; ++t) {
      const int N = 2 * half_n(rng);
      const double nu = 4.0 * unit(rng);
      const double tau = 0.1 + 0.8 * unit(rng);
      const double z = N * (-0.5 + 3.5 * unit(rng));
      const double w = N * (-0.5 + 3.5 * unit(rng));
      const auto p = EnsembleParams::strong(N, nu, tau);
      off = worse(off, cd_offdiag_residual(p, z, w));
      diag = worse(diag, cd_diag_residual(p, z));
    }
    b.at_most("offdiag", off, 1e-9);
    b.at_most("diag", diag, 1e-9);
  });
}

CheckResult skew_orthogonality(const Tolerances& tol) {
  return Builder("skew", tol).guarded([](Builder& b) {
    double norm = 0.0;
    double parity = 0.0;
    for (double nu : {0.0, 2.0}) {
      for (double tau : {0.3, 0.7}) {
        const SOPCache cache(EnsembleParams::strong(8, nu, tau));
        const Eigen::MatrixXd G = real_skew_gram(cache, 8);
        const auto& r = cache.r_values();
        for (int i = 0; i < 8; ++i) {
          for (int k = 0; k < 8; ++k) {
            const double scale = std::sqrt(r[i / 2] * r[k / 2]);
            if (i % 2 == k % 2) {
              parity = worse(parity, std::abs(G(i, k)) / scale);
            } else if (i % 2 == 0) {
              const double target = i / 2 == k / 2 ? r[i / 2] : 0.0;
              norm = worse(norm, std::abs(G(i, k) - target) / scale);
            }
          }
        }
      }
    }
    b.at_most("normalization", norm, 1e-6);
    b.at_most("same_parity", parity, 1e-6);
  });
}

CheckResult pfaffian(const Tolerances& tol) {
  return Builder("pfaffian", tol).guarded([](Builder& b) {
    std::mt19937_64 rng(424242);
    std::normal_distribution<double> normal;
    double sq = 0.0;
    for (int t = 0; t < 100; ++t) {
      const int dim = 2 + 2 * (t % 5);
      Eigen::MatrixXd A = Eigen::MatrixXd::Zero(dim, dim);
      for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
          A(i, j) = normal(rng);
          A(j, i) = -A(i, j);
        }
      }
      const double pf = wishart::pfaffian(A);
      const double det = A.determinant();
      sq = worse(sq, std::abs(pf * pf - det) / std::abs(det));
    }
    double match = 0.0;
    for (int t = 0; t < 20; ++t) {
      Eigen::Matrix4d A = Eigen::Matrix4d::Zero();
      for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
          A(i, j) = normal(rng);
          A(j, i) = -A(i, j);
        }
      }
      const double expansion = A(0, 1) * A(2, 3) - A(0, 2) * A(1, 3) + A(0, 3) * A(1, 2);
      match = worse(match, std::abs(wishart::pfaffian(A) - expansion) / std::max(1.0, std::abs(expansion)));
    }
    b.at_most("pf2_det", sq, 1e-10);
    b.at_most("matchings", match, 1e-10);
  });
}

CheckResult c_strong(const Tolerances& tol) {
  return Builder("c_strong", tol).guarded([](Builder& b) {
    double four = 0.0;
    for (double tau : {0.0, 0.3, 0.5, 0.6, 0.9}) {
      four = worse(four, std::abs(wishart::c_strong(tau, 0.0) - 4.0));
    }
    double cross = 0.0;
    for (double tau : {0.3, 0.6}) {
      for (double rho : {0.5, 1.0, 2.0}) {
        const double q = wishart::c_strong(tau, rho);
        cross = worse(cross, std::abs(q - c_strong_hyp(tau, rho)) / q);
      }
    }
    b.at_most("rho0_equals_4", four, 1e-10);
    b.at_most("quad_vs_hyp", cross, 1e-8);
  });
}

CheckResult c_weak(const Tolerances& tol) {
  return Builder("c_weak", tol).guarded([](Builder& b) {
    double series = 0.0;
    double integral = 0.0;
    double spread = 0.0;
    for (double alpha : {0.1, 1.0, 3.0}) {
      const double ref = wishart::c_weak(alpha);
      series = worse(series, std::abs(c_weak_series(alpha) - ref) / ref);
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      for (double rho : {0.0, 1.0, 3.0}) {
        const double v = c_weak_integral(alpha, rho);
        integral = worse(integral, std::abs(v - ref) / ref);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      spread = worse(spread, (hi - lo) / ref);
    }
    b.at_most("bessel_vs_series", series, 1e-8);
    b.at_most("bessel_vs_integral", integral, 1e-8);
    b.at_most("rho_spread", spread, 1e-8);
  });
}

CheckResult mass_one(const Tolerances& tol) {
  return Builder("mass", tol).guarded([](Builder& b) {
    const quad::Tolerance qt{0.0, 1e-12};
    double strong = 0.0;
    for (double tau : {0.3, 0.6}) {
      for (double rho : {0.0, 0.5, 1.0, 2.0}) {
        const auto g = droplet(tau, rho);
        std::vector<double> sing;
        if (rho == 0.0) {
          sing.push_back(0.0);
        }
        auto f = [tau, rho](double x) { return rho_strong(tau, rho, x); };
        const double m = quad::integrate_finite<double>(f, g.xi_minus, g.xi_plus, sing, qt).value;
        strong = worse(strong, std::abs(m - 1.0));
      }
    }
    double weak = 0.0;
    for (double alpha : {0.1, 1.0, 3.0}) {
      for (double rho : {0.0, 1.0, 3.0}) {
        const auto g = droplet(1.0, rho);
        auto f = [alpha, rho](double x) { return rho_weak(alpha, rho, x); };
        const double m =
            quad::integrate_finite<double>(f, g.lambda_minus, g.lambda_plus, {g.lambda_minus, g.lambda_plus}, qt)
                .value;
        weak = worse(weak, std::abs(m - 1.0));
      }
    }
    double mp = 0.0;
    double sqrt_law = 0.0;
    for (double rho : {0.0, 1.0}) {
      const auto g = droplet(1.0, rho);
      for (int k = 1; k <= 10; ++k) {
        const double x = g.lambda_minus + (g.lambda_plus - g.lambda_minus) * (k / 11.0);
        const double ref = rho_mp(rho, x);
        mp = worse(mp, std::abs(rho_weak(0.01, rho, x) - ref) / ref);
      }
    }
    {
      const auto g = droplet(1.0, 0.0);
      for (int k = 1; k <= 10; ++k) {
        const double x = g.lambda_minus + (g.lambda_plus - g.lambda_minus) * (k / 11.0);
        const double ref = 0.25 / std::sqrt(x);
        sqrt_law = worse(sqrt_law, std::abs(rho_weak(50.0, 0.0, x) - ref) / ref);
      }
    }
    b.at_most("strong", strong, 1e-8);
    b.at_most("weak", weak, 1e-8);
    b.at_most("alpha_to_0_mp", mp, 0.01);
    b.at_most("alpha_to_inf", sqrt_law, 0.02);
  });
}

CheckResult one_point_split(const Tolerances& tol) {
  return Builder("split", tol).guarded([](Builder& b) {
    double worst = 0.0;
    for (int N : kSweepN) {
      for (double nu : kSweepNu) {
        for (double tau : kSweepTau) {
          const auto p = EnsembleParams::strong(N, nu, tau);
          const SOPCache cache(p);
          for (double x : kGrid) {
            const double r = r_one_point(cache, x).value;
            worst = worse(worst, std::abs(r_hat_1(p, x) + r_n2(p, x) - r) / std::abs(r));
          }
        }
      }
    }
    b.at_most("relative", worst, 1e-6);
  });
}

CheckResult incomplete_beta(const Tolerances& tol) {
  return Builder("incbeta", tol).guarded([](Builder& b) {
    double worst = 0.0;
    for (int N : {10, 20}) {
      for (double nu : {5.0, 20.0}) {
        for (double tau : {0.3, 0.7}) {
          worst = worse(worst, rc_zero_identity_residual(EnsembleParams::strong(N, nu, tau)));
        }
      }
    }
    b.at_most("residual", worst, 1e-10);
  });
}

CheckResult omega(const Tolerances& tol) {
  return Builder("omega", tol).guarded([](Builder& b) {
    double edge = 0.0;
    double neg_min = -std::numeric_limits<double>::infinity();
    double rate = 0.0;
    bool first = true;
    for (double tau : {0.3, 0.5}) {
      for (double rho : {0.0, 1.0}) {
        const auto g = droplet(tau, rho);
        edge = worse(edge, std::abs(omega_rho(tau, rho, g.xi_plus)));
        edge = worse(edge, std::abs(omega_rho(tau, rho, g.xi_minus)));
        double mn = std::numeric_limits<double>::infinity();
        const double a = g.xi_minus - 2.0;
        const double span = g.xi_plus - g.xi_minus + 4.0;
        for (int k = 0; k < 200; ++k) {
          const double x = a + span * k / 199.0;
          if (std::abs(x - g.xi_plus) > 1e-6 && std::abs(x - g.xi_minus) > 1e-6) {
            mn = std::min(mn, omega_rho(tau, rho, x));
          }
        }
        neg_min = first ? -mn : worse(neg_min, -mn);
        first = false;
        for (double p : {g.xi_minus, g.xi_plus}) {
          const double ratio =
              edge_expansion_residual(tau, rho, p, 1.0, 100) / edge_expansion_residual(tau, rho, p, 1.0, 400);
          rate = worse(rate, std::abs(ratio - 2.0) / 2.0);
        }
      }
    }
    b.at_most("edge_zero", edge, 1e-10);
    b.below("negated_off_edge_min", neg_min, 0.0);
    b.at_most("edge_rate", rate, 0.3);
  });
}

CheckResult plancherel_rotach(const Tolerances& tol) {
  return Builder("pr", tol).guarded([](Builder& b) {
    const double tau = 0.5;
    double prop = 0.0;
    double fixed = 0.0;
    for (int N : {30, 60, 120}) {
      for (double z : {droplet(tau, 1.0).xi_plus + 1.0, droplet(tau, 1.0).xi_minus - 1.0}) {
        const auto ex = laguerre(N, N * 1.0, N * z / tau);
        const auto ap = laguerre_pr_exponential(N, tau, ProportionalRho{1.0}, 0, 0, z);
        const double err = ex.sign == ap.sign ? std::abs(std::expm1(ap.logmag - ex.logmag)) : 2.0;
        prop = worse(prop, err * N);
      }
      for (double nu : {0.0, 2.0}) {
        const double z = droplet(tau, 0.0).xi_plus + 1.0;
        const auto ex = laguerre(N, nu, N * z / tau);
        const auto ap = laguerre_pr_exponential(N, tau, FixedNu{nu}, 0, 0, z);
        const double err = ex.sign == ap.sign ? std::abs(std::expm1(ap.logmag - ex.logmag)) : 2.0;
        fixed = worse(fixed, err * N);
      }
    }
    b.at_most("proportional_err_times_N", prop, 10.0);
    b.at_most("fixed_err_times_N", fixed, 10.0);
  });
}

CheckResult tau_zero(const Tolerances& tol) {
  return Builder("tau0", tol).guarded([](Builder& b) {
    double worst = 0.0;
    for (int N : {4, 8}) {
      for (double nu : {0.0, 2.0}) {
        const auto p = EnsembleParams::strong(N, nu, 0.0);
        const SOPCache cache(p);
        for (double x : {-1.0, -0.5, 0.5, 1.0}) {
          const double k = r_one_point_unscaled(cache, x).value;
          worst = worse(worst, std::abs(tau0_one_point(p, x) - k) / std::abs(k));
        }
      }
    }
    b.at_most("relative", worst, 1e-6);
  });
}

CheckResult run(const std::string& name, const Tolerances& tol) {
  static const std::map<std::string, std::function<CheckResult(const Tolerances&)>> table = {
      {"decomposition", decomposition},
      {"cd", christoffel_darboux},
      {"skew", skew_orthogonality},
      {"pfaffian", verify::pfaffian},
      {"c_strong", verify::c_strong},
      {"c_weak", verify::c_weak},
      {"mass", mass_one},
      {"split", one_point_split},
      {"incbeta", incomplete_beta},
      {"omega", omega},
      {"pr", plancherel_rotach},
      {"tau0", tau_zero},
  };
  const auto it = table.find(name);
  if (it == table.end()) {
    throw std::invalid_argument("unknown check: " + name);
  }
  return it->second(tol);
}

}  // namespace wishart::verify
