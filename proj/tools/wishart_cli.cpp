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


// Command-line front end: expected-number, density, verify and sample.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wishart/ensemble.hpp"
#include "wishart/ensemble_mc.hpp"
#include "wishart/errors.hpp"
#include "wishart/limits.hpp"
#include "wishart/sop_kernel.hpp"
#include "wishart/verify.hpp"

namespace {

using nlohmann::json;
using namespace wishart;

constexpr int kExitConfig = 2;
constexpr int kExitPrecision = 3;
constexpr int kExitVerify = 4;
constexpr int kKernelMaxN = 40;

struct Options {
  int n = 16;
  double nu = 0.0;
  double tau = 0.5;
  std::string regime = "strong";
  double alpha = 1.0;
  std::optional<double> rho;
  int grid = 201;
  int trials = 0;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::string out;
  std::vector<std::string> tol;
  std::vector<std::string> only;
  bool json = false;
};

std::string num(double v) {
  if (!std::isfinite(v)) {
    return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  }
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

json jnum(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

void add_param_flags(CLI::App* cmd, Options& o, bool with_tau_default) {
  cmd->add_option("--n", o.n, "Matrix size N (even)")->capture_default_str();
  cmd->add_option("--nu", o.nu, "Rectangularity nu")->capture_default_str();
  auto* tau = cmd->add_option("--tau", o.tau, "Non-Hermiticity tau (strong regime)");
  if (with_tau_default) {
    tau->capture_default_str();
  }
  cmd->add_option("--regime", o.regime, "strong or weak")
      ->check(CLI::IsMember({"strong", "weak"}))
      ->capture_default_str();
  cmd->add_option("--alpha", o.alpha, "Weak-regime alpha, tau = 1 - alpha^2/(2N)")->capture_default_str();
  cmd->add_option("--rho", o.rho, "Sets nu = rho * N");
  cmd->add_option("--seed", o.seed, "Monte Carlo seed")->capture_default_str();
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  cmd->add_option("--out", o.out, "Output file (default stdout)");
}

EnsembleParams make_params(const Options& o, const CLI::App* cmd, bool allow_tau_one) {
  const double nu = o.rho ? *o.rho * o.n : o.nu;
  if (o.rho && cmd->count("--nu") > 0) {
    throw ConfigError("--rho and --nu are mutually exclusive");
  }
  EnsembleParams p;
  p.N = o.n;
  p.nu = nu;
  if (o.regime == "weak") {
    if (cmd->count("--tau") > 0) {
      throw ConfigError("--tau is derived from --alpha in the weak regime");
    }
    p.regime = Regime::Weak;
    p.alpha = o.alpha;
    p.tau = 1.0 - o.alpha * o.alpha / (2.0 * o.n);
  } else {
    p.tau = o.tau;
  }
  p.validate(allow_tau_one);
  return p;
}

json params_json(const EnsembleParams& p) {
  json j = {{"N", p.N}, {"nu", p.nu}, {"tau", p.tau}, {"regime", p.regime == Regime::Weak ? "weak" : "strong"}};
  if (p.regime == Regime::Weak) {
    j["alpha"] = p.alpha;
  }
  return j;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) {
        throw ConfigError("cannot open output file: " + path);
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

double limit_density(const EnsembleParams& p, double x) {
  if (p.regime == Regime::Weak) {
    return rho_weak(p.alpha, p.rho(), x);
  }
  return rho_strong(p.tau, p.rho(), x);
}

std::vector<double> limit_grid(const EnsembleParams& p, int n) {
  if (p.regime == Regime::Weak) {
    return weak_grid(p.rho(), n);
  }
  return strong_grid(p.tau, p.rho(), n);
}

std::pair<double, double> limit_support(const EnsembleParams& p) {
  const auto g = droplet(p.regime == Regime::Weak ? 1.0 : p.tau, p.rho());
  if (p.regime == Regime::Weak) {
    return {g.lambda_minus, g.lambda_plus};
  }
  return {g.xi_minus, g.xi_plus};
}

double asymptotic_count(const EnsembleParams& p) {
  if (p.regime == Regime::Weak) {
    return expected_number_asymptotic_weak(p.N, p.alpha);
  }
  return expected_number_asymptotic(p.N, p.nu, p.tau);
}

int cmd_expected_number(const Options& o, const CLI::App* cmd) {
  const auto p = make_params(o, cmd, false);
  std::optional<KernelEval> kernel;
  if (p.N <= kKernelMaxN) {
    kernel = expected_number(SOPCache(p));
  }
  std::optional<std::pair<double, double>> mc;
  if (o.trials > 0) {
    mc = mean_count(run_trials(p, o.trials, o.seed));
  }
  const double asym = asymptotic_count(p);
  Output out(o.out);
  auto& os = out.stream();
  if (o.format == "json") {
    json j = {{"schema", "wishart.expected-number/v1"}, {"params", params_json(p)}};
    j["kernel"] = kernel ? json{{"value", kernel->value}, {"abs_err", kernel->abs_err_estimate}} : json(nullptr);
    j["monte_carlo"] = mc ? json{{"mean", mc->first}, {"stderr", mc->second}, {"trials", o.trials}, {"seed", o.seed}}
                          : json(nullptr);
    j["asymptotic"] = jnum(asym);
    os << j.dump(2) << "\n";
  } else {
    os << "n,nu,tau,kernel,kernel_err,mc_mean,mc_stderr,asymptotic\n";
    os << p.N << "," << num(p.nu) << "," << num(p.tau) << ",";
    os << (kernel ? num(kernel->value) + "," + num(kernel->abs_err_estimate) : std::string(","));
    os << ",";
    os << (mc ? num(mc->first) + "," + num(mc->second) : std::string(","));
    os << "," << num(asym) << "\n";
  }
  return 0;
}

int cmd_density(const Options& o, const CLI::App* cmd) {
  const auto p = make_params(o, cmd, false);
  if (o.grid < 2) {
    throw ConfigError("--grid must be at least 2");
  }
  const auto xs = limit_grid(p, o.grid);
  std::vector<std::optional<double>> kernel(xs.size());
  if (p.N <= kKernelMaxN) {
    const SOPCache cache(p);
    const double E = expected_number(cache).value;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      kernel[i] = r_one_point(cache, xs[i]).value / E;
    }
  }
  std::vector<std::optional<double>> mc(xs.size());
  if (o.trials > 0) {
    const auto batch = run_trials(p, o.trials, o.seed);
    if (!batch.pooled_reals.empty()) {
      const auto [lo, hi] = limit_support(p);
      const auto [mn, mx] = std::minmax_element(batch.pooled_reals.begin(), batch.pooled_reals.end());
      const auto h = histogram_density(batch, default_bins(batch.pooled_reals.size()), std::min(lo, *mn),
                                        std::max(hi, *mx));
      for (std::size_t i = 0; i < xs.size(); ++i) {
        double v = 0.0;
        for (std::size_t k = 0; k + 1 < h.edges.size(); ++k) {
          const bool last = k + 2 == h.edges.size();
          if (xs[i] >= h.edges[k] && (xs[i] < h.edges[k + 1] || (last && xs[i] == h.edges[k + 1]))) {
            v = h.masses[k] / (h.edges[k + 1] - h.edges[k]);
          }
        }
        mc[i] = v;
      }
    }
  }
  Output out(o.out);
  auto& os = out.stream();
  if (o.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      rows.push_back({{"x", xs[i]},
                      {"kernel", kernel[i] ? jnum(*kernel[i]) : json(nullptr)},
                      {"limit", jnum(limit_density(p, xs[i]))},
                      {"mc", mc[i] ? jnum(*mc[i]) : json(nullptr)}});
    }
    json j = {{"schema", "wishart.density/v1"},
              {"params", params_json(p)},
              {"columns", {"x", "kernel", "limit", "mc"}},
              {"rows", rows}};
    if (o.trials > 0) {
      j["trials"] = o.trials;
      j["seed"] = o.seed;
    }
    os << j.dump(2) << "\n";
  } else {
    os << "x,kernel,limit,mc\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      os << num(xs[i]) << "," << (kernel[i] ? num(*kernel[i]) : "") << "," << num(limit_density(p, xs[i])) << ","
         << (mc[i] ? num(*mc[i]) : "") << "\n";
    }
  }
  return 0;
}

verify::Tolerances parse_tolerances(const std::vector<std::string>& items) {
  verify::Tolerances t;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ConfigError("--tol expects check.label=value, got " + item);
    }
    double v = 0.0;
    const char* first = item.data() + eq + 1;
    const char* last = item.data() + item.size();
    const auto r = std::from_chars(first, last, v);
    if (r.ec != std::errc() || r.ptr != last) {
      throw ConfigError("--tol value is not a number: " + item);
    }
    t[item.substr(0, eq)] = v;
  }
  return t;
}

int cmd_verify(const Options& o) {
  const auto tol = parse_tolerances(o.tol);
  std::vector<std::string> names = o.only.empty() ? verify::check_names() : o.only;
  for (const auto& n : names) {
    const auto& all = verify::check_names();
    if (std::find(all.begin(), all.end(), n) == all.end()) {
      throw ConfigError("unknown check for --only: " + n);
    }
  }
  std::vector<verify::CheckResult> results;
  for (const auto& n : names) {
    results.push_back(verify::run(n, tol));
  }
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed();
  }
  Output out(o.out);
  auto& os = out.stream();
  if (o.json || o.format == "json") {
    json checks = json::array();
    for (const auto& r : results) {
      json parts = json::array();
      for (const auto& s : r.parts) {
        parts.push_back(
            {{"label", s.label}, {"residual", jnum(s.residual)}, {"tolerance", s.tolerance}, {"passed", s.passed}});
      }
      json c = {{"name", r.name}, {"passed", r.passed()}, {"max_residual", jnum(r.max_residual())}, {"parts", parts}};
      if (!r.error.empty()) {
        c["error"] = r.error;
      }
      checks.push_back(c);
    }
    os << json{{"schema", "wishart.verify/v1"}, {"passed", ok}, {"checks", checks}}.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      os << (r.passed() ? "PASS " : "FAIL ") << r.name << "  max_residual=" << num(r.max_residual()) << "\n";
      for (const auto& s : r.parts) {
        os << "     " << (s.passed ? "ok   " : "fail ") << s.label << " residual=" << num(s.residual)
           << " tol=" << num(s.tolerance) << "\n";
      }
      if (!r.error.empty()) {
        os << "     error: " << r.error << "\n";
      }
    }
    os << (ok ? "all checks passed" : "some checks failed") << "\n";
  }
  return ok ? 0 : kExitVerify;
}

int cmd_sample(const Options& o, const CLI::App* cmd) {
  const auto p = make_params(o, cmd, true);
  const int trials = o.trials > 0 ? o.trials : 1;
  const auto eig = sample_eigenvalues(p, trials, o.seed);
  Output out(o.out);
  auto& os = out.stream();
  if (o.format == "json") {
    json rows = json::array();
    json reals = json::array();
    for (const auto& e : eig) {
      rows.push_back({{"re", e.re}, {"im", e.im}, {"trial", e.trial}});
      if (e.im == 0.0) {
        reals.push_back(e.re);
      }
    }
    os << json{{"schema", "wishart.sample/v1"}, {"params", params_json(p)}, {"trials", trials},
               {"seed", o.seed},          {"eigenvalues", rows},          {"reals", reals}}
              .dump(2)
       << "\n";
  } else {
    os << "re,im,trial\n";
    for (const auto& e : eig) {
      os << num(e.re) << "," << num(e.im) << "," << e.trial << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real eigenvalues of asymmetric Wishart matrices"};
  app.require_subcommand(1);
  Options o;

  auto* en = app.add_subcommand("expected-number", "Expected number of real eigenvalues");
  add_param_flags(en, o, true);
  en->add_option("--trials", o.trials, "Monte Carlo trials (0 disables)")->capture_default_str();

  auto* de = app.add_subcommand("density", "Density of real eigenvalues on a grid");
  add_param_flags(de, o, true);
  de->add_option("--grid", o.grid, "Number of grid points")->capture_default_str();
  de->add_option("--trials", o.trials, "Monte Carlo trials for the histogram column (0 disables)")
      ->capture_default_str();

  auto* ve = app.add_subcommand("verify", "Run the identity checks");
  ve->add_option("--only", o.only, "Comma-separated check names")->delimiter(',');
  ve->add_option("--tol", o.tol, "Tolerance override check.label=value (repeatable)");
  ve->add_flag("--json", o.json, "Emit JSON");
  ve->add_option("--format", o.format, "csv (plain table) or json")->check(CLI::IsMember({"csv", "json"}));
  ve->add_option("--out", o.out, "Output file (default stdout)");

  auto* sa = app.add_subcommand("sample", "Eigenvalues of sampled matrices");
  add_param_flags(sa, o, true);
  sa->add_option("--trials", o.trials, "Number of matrices")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*en) return cmd_expected_number(o, en);
    if (*de) return cmd_density(o, de);
    if (*ve) return cmd_verify(o);
    if (*sa) return cmd_sample(o, sa);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const PrecisionLoss& e) {
    std::cerr << "precision loss: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
