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

#ifndef WISHART_QUAD_HPP
#define WISHART_QUAD_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "wishart/errors.hpp"

namespace wishart::quad {

/**
 * Per-component error target: a component is converged once its summed
 * error estimate is below max(abs, rel * integral of |f|).
 */
struct Tolerance {
  double abs = 0.0;
  double rel = 0.0;
};

template <typename Value>
struct BasicQuadResult {
  Value value;
  Value abs_err_estimate;
  int subdivisions = 0;
};

using QuadResult = BasicQuadResult<double>;
using VectorQuadResult = BasicQuadResult<Eigen::ArrayXd>;

/// A scalar integrand with optional tail envelope and declared singular points.
struct Integrand {
  std::function<double(double)> eval;
  std::function<double(double)> log_envelope;
  std::vector<double> singular_points;
};

enum class Direction { Plus, Minus };

inline constexpr int kDefaultMaxPanels = 2000;

namespace detail {

// 15-point Gauss and 31-point Kronrod abscissae/weights (QUADPACK dqk31).
inline constexpr double wg[8] = {
    0.030753241996117268354628393577204, 0.070366047488108124709267416450667,
    0.107159220467171935011869546685869, 0.139570677926154314447804794511028,
    0.166269205816993933553200860481209, 0.186161000015562211026800561866423,
    0.198431485327111576456118326443839, 0.202578241925561272880620199967519};
inline constexpr double xgk[16] = {
    0.998002298693397060285172840152271, 0.987992518020485428489565718586613,
    0.967739075679139134257347978784337, 0.937273392400705904307758947710209,
    0.897264532344081900882509656454496, 0.848206583410427216200648320774217,
    0.790418501442465932967649294817947, 0.724417731360170047416186054613938,
    0.650996741297416970533735895313275, 0.570972172608538847537226737253911,
    0.485081863640239680693655740232351, 0.394151347077563369897207370981045,
    0.299180007153168812166780024266389, 0.201194093997434522300628303394596,
    0.101142066918717499027074231447392, 0.0};
inline constexpr double wgk[16] = {
    0.005377479872923348987792051430128, 0.015007947329316122538374763075807,
    0.025460847326715320186874001019653, 0.03534636079137584622203794847836,
    0.04458975132476487660822729937328,  0.05348152469092808726534314723943,
    0.062009567800670640285139230960803, 0.069854121318728258709520077099147,
    0.076849680757720378894432777482659, 0.083080502823133021038289247286104,
    0.088564443056211770647275443693774, 0.093126598170825321225486872747346,
    0.096642726983623678505179907627589, 0.099173598721791959332393173484603,
    0.10076984552387559504494666261757,  0.101330007014791549017374792767493};

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

inline double zeros_like(double) { return 0.0; }
inline Eigen::ArrayXd zeros_like(const Eigen::ArrayXd& v) { return Eigen::ArrayXd::Zero(v.size()); }

inline double vabs(double v) { return std::abs(v); }
inline Eigen::ArrayXd vabs(const Eigen::ArrayXd& v) { return v.abs(); }

inline double vmax(double a, double b) { return std::max(a, b); }
inline Eigen::ArrayXd vmax(const Eigen::ArrayXd& a, const Eigen::ArrayXd& b) { return a.max(b); }

inline bool all_finite(double v) { return std::isfinite(v); }
inline bool all_finite(const Eigen::ArrayXd& v) { return v.allFinite(); }

inline double gk_error(double err, double resasc) {
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  return err;
}

inline Eigen::ArrayXd gk_error(const Eigen::ArrayXd& err, const Eigen::ArrayXd& resasc) {
  Eigen::ArrayXd out = err;
  for (Eigen::Index i = 0; i < err.size(); ++i) {
    out[i] = gk_error(err[i], resasc[i]);
  }
  return out;
}

// Largest ratio err_i / target_i with target_i = max(abs, rel * l1_i).
inline double badness(double err, double l1, const Tolerance& tol) {
  const double target = std::max({tol.abs, tol.rel * l1, std::numeric_limits<double>::min()});
  return err / target;
}

inline double badness(const Eigen::ArrayXd& err, const Eigen::ArrayXd& l1, const Tolerance& tol) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < err.size(); ++i) {
    worst = std::max(worst, badness(err[i], l1[i], tol));
  }
  return worst;
}

template <typename V>
struct Panel {
  double a = 0.0;
  double b = 0.0;
  bool sing_a = false;
  bool sing_b = false;
  V value{};
  V err_raw{};  // rule-based error estimate
  V floor{};    // roundoff floor of the panel
  V l1{};       // integral of |f| over the panel
};

template <typename V, typename F>
Panel<V> gauss_kronrod31(F& f, double a, double b) {
  const double centr = 0.5 * (a + b);
  const double hl = 0.5 * (b - a);
  const double dhl = std::abs(hl);
  const V fc = f(centr);
  V resg = fc * wg[7];
  V resk = fc * wgk[15];
  V resabs = vabs(resk);
  V fv1[15];
  V fv2[15];
  for (int j = 0; j < 7; ++j) {
    const int jtw = 2 * j + 1;
    const double absc = hl * xgk[jtw];
    const V f1 = f(centr - absc);
    const V f2 = f(centr + absc);
    fv1[jtw] = f1;
    fv2[jtw] = f2;
    resg += (f1 + f2) * wg[j];
    resk += (f1 + f2) * wgk[jtw];
    resabs += (vabs(f1) + vabs(f2)) * wgk[jtw];
  }
  for (int j = 0; j < 8; ++j) {
    const int jtwm1 = 2 * j;
    const double absc = hl * xgk[jtwm1];
    const V f1 = f(centr - absc);
    const V f2 = f(centr + absc);
    fv1[jtwm1] = f1;
    fv2[jtwm1] = f2;
    resk += (f1 + f2) * wgk[jtwm1];
    resabs += (vabs(f1) + vabs(f2)) * wgk[jtwm1];
  }
  const V reskh = resk * 0.5;
  V resasc = vabs(fc - reskh) * wgk[15];
  for (int j = 0; j < 15; ++j) {
    resasc += (vabs(fv1[j] - reskh) + vabs(fv2[j] - reskh)) * wgk[j];
  }
  Panel<V> p;
  p.a = a;
  p.b = b;
  p.value = resk * hl;
  p.l1 = resabs * dhl;
  p.err_raw = gk_error(V(vabs((resk - resg) * hl)), V(resasc * dhl));
  p.floor = p.l1 * (50.0 * kEps);
  return p;
}

/**
 * Tanh-sinh rule on [a, b]. Nodes are generated from their distance to the
 * nearest endpoint so points next to a singular endpoint are resolved
 * without cancellation; nodes that round onto an endpoint are dropped.
 */
template <typename V, typename F>
Panel<V> tanh_sinh(F& f, double a, double b, const Tolerance& tol, const V& proto) {
  constexpr double tmax = 4.5;
  constexpr int max_level = 7;
  const double hl = 0.5 * (b - a);
  const double c = 0.5 * (a + b);
  const double halfpi = 0.5 * std::numbers::pi;

  V sum = zeros_like(proto);
  V sum_abs = zeros_like(proto);
  auto add_node = [&](double t) {
    const double u = halfpi * std::sinh(t);
    const double ch = std::cosh(u);
    const double w = hl * halfpi * std::cosh(t) / (ch * ch);
    if (t == 0.0) {
      const V fv = f(c);
      sum += fv * w;
      sum_abs += vabs(fv) * w;
      return;
    }
    const double dist = 2.0 * hl / (1.0 + std::exp(2.0 * std::abs(u)));
    const double xl = a + dist;
    const double xr = b - dist;
    if (xl > a && xl < b) {
      const V fv = f(xl);
      sum += fv * w;
      sum_abs += vabs(fv) * w;
    }
    if (xr > a && xr < b) {
      const V fv = f(xr);
      sum += fv * w;
      sum_abs += vabs(fv) * w;
    }
  };

  // level 0: step 1
  for (int k = 0; k <= static_cast<int>(tmax); ++k) {
    add_node(static_cast<double>(k));
  }
  double h = 1.0;
  V prev = sum * h;
  V est = prev;
  V err = vabs(est);
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    for (double t = h; t <= tmax; t += 2.0 * h) {
      add_node(t);
    }
    est = sum * h;
    err = vabs(V(est - prev));
    prev = est;
    if (level >= 3 && badness(err, V(sum_abs * h), tol) <= 1e-2) {
      break;
    }
  }
  Panel<V> p;
  p.a = a;
  p.b = b;
  p.value = est;
  p.l1 = sum_abs * h;
  p.err_raw = err;
  p.floor = p.l1 * (10.0 * kEps);
  return p;
}

}  // namespace detail

/**
 * Globally adaptive integration over consecutive breakpoints. Panels that
 * touch a point flagged singular use tanh-sinh; all others use G15/K31.
 * The panel with the largest normalized error is bisected until every
 * component meets its target or the panel budget is exhausted.
 *
 * Value is double or Eigen::ArrayXd (componentwise targets).
 */
template <typename V, typename F>
BasicQuadResult<V> adaptive(F&& f, const std::vector<double>& breaks, const std::vector<bool>& singular,
                            const Tolerance& tol, int max_panels = kDefaultMaxPanels) {
  using detail::Panel;
  std::vector<Panel<V>> panels;
  panels.reserve(64);
  const V proto = f(0.5 * (breaks.front() + breaks.back()));
  auto eval_panel = [&](double a, double b, bool sa, bool sb) {
    Panel<V> p = (sa || sb) ? detail::tanh_sinh<V>(f, a, b, tol, proto) : detail::gauss_kronrod31<V>(f, a, b);
    p.sing_a = sa;
    p.sing_b = sb;
    return p;
  };
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (breaks[i + 1] > breaks[i]) {
      panels.push_back(eval_panel(breaks[i], breaks[i + 1], singular[i], singular[i + 1]));
    }
  }
  if (panels.empty()) {
    return {detail::zeros_like(proto), detail::zeros_like(proto), 0};
  }

  auto totals = [&](V& value, V& err_raw, V& floor, V& l1) {
    value = detail::zeros_like(proto);
    err_raw = value;
    floor = value;
    l1 = value;
    for (const auto& p : panels) {
      value += p.value;
      err_raw += p.err_raw;
      floor += p.floor;
      l1 += p.l1;
    }
  };

  V value, err_raw, floor, l1;
  totals(value, err_raw, floor, l1);
  int subdivisions = 0;
  std::vector<char> frozen(panels.size(), 0);
  while (detail::badness(err_raw, l1, tol) > 1.0) {
    if (static_cast<int>(panels.size()) >= max_panels) {
      throw NonConvergence("quad: panel budget exhausted");
    }
    // The target is recomputed against the running l1 total.
    double worst = -1.0;
    std::size_t iw = 0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      if (frozen[i]) {
        continue;
      }
      double bad = 0.0;
      if constexpr (std::is_same_v<V, double>) {
        bad = detail::badness(panels[i].err_raw, l1, tol);
      } else {
        for (Eigen::Index k = 0; k < l1.size(); ++k) {
          bad = std::max(bad, detail::badness(panels[i].err_raw[k], l1[k], tol));
        }
      }
      if (bad > worst) {
        worst = bad;
        iw = i;
      }
    }
    if (worst < 0.0) {
      break;  // everything frozen at roundoff level
    }
    const Panel<V> old = panels[iw];
    const double mid = 0.5 * (old.a + old.b);
    if (!(mid > old.a && mid < old.b) || (old.b - old.a) <= 1e-15 * std::max({std::abs(old.a), std::abs(old.b), 1e-300})) {
      frozen[iw] = 1;
      continue;
    }
    Panel<V> left = eval_panel(old.a, mid, old.sing_a, false);
    Panel<V> right = eval_panel(mid, old.b, false, old.sing_b);
    value += left.value + right.value - old.value;
    err_raw += left.err_raw + right.err_raw - old.err_raw;
    floor += left.floor + right.floor - old.floor;
    l1 += left.l1 + right.l1 - old.l1;
    panels[iw] = left;
    panels.push_back(right);
    frozen.push_back(0);
    ++subdivisions;
    if (subdivisions % 64 == 0) {
      totals(value, err_raw, floor, l1);
    }
    // A panel at its roundoff floor cannot improve by splitting.
    if constexpr (std::is_same_v<V, double>) {
      if (left.err_raw <= left.floor) frozen[iw] = 1;
      if (right.err_raw <= right.floor) frozen.back() = 1;
    } else {
      if ((left.err_raw <= left.floor).all()) frozen[iw] = 1;
      if ((right.err_raw <= right.floor).all()) frozen.back() = 1;
    }
    err_raw = detail::vmax(err_raw, detail::zeros_like(proto));
  }
  totals(value, err_raw, floor, l1);
  if (!detail::all_finite(value)) {
    throw NonConvergence("quad: integrand produced non-finite values");
  }
  return {value, detail::vmax(err_raw, floor), subdivisions};
}

/// Breakpoints for [a, b] including 0 and every singular point inside.
inline void build_breaks(double a, double b, const std::vector<double>& singular_points, std::vector<double>& breaks,
                         std::vector<bool>& singular) {
  breaks.assign({a, b});
  if (a < 0.0 && b > 0.0) {
    breaks.push_back(0.0);
  }
  for (double s : singular_points) {
    if (s > a && s < b) {
      breaks.push_back(s);
    }
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  singular.assign(breaks.size(), false);
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    for (double s : singular_points) {
      if (breaks[i] == s) {
        singular[i] = true;
      }
    }
  }
}

/// Adaptive integral over the finite interval [a, b].
template <typename V, typename F>
BasicQuadResult<V> integrate_finite(F&& f, double a, double b, const std::vector<double>& singular_points,
                                    const Tolerance& tol, int max_panels = kDefaultMaxPanels) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("quad: need finite a < b");
  }
  std::vector<double> breaks;
  std::vector<bool> singular;
  build_breaks(a, b, singular_points, breaks, singular);
  return adaptive<V>(f, breaks, singular, tol, max_panels);
}

/**
 * Finds the truncation distance for a tail integral starting at a: the
 * first sampled distance past the envelope maximum where the envelope is
 * 40 decades below that maximum. Samples are at 2^k for k = -10..20.
 */
template <typename Env>
double tail_cutoff(Env&& log_envelope, double a, Direction dir) {
  const double sgn = dir == Direction::Plus ? 1.0 : -1.0;
  constexpr double drop = 40.0 * 2.302585092994046;
  double best = -std::numeric_limits<double>::infinity();
  for (int k = -10; k <= 20; ++k) {
    const double d = std::ldexp(1.0, k);
    const double e = log_envelope(a + sgn * d);
    if (!std::isfinite(e)) {
      continue;
    }
    if (e > best) {
      best = e;
    } else if (e < best - drop) {
      return d;
    }
  }
  throw EnvelopeNotDecaying("quad: log envelope did not decay within 1e6 of the start point");
}

/**
 * Tail integral over [a, +inf) or (-inf, a]. The range is truncated at
 * tail_cutoff and seeded with geometric breakpoints 1/4, 1/2, 1, 2, ...
 */
template <typename V, typename F, typename Env>
BasicQuadResult<V> integrate_tail(F&& f, Env&& log_envelope, double a, Direction dir,
                                  const std::vector<double>& singular_points, const Tolerance& tol,
                                  int max_panels = kDefaultMaxPanels) {
  const double cut = tail_cutoff(log_envelope, a, dir);
  const double sgn = dir == Direction::Plus ? 1.0 : -1.0;
  std::vector<double> breaks{a, a + sgn * cut};
  for (double d = 0.25; d < cut; d *= 2.0) {
    breaks.push_back(a + sgn * d);
  }
  if ((a < 0.0) != (a + sgn * cut < 0.0) && a != 0.0) {
    breaks.push_back(0.0);
  }
  for (double s : singular_points) {
    if ((s - a) * sgn > 0.0 && (s - a) * sgn < cut) {
      breaks.push_back(s);
    }
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<bool> singular(breaks.size(), false);
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    for (double s : singular_points) {
      if (breaks[i] == s) {
        singular[i] = true;
      }
    }
  }
  return adaptive<V>(f, breaks, singular, tol, max_panels);
}

/// ∫_a^b f with absolute tolerance tol.
QuadResult integrate(const Integrand& f, double a, double b, double tol);

/// ∫_a^{±inf} f with absolute tolerance tol; requires f.log_envelope.
QuadResult integrate_semi_infinite(const Integrand& f, double a, Direction direction, double tol);

}  // namespace wishart::quad

#endif  // WISHART_QUAD_HPP
