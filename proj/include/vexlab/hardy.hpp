// Copyright 2026 The vexlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "vexlab/exponent.hpp"
#include "vexlab/grid.hpp"
#include "vexlab/lebesgue.hpp"

namespace vexlab {

/// Homogeneity degree of the averaging kernels; must be positive.
struct HardyParams {
  double s = 1.0;

  void validate() const {
    if (!(s > 0.0) || !std::isfinite(s))
      throw std::invalid_argument("HardyParams: s must be positive and finite");
  }
};

/// Downward average: (t) -> t^s * integral_t^top tau^{-s} eps(tau) dtau/tau.
/// Computed by one right-to-left sweep of trapezoid panels, so the profile
/// t^{-s} * result is non-increasing node by node in exact arithmetic.
inline SampledFunction hardy_upper(const HardyParams& params,
                                   const SampledFunction& eps) {
  params.validate();
  eps.validate();
  const LogGrid& g = *eps.grid;
  const std::size_t n = g.size();
  const double h = g.step();
  std::vector<double> integrand(n), out(n);
  for (std::size_t i = 0; i < n; ++i)
    integrand[i] = std::pow(g.node(i), -params.s) * eps.values[i];
  double suffix = 0.0;
  out[n - 1] = 0.0;
  for (std::size_t i = n - 1; i-- > 0;) {
    suffix += 0.5 * h * (integrand[i] + integrand[i + 1]);
    out[i] = std::pow(g.node(i), params.s) * suffix;
  }
  return SampledFunction(eps.grid, std::move(out));
}

/// Upward average: (t) -> t^{-s} * integral_bottom^t tau^{s} eps(tau) dtau/tau.
/// One left-to-right sweep; t^{s} * result is non-decreasing node by node.
inline SampledFunction hardy_lower(const HardyParams& params,
                                   const SampledFunction& eps) {
  params.validate();
  eps.validate();
  const LogGrid& g = *eps.grid;
  const std::size_t n = g.size();
  const double h = g.step();
  std::vector<double> integrand(n), out(n);
  for (std::size_t i = 0; i < n; ++i)
    integrand[i] = std::pow(g.node(i), params.s) * eps.values[i];
  double prefix = 0.0;
  out[0] = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    prefix += 0.5 * h * (integrand[i - 1] + integrand[i]);
    out[i] = std::pow(g.node(i), -params.s) * prefix;
  }
  return SampledFunction(eps.grid, std::move(out));
}

/// Variant of hardy_upper with the integral cut off at 1: the output
/// vanishes on [1, top]. The grid must contain the node t = 1.
inline SampledFunction hardy_upper_unit(const HardyParams& params,
                                        const SampledFunction& eps) {
  params.validate();
  eps.validate();
  const LogGrid& g = *eps.grid;
  const std::size_t unit = g.unit_index();
  const std::size_t n = g.size();
  const double h = g.step();
  std::vector<double> integrand(n), out(n, 0.0);
  for (std::size_t i = 0; i <= unit; ++i)
    integrand[i] = std::pow(g.node(i), -params.s) * eps.values[i];
  double suffix = 0.0;
  for (std::size_t i = unit; i-- > 0;) {
    suffix += 0.5 * h * (integrand[i] + integrand[i + 1]);
    out[i] = std::pow(g.node(i), params.s) * suffix;
  }
  return SampledFunction(eps.grid, std::move(out));
}

// ---------------------------------------------------------------------------
// Discrete convolution bound
// ---------------------------------------------------------------------------

/// Parameters of the discrete kernel K(m) = |m|^sigma * a^{|m|} acting on a
/// finite window of indices [k_min, k_max]. p may be any positive value or
/// +infinity (sup norm).
struct DiscreteHardyParams {
  double a = 0.5;
  double sigma = 0.0;
  double p = 1.0;
  int k_min = -32;
  int k_max = 32;

  void validate() const {
    if (!(a > 0.0) || !(a < 1.0))
      throw std::invalid_argument("DiscreteHardyParams: need 0 < a < 1");
    if (!(sigma >= 0.0) || !std::isfinite(sigma))
      throw std::invalid_argument("DiscreteHardyParams: need sigma >= 0");
    if (std::isnan(p) || !(p > 0.0))
      throw std::invalid_argument("DiscreteHardyParams: need p > 0 (or inf)");
    if (k_min > k_max)
      throw std::invalid_argument("DiscreteHardyParams: k_min > k_max");
  }

  std::size_t window_size() const {
    return static_cast<std::size_t>(k_max - k_min) + 1;
  }
};

/// Kernel weight with the conventions 0^0 = 1 and 0^sigma = 0 for sigma > 0:
/// the diagonal term survives only for sigma = 0.
inline double discrete_kernel_weight(double a, double sigma, int m) {
  const int d = m < 0 ? -m : m;
  if (d == 0) return sigma == 0.0 ? 1.0 : 0.0;
  return std::pow(static_cast<double>(d), sigma) *
         std::pow(a, static_cast<double>(d));
}

/// The summability constant of the kernel:
///   p >= 1 (or inf):  sum_m |m|^sigma a^|m|            (Young form)
///   0 < p < 1:        ( sum_m |m|^{sigma p} a^{|m| p} )^{1/p}
/// Series are summed to machine precision.
inline double discrete_kernel_constant(double a, double sigma, double p) {
  if (!(a > 0.0) || !(a < 1.0))
    throw std::invalid_argument("discrete_kernel_constant: need 0 < a < 1");
  const bool subadditive = !std::isinf(p) && p < 1.0;
  const double q = subadditive ? p : 1.0;
  // sum over m >= 1 of m^{sigma q} (a^q)^m, plus the diagonal for sigma = 0.
  const double base = std::pow(a, q);
  double acc = 0.0;
  for (int m = 1; m < 1000000; ++m) {
    const double term = std::pow(static_cast<double>(m), sigma * q) *
                        std::pow(base, static_cast<double>(m));
    acc += term;
    if (term < 1e-18 * acc && m > 8) break;
  }
  double total = 2.0 * acc + (sigma == 0.0 ? 1.0 : 0.0);
  return subadditive ? std::pow(total, 1.0 / p) : total;
}

/// delta_k = sum_j |k-j|^sigma a^{|k-j|} eps_j over the window.
inline std::vector<double> discrete_hardy_transform(
    const DiscreteHardyParams& params, std::span<const double> eps) {
  params.validate();
  const std::size_t n = params.window_size();
  if (eps.size() != n)
    throw std::invalid_argument(
        "discrete_hardy_transform: sequence length does not match window");
  for (double e : eps)
    if (!std::isfinite(e) || e < 0.0)
      throw std::invalid_argument(
          "discrete_hardy_transform: entries must be finite and nonnegative");
  // Precompute kernel by offset; offsets range over [-(n-1), n-1].
  std::vector<double> kernel(2 * n - 1);
  for (std::size_t d = 0; d < 2 * n - 1; ++d)
    kernel[d] = discrete_kernel_weight(params.a, params.sigma,
                                       static_cast<int>(d) -
                                           static_cast<int>(n - 1));
  std::vector<double> delta(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      acc += kernel[k - j + (n - 1)] * eps[j];
    delta[k] = acc;
  }
  return delta;
}

/// Sequence norm over the window: (sum |x|^p)^{1/p}, or sup for p = inf.
inline double sequence_norm(double p, std::span<const double> x) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : x) m = std::fmax(m, v);
    return m;
  }
  double acc = 0.0;
  for (double v : x) acc += std::pow(v, p);
  return std::pow(acc, 1.0 / p);
}

struct DiscreteHardyCheck {
  double lhs = 0.0;       // ||delta||_p over the window
  double rhs = 0.0;       // constant * ||eps||_p
  double ratio = 0.0;     // lhs / rhs (0 when both vanish)
  double constant = 0.0;  // discrete_kernel_constant(a, sigma, p)
};

/// Evaluates both sides of the summability bound for the window transform.
inline DiscreteHardyCheck discrete_hardy_check(
    const DiscreteHardyParams& params, std::span<const double> eps) {
  const auto delta = discrete_hardy_transform(params, eps);
  DiscreteHardyCheck out;
  out.constant = discrete_kernel_constant(params.a, params.sigma, params.p);
  out.lhs = sequence_norm(params.p, delta);
  out.rhs = out.constant * sequence_norm(params.p, eps);
  if (out.rhs == 0.0)
    out.ratio = out.lhs == 0.0 ? 0.0
                               : std::numeric_limits<double>::infinity();
  else
    out.ratio = out.lhs / out.rhs;
  return out;
}

// ---------------------------------------------------------------------------
// Pointwise Jensen-type averaging bound
// ---------------------------------------------------------------------------

/// Which frozen exponent the bound compares against inside the average.
enum class PointwiseVariant {
  kOriginPointwise,  // p(y) inside the average; interval near the origin
  kOriginLimit,      // p(0) inside the average; interval near the origin
  kInfinityLimit,    // p_inf inside the average; interval near infinity
};

/// An interval Q = [node(q_lo), node(q_hi)] plus the decay rate m > 0.
struct PointwiseBoundSpec {
  std::size_t q_lo = 0;
  std::size_t q_hi = 0;
  double m = 1.0;
  PointwiseVariant variant = PointwiseVariant::kOriginPointwise;
};

struct PointwiseMarginRow {
  std::size_t index = 0;
  double t = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs; negative beyond tolerance = violation
  // Same margin with the damping factor omega left off the decay term (the
  // looser reading of the ambiguous grouping); always >= margin.
  double margin_ungrouped = 0.0;
};

struct PointwiseBoundReport {
  double gamma = 1.0;
  double m = 1.0;
  double omega = 1.0;
  double weight_mass = 0.0;  // w(Q), Lebesgue mass of the weight over Q
  double p_min = 1.0;        // min of p over Q
  double clog_used = 0.0;    // empirical decay constant feeding gamma
  std::vector<PointwiseMarginRow> rows;
  double min_margin = std::numeric_limits<double>::infinity();
  double min_margin_ungrouped = std::numeric_limits<double>::infinity();
};

namespace detail {

inline double origin_decay(double x, double m) {
  return std::pow(std::exp(1.0) + 1.0 / x, -m);
}

inline double infinity_decay(double x, double m) {
  return std::pow(std::exp(1.0) + x, -m);
}

}  // namespace detail

/// Checks, at every node x of Q, that the p(x)-th power of the damped
/// average of f over Q is controlled by the average of the appropriate
/// frozen-exponent power of f plus an explicit decay term. The weight w
/// defaults to 1; averages are taken against w(y) dy (Lebesgue), realized
/// on the log grid via the substitution dy = y * dy/y.
///
/// Preconditions (enforced): kOriginPointwise requires the weighted modular
/// of f over Q to be at most 1; the frozen variants require max f <= 1 on Q.
///
/// x_nodes optionally restricts the evaluation points to a subset of the
/// node indices of Q; by default every node of Q is checked.
inline PointwiseBoundReport pointwise_bound_check(
    const ExponentFunction& p, const PointwiseBoundSpec& spec,
    const SampledFunction& f, const SampledFunction* weight = nullptr,
    const std::vector<std::size_t>* x_nodes = nullptr) {
  f.validate();
  const LogGrid& g = *f.grid;
  if (spec.q_lo >= spec.q_hi || spec.q_hi >= g.size())
    throw std::invalid_argument("pointwise_bound_check: bad interval");
  if (!(spec.m > 0.0) || !std::isfinite(spec.m))
    throw std::invalid_argument("pointwise_bound_check: need m > 0");
  if (weight) {
    weight->validate();
    check_same_grid(*weight, g);
  }

  const std::size_t ia = spec.q_lo, ib = spec.q_hi;
  const double b = g.node(ib);
  auto w_at = [&](std::size_t i) {
    return weight ? weight->values[i] : 1.0;
  };

  // Panel-sum of F(y) * w(y) dy over Q, with dy realized as y * dy/y.
  auto average_dy = [&](auto&& F) {
    const double h = g.step();
    double acc = 0.0;
    double prev = F(ia) * w_at(ia) * g.node(ia);
    for (std::size_t i = ia; i < ib; ++i) {
      const double next = F(i + 1) * w_at(i + 1) * g.node(i + 1);
      acc += 0.5 * h * (prev + next);
      prev = next;
    }
    return acc;
  };

  PointwiseBoundReport rep;
  rep.weight_mass = average_dy([](std::size_t) { return 1.0; });
  if (!(rep.weight_mass > 0.0) || !std::isfinite(rep.weight_mass))
    throw std::invalid_argument(
        "pointwise_bound_check: weight mass over Q must be positive/finite");

  std::vector<double> pq(g.size());
  rep.p_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = ia; i <= ib; ++i) {
    pq[i] = p(g.node(i));
    rep.p_min = std::fmin(rep.p_min, pq[i]);
  }

  const bool origin = spec.variant != PointwiseVariant::kInfinityLimit;
  constexpr double kSlack = 1e-12;
  if (spec.variant == PointwiseVariant::kOriginPointwise) {
    const double mass =
        average_dy([&](std::size_t i) { return std::pow(f.values[i], pq[i]); });
    if (mass > 1.0 + kSlack)
      throw std::invalid_argument(
          "pointwise_bound_check: weighted modular of f over Q exceeds 1");
  } else {
    for (std::size_t i = ia; i <= ib; ++i)
      if (f.values[i] > 1.0 + kSlack)
        throw std::invalid_argument(
            "pointwise_bound_check: this variant requires f <= 1 on Q");
  }

  // Decay constant feeding gamma: regularity of 1/p at the origin, or of p
  // at infinity, measured empirically over the ambient grid.
  rep.clog_used =
      origin ? log_holder_origin_constant(p.reciprocal_profile(), g)
             : log_holder_infinity_constant(p, g);
  rep.m = spec.m;
  rep.gamma = std::exp(-4.0 * spec.m * rep.clog_used);
  rep.omega = origin ? std::fmin(std::pow(b, spec.m), 1.0) : 1.0;

  const double inv_mass = 1.0 / rep.weight_mass;
  const double avg_f =
      inv_mass * average_dy([&](std::size_t i) { return f.values[i]; });

  // Frozen-exponent average for the first right-hand term.
  const double frozen =
      spec.variant == PointwiseVariant::kOriginPointwise
          ? inv_mass * average_dy([&](std::size_t i) {
              return std::pow(f.values[i], pq[i]);
            })
          : (spec.variant == PointwiseVariant::kOriginLimit
                 ? inv_mass * average_dy([&](std::size_t i) {
                     return std::pow(f.values[i], p.p_zero());
                   })
                 : inv_mass * average_dy([&](std::size_t i) {
                     return std::pow(f.values[i], p.p_infinity());
                   }));

  // y-dependent half of the decay term (kOriginPointwise only).
  const double avg_decay_y =
      spec.variant == PointwiseVariant::kOriginPointwise
          ? inv_mass * average_dy([&](std::size_t i) {
              return detail::origin_decay(g.node(i), spec.m);
            })
          : 0.0;

  std::vector<std::size_t> all;
  if (!x_nodes) {
    all.resize(ib - ia + 1);
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = ia + i;
  }
  const std::vector<std::size_t>& points = x_nodes ? *x_nodes : all;
  rep.rows.reserve(points.size());
  for (std::size_t i : points) {
    if (i < ia || i > ib)
      throw std::invalid_argument(
          "pointwise_bound_check: evaluation node outside Q");
    const double x = g.node(i);
    const double px = pq[i];
    double decay = 0.0;
    switch (spec.variant) {
      case PointwiseVariant::kOriginPointwise:
        decay = detail::origin_decay(x, spec.m) + avg_decay_y;
        break;
      case PointwiseVariant::kOriginLimit:
        decay = px < p.p_zero() ? detail::origin_decay(x, spec.m) : 0.0;
        break;
      case PointwiseVariant::kInfinityLimit:
        decay = px < p.p_infinity() ? detail::infinity_decay(x, spec.m) : 0.0;
        break;
    }
    const double balance =
        std::fmax(1.0, std::pow(rep.weight_mass, 1.0 - px / rep.p_min));
    PointwiseMarginRow row;
    row.index = i;
    row.t = x;
    row.lhs = std::pow(rep.gamma * avg_f, px);
    row.rhs = balance * frozen + rep.omega * decay;
    row.margin = row.rhs - row.lhs;
    row.margin_ungrouped = (balance * frozen + decay) - row.lhs;
    rep.min_margin = std::fmin(rep.min_margin, row.margin);
    rep.min_margin_ungrouped =
        std::fmin(rep.min_margin_ungrouped, row.margin_ungrouped);
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace vexlab
