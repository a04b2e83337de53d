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
#include <stdexcept>
#include <string>
#include <vector>

#include "vexlab/exponent.hpp"
#include "vexlab/grid.hpp"

namespace vexlab {

/// Raised when a norm solve cannot bracket or converge.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Accumulated integrand mass beyond this is reported as +infinity; it keeps
/// pow() overflow from poisoning comparisons against 1.
inline constexpr double kModularSaturation = 1e300;

inline constexpr double kDefaultNormTolerance = 1e-8;

/// Outcome of a Luxemburg norm solve. When norm > 0 the solver guarantees
/// |modular_at_norm - 1| <= tolerance.
struct LuxemburgResult {
  double norm = 0.0;
  double modular_at_norm = 0.0;
  int iterations = 0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double tolerance = kDefaultNormTolerance;
};

namespace detail {

inline double saturating_add(double acc, double term) {
  acc += term;
  if (!(acc < kModularSaturation))
    return std::numeric_limits<double>::infinity();
  return acc;
}

/// Weight-sum modular over all nodes: sum_i w_i * (v_i/lambda)^{e_i}.
inline double scaled_modular_weights(const LogGrid& grid,
                                     const std::vector<double>& values,
                                     const std::vector<double>& exponents,
                                     double lambda) {
  double acc = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0.0) continue;
    acc = saturating_add(acc,
                         grid.log_weight(i) * std::pow(values[i] / lambda,
                                                       exponents[i]));
    if (std::isinf(acc)) return acc;
  }
  return acc;
}

/// Panel-sum modular over the node range [ia, ib]; consistent with
/// integrate_between.
inline double scaled_modular_panels(const LogGrid& grid,
                                    const std::vector<double>& values,
                                    const std::vector<double>& exponents,
                                    std::size_t ia, std::size_t ib,
                                    double lambda) {
  const double h = grid.step();
  double prev = ia < values.size() && values[ia] > 0.0
                    ? std::pow(values[ia] / lambda, exponents[ia])
                    : 0.0;
  double acc = 0.0;
  for (std::size_t i = ia; i < ib; ++i) {
    const double next = values[i + 1] > 0.0
                            ? std::pow(values[i + 1] / lambda, exponents[i + 1])
                            : 0.0;
    acc = saturating_add(acc, 0.5 * h * (prev + next));
    if (std::isinf(acc)) return acc;
    prev = next;
  }
  return acc;
}

/// Monotone bracketing plus bisection on lambda for rho(lambda) = 1, where
/// rho is any strictly decreasing modular profile. seed > 0 is a starting
/// scale guess (typically the sup of the data).
template <class Rho>
LuxemburgResult solve_unit_modular(Rho&& rho, double seed, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("norm tolerance must be > 0");
  LuxemburgResult res;
  res.tolerance = tol;

  double lo = seed, hi = seed;
  int iters = 0;
  const int kMaxBracket = 2200;  // covers the full double exponent range
  double val = rho(seed);
  ++iters;
  if (val > 1.0) {
    // Grow hi until the modular drops to 1 or below.
    do {
      lo = hi;
      hi *= 2.0;
      val = rho(hi);
      ++iters;
      if (iters > kMaxBracket)
        throw SolverError("luxemburg solve: failed to bracket from above");
    } while (val > 1.0);
  } else {
    // Shrink lo until the modular exceeds 1.
    do {
      hi = lo;
      lo *= 0.5;
      val = rho(lo);
      ++iters;
      if (iters > kMaxBracket)
        throw SolverError("luxemburg solve: failed to bracket from below");
    } while (val <= 1.0);
  }

  // Invariant: rho(lo) > 1 >= rho(hi). Bisect on the residual.
  double mid = hi, fmid = val;
  const int kMaxBisect = 200;
  for (int k = 0; k < kMaxBisect; ++k) {
    if (std::fabs(fmid - 1.0) <= tol) {
      res.norm = mid;
      res.modular_at_norm = fmid;
      res.iterations = iters;
      res.bracket_lo = lo;
      res.bracket_hi = hi;
      return res;
    }
    mid = 0.5 * (lo + hi);
    fmid = rho(mid);
    ++iters;
    if (fmid > 1.0)
      lo = mid;
    else
      hi = mid;
  }
  throw SolverError("luxemburg solve: residual " +
                    std::to_string(std::fabs(fmid - 1.0)) +
                    " did not reach tolerance");
}

inline std::vector<double> exponents_at_nodes(const ExponentFunction& p,
                                              const LogGrid& grid) {
  std::vector<double> e(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) e[i] = p(grid.node(i));
  return e;
}

inline double max_value(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::fmax(m, x);
  return m;
}

}  // namespace detail

/// Modular rho(f) = integral of |f(t)|^{p(t)} dt/t over the whole truncated
/// grid (weight-sum form). Saturates to +infinity past kModularSaturation.
inline double modular(const ExponentFunction& p, const SampledFunction& f) {
  f.validate();
  const auto e = detail::exponents_at_nodes(p, *f.grid);
  return detail::scaled_modular_weights(*f.grid, f.values, e, 1.0);
}

/// Modular restricted to [a, b]; bounds must be grid nodes. Panel-sum form,
/// consistent with integrate_between.
inline double modular_between(const ExponentFunction& p,
                              const SampledFunction& f, double a, double b) {
  f.validate();
  const LogGrid& g = *f.grid;
  const std::size_t ia = g.index_of(a), ib = g.index_of(b);
  if (ia > ib) throw std::invalid_argument("modular_between: a > b");
  const auto e = detail::exponents_at_nodes(p, g);
  return detail::scaled_modular_panels(g, f.values, e, ia, ib, 1.0);
}

namespace detail {

/// Starting scale for the bracket: the fixed-exponent norm at the largest
/// exponent seen on the range, falling back to the sup when that value is
/// degenerate (underflow/overflow).
inline double bracket_seed(const LogGrid& g, const std::vector<double>& values,
                           const std::vector<double>& exponents,
                           std::size_t ia, std::size_t ib) {
  double p_plus = 1.0, sup = 0.0;
  for (std::size_t i = ia; i <= ib; ++i) {
    p_plus = std::fmax(p_plus, exponents[i]);
    sup = std::fmax(sup, values[i]);
  }
  double acc = 0.0;
  for (std::size_t i = ia; i <= ib; ++i) {
    if (values[i] == 0.0) continue;
    acc += g.log_weight(i) * std::pow(values[i], p_plus);
    if (!(acc < kModularSaturation)) return sup;
  }
  const double guess = std::pow(acc, 1.0 / p_plus);
  return (std::isfinite(guess) && guess > 0.0) ? guess : sup;
}

}  // namespace detail

/// Luxemburg norm: inf{ lambda > 0 : rho(f/lambda) <= 1 }, located by
/// doubling/halving from a fixed-exponent estimate at the largest exponent,
/// then bisecting on the modular residual.
inline LuxemburgResult luxemburg_norm(const ExponentFunction& p,
                                      const SampledFunction& f,
                                      double tol = kDefaultNormTolerance) {
  f.validate();
  const LogGrid& g = *f.grid;
  const double vmax = detail::max_value(f.values);
  LuxemburgResult res;
  res.tolerance = tol;
  if (vmax == 0.0) return res;  // zero function: norm 0 by convention
  const auto e = detail::exponents_at_nodes(p, g);
  return detail::solve_unit_modular(
      [&](double lam) {
        return detail::scaled_modular_weights(g, f.values, e, lam);
      },
      detail::bracket_seed(g, f.values, e, 0, g.size() - 1), tol);
}

/// Luxemburg norm of f restricted to [a, b] (grid nodes), panel-sum modular.
inline LuxemburgResult luxemburg_norm_between(
    const ExponentFunction& p, const SampledFunction& f, double a, double b,
    double tol = kDefaultNormTolerance) {
  f.validate();
  const LogGrid& g = *f.grid;
  const std::size_t ia = g.index_of(a), ib = g.index_of(b);
  if (ia > ib) throw std::invalid_argument("luxemburg_norm_between: a > b");
  double vmax = 0.0;
  for (std::size_t i = ia; i <= ib; ++i) vmax = std::fmax(vmax, f.values[i]);
  LuxemburgResult res;
  res.tolerance = tol;
  if (vmax == 0.0) return res;
  const auto e = detail::exponents_at_nodes(p, g);
  return detail::solve_unit_modular(
      [&](double lam) {
        return detail::scaled_modular_panels(g, f.values, e, ia, ib, lam);
      },
      detail::bracket_seed(g, f.values, e, ia, ib), tol);
}

/// Classical constant-exponent norm (integral of f^q dt/t over [a,b])^(1/q).
inline double fixed_norm(double q, const SampledFunction& f, double a,
                         double b) {
  if (!(q >= 1.0) || !std::isfinite(q))
    throw std::invalid_argument("fixed_norm: q must be >= 1 and finite");
  f.validate();
  const LogGrid& g = *f.grid;
  const std::size_t ia = g.index_of(a), ib = g.index_of(b);
  if (ia > ib) throw std::invalid_argument("fixed_norm: a > b");
  const double h = g.step();
  double acc = 0.0;
  double prev = std::pow(f.values[ia], q);
  for (std::size_t i = ia; i < ib; ++i) {
    const double next = std::pow(f.values[i + 1], q);
    acc = detail::saturating_add(acc, 0.5 * h * (prev + next));
    if (std::isinf(acc)) break;
    prev = next;
  }
  return std::pow(acc, 1.0 / q);
}

/// Checks the unit-ball property: ||f|| <= 1 iff rho(f) <= 1. True when the
/// norm and the modular agree on which side of 1 they fall, within tol:
/// both at most 1 + tol, or both at least 1 - tol.
inline bool unit_ball_check(const ExponentFunction& p,
                            const SampledFunction& f,
                            double tol = 1e-6) {
  const double norm = luxemburg_norm(p, f, std::min(tol, 1e-8)).norm;
  const double rho = modular(p, f);
  return (norm <= 1.0 + tol && rho <= 1.0 + tol) ||
         (norm >= 1.0 - tol && rho >= 1.0 - tol);
}

/// Diagnostics from a mixed-norm solve. The inner exponent ratio
/// p(t)/q(t) may dip below one; the solve proceeds regardless and the
/// caller can inspect the flag.
struct MixedNormDiagnostics {
  double min_inner_ratio = std::numeric_limits<double>::quiet_NaN();
  bool inner_ratio_below_one = false;
  int outer_iterations = 0;
  std::size_t blocks_skipped = 0;
};

/// Input for the sequence-space norm over blocks: outer exponent q(.),
/// inner exponent p(.), and one sampled block per sequence index. All
/// blocks must live on one common grid.
struct MixedNormInput {
  ExponentFunction outer;
  ExponentFunction inner;
  std::vector<SampledFunction> blocks;
};

/// Norm of a block sequence in the nested space: the modular of the scaled
/// sequence is sum_v || (f_v/mu)^{q(.)} ||_{p(.)/q(.)}, and the norm is the
/// mu making it 1. Requires a finite upper bound for q on the grid (true by
/// construction for all built-in exponent families).
inline double mixed_norm(const MixedNormInput& input,
                         double tol = kDefaultNormTolerance,
                         MixedNormDiagnostics* diag = nullptr) {
  if (input.blocks.empty())
    throw std::invalid_argument("mixed_norm: no blocks given");
  const LogGrid& g = *input.blocks.front().grid;
  double sup = 0.0;
  for (const auto& b : input.blocks) {
    b.validate();
    check_same_grid(b, g);
    sup = std::fmax(sup, detail::max_value(b.values));
  }
  const auto q = detail::exponents_at_nodes(input.outer, g);
  const auto p = detail::exponents_at_nodes(input.inner, g);
  std::vector<double> ratio(g.size());
  double min_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < g.size(); ++i) {
    ratio[i] = p[i] / q[i];
    min_ratio = std::fmin(min_ratio, ratio[i]);
  }
  MixedNormDiagnostics local;
  MixedNormDiagnostics& d = diag ? *diag : local;
  d.min_inner_ratio = min_ratio;
  d.inner_ratio_below_one = min_ratio < 1.0;
  d.outer_iterations = 0;
  d.blocks_skipped = 0;

  if (sup == 0.0) return 0.0;

  const double inner_tol = std::min(tol, 1e-9);
  std::vector<double> scaled(g.size());
  // Modular of the scaled sequence at outer scale mu.
  auto outer_modular = [&](double mu) {
    double acc = 0.0;
    std::size_t skipped = 0;
    for (const auto& b : input.blocks) {
      double bmax = 0.0;
      for (double v : b.values) bmax = std::fmax(bmax, v);
      if (bmax == 0.0) {
        ++skipped;
        continue;
      }
      bool overflow = false;
      for (std::size_t i = 0; i < g.size(); ++i) {
        scaled[i] =
            b.values[i] > 0.0 ? std::pow(b.values[i] / mu, q[i]) : 0.0;
        if (std::isinf(scaled[i])) {
          overflow = true;
          break;
        }
      }
      if (overflow) return std::numeric_limits<double>::infinity();
      double seed = detail::max_value(scaled);
      const auto inner = detail::solve_unit_modular(
          [&](double lam) {
            return detail::scaled_modular_weights(g, scaled, ratio, lam);
          },
          seed, inner_tol);
      acc = detail::saturating_add(acc, inner.norm);
      if (std::isinf(acc)) return acc;
    }
    d.blocks_skipped = skipped;
    return acc;
  };
  const auto res = detail::solve_unit_modular(outer_modular, sup, tol);
  d.outer_iterations = res.iterations;
  return res.norm;
}

}  // namespace vexlab
