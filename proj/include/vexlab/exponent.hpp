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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "vexlab/grid.hpp"

namespace vexlab {

namespace detail {

inline std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace detail

enum class ExponentKind { kConstant, kLogInterp, kLogPerturbed, kCustom };

// Perturbed families are clamped away from 1 to keep norms convex.
inline constexpr double kExponentFloor = 1.0 + 1e-6;

/// A variable exponent t -> p(t) on (0,infinity) together with its limit
/// values at the origin and at infinity. Instances are immutable; build
/// them through the static factories.
class ExponentFunction {
 public:
  double operator()(double t) const {
    if (!(t > 0.0) || !std::isfinite(t))
      throw std::invalid_argument(
          "ExponentFunction: argument must be positive and finite");
    return eval_(t);
  }

  double p_zero() const { return p_zero_; }
  double p_infinity() const { return p_infinity_; }
  ExponentKind kind() const { return kind_; }
  const std::string& descriptor() const { return descriptor_; }

  /// p(t) = c with c >= 1.
  static ExponentFunction constant(double c) {
    require_ge_one(c, "constant");
    return ExponentFunction(
        [c](double) { return c; }, c, c, ExponentKind::kConstant,
        "const(" + detail::format_number(c) + ")");
  }

  /// p(t) = p_inf + (p0 - p_inf) / ln(e + t); attains p0 at t = 0 and
  /// decays to p_inf like 1/ln t, which keeps both ends log-regular.
  static ExponentFunction log_interp(double p0, double pinf) {
    require_ge_one(p0, "log_interp");
    require_ge_one(pinf, "log_interp");
    auto eval = [p0, pinf](double t) {
      return pinf + (p0 - pinf) / std::log(std::exp(1.0) + t);
    };
    return ExponentFunction(eval, p0, pinf, ExponentKind::kLogInterp,
                            "loginterp(" + detail::format_number(p0) + "," +
                                detail::format_number(pinf) + ")");
  }

  /// base(t) + amplitude * sin(ln(e + t) + phase) / ln(e + t), clamped to
  /// stay >= kExponentFloor. The perturbation vanishes at infinity and
  /// shifts the origin value by amplitude * sin(1 + phase).
  static ExponentFunction log_perturbed(const ExponentFunction& base,
                                        double amplitude, double phase) {
    if (!std::isfinite(amplitude) || !std::isfinite(phase))
      throw std::invalid_argument("log_perturbed: parameters must be finite");
    auto base_eval = base.eval_;
    auto eval = [base_eval, amplitude, phase](double t) {
      const double u = std::log(std::exp(1.0) + t);
      return std::max(base_eval(t) + amplitude * std::sin(u + phase) / u,
                      kExponentFloor);
    };
    const double p0 = std::max(
        base.p_zero() + amplitude * std::sin(1.0 + phase), kExponentFloor);
    return ExponentFunction(
        eval, p0, base.p_infinity(), ExponentKind::kLogPerturbed,
        "logperturbed(" + detail::format_number(base.p_zero()) + "," +
            detail::format_number(base.p_infinity()) + "," +
            detail::format_number(amplitude) + "," +
            detail::format_number(phase) + ")");
  }

  /// Escape hatch for tests and experiments; the caller vouches for the
  /// limit values.
  static ExponentFunction custom(std::function<double(double)> eval,
                                 double p0, double pinf,
                                 std::string descriptor) {
    require_ge_one(p0, "custom");
    require_ge_one(pinf, "custom");
    return ExponentFunction(std::move(eval), p0, pinf, ExponentKind::kCustom,
                            std::move(descriptor));
  }

  /// Pointwise reciprocal, used when measuring regularity of 1/p.
  ExponentFunction reciprocal_profile() const {
    auto eval = eval_;
    return ExponentFunction([eval](double t) { return 1.0 / eval(t); },
                            1.0 / p_zero_, 1.0 / p_infinity_,
                            ExponentKind::kCustom,
                            "reciprocal(" + descriptor_ + ")");
  }

 private:
  ExponentFunction(std::function<double(double)> eval, double p0, double pinf,
                   ExponentKind kind, std::string descriptor)
      : eval_(std::move(eval)),
        p_zero_(p0),
        p_infinity_(pinf),
        kind_(kind),
        descriptor_(std::move(descriptor)) {}

  static void require_ge_one(double value, const char* who) {
    if (!std::isfinite(value) || value < 1.0)
      throw std::invalid_argument(std::string(who) +
                                  ": exponent values must be >= 1 and finite");
  }

  std::function<double(double)> eval_;
  double p_zero_;
  double p_infinity_;
  ExponentKind kind_;
  std::string descriptor_;
};

/// Dispatch factory taking positional numeric parameters:
///  kConstant    {c}
///  kLogInterp   {p0, pinf}
///  kLogPerturbed{p0, pinf, amplitude, phase}  (base is kLogInterp)
inline ExponentFunction make_exponent(ExponentKind kind,
                                      const std::vector<double>& params) {
  switch (kind) {
    case ExponentKind::kConstant:
      if (params.size() != 1)
        throw std::invalid_argument("make_exponent: const needs 1 parameter");
      return ExponentFunction::constant(params[0]);
    case ExponentKind::kLogInterp:
      if (params.size() != 2)
        throw std::invalid_argument(
            "make_exponent: loginterp needs 2 parameters");
      return ExponentFunction::log_interp(params[0], params[1]);
    case ExponentKind::kLogPerturbed:
      if (params.size() != 4)
        throw std::invalid_argument(
            "make_exponent: logperturbed needs 4 parameters");
      return ExponentFunction::log_perturbed(
          ExponentFunction::log_interp(params[0], params[1]), params[2],
          params[3]);
    case ExponentKind::kCustom:
      break;
  }
  throw std::invalid_argument("make_exponent: unsupported kind");
}

/// (min, max) of p over the grid nodes.
inline std::pair<double, double> grid_range(const ExponentFunction& p,
                                            const LogGrid& grid) {
  double lo = p(grid.node(0)), hi = lo;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double v = p(grid.node(i));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi};
}

/// Empirical decay constant at the origin:
///   max over nodes of |p(t) - p(0)| * ln(e + 1/t).
/// Finite values certify log-regularity of p at 0 on the truncated range.
inline double log_holder_origin_constant(const ExponentFunction& p,
                                         const LogGrid& grid) {
  double best = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid.node(i);
    best = std::max(best, std::fabs(p(t) - p.p_zero()) *
                              std::log(std::exp(1.0) + 1.0 / t));
  }
  return best;
}

/// Empirical decay constant at infinity:
///   max over nodes of |p(t) - p_inf| * ln(e + t).
inline double log_holder_infinity_constant(const ExponentFunction& p,
                                           const LogGrid& grid) {
  double best = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid.node(i);
    best = std::max(best,
                    std::fabs(p(t) - p.p_infinity()) * std::log(std::exp(1.0) + t));
  }
  return best;
}

}  // namespace vexlab
