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
#include <stdexcept>
#include <string>
#include <vector>

#include "vexlab/exponent.hpp"
#include "vexlab/grid.hpp"

namespace vexlab {

enum class FunctionFamilyKind {
  kZero,
  kConstant,
  kPower,
  kPowerPeak,
  kOctave,
  kOctaves,
  kLogOscillation,
  kStairDown,
  kStairUp,
  kCapDown,
  kCapUp,
};

/// A nonnegative source profile on (0,infinity), resampleable on any grid.
/// Kept as (kind, params) so reports can reproduce it from its descriptor.
class FunctionFamily {
 public:
  FunctionFamilyKind kind() const { return kind_; }
  const std::vector<double>& params() const { return params_; }

  double operator()(double t) const {
    switch (kind_) {
      case FunctionFamilyKind::kZero:
        return 0.0;
      case FunctionFamilyKind::kConstant:
        return params_[0];
      case FunctionFamilyKind::kPower:
        return std::pow(t, params_[0]);
      case FunctionFamilyKind::kPowerPeak:
        return t <= 1.0 ? std::pow(t, params_[0]) : std::pow(t, -params_[1]);
      case FunctionFamilyKind::kOctave: {
        const double lo = std::exp2(params_[0]);
        return (t >= lo && t < 2.0 * lo) ? 1.0 : 0.0;
      }
      case FunctionFamilyKind::kOctaves:
        return (t >= std::exp2(params_[0]) && t < std::exp2(params_[1]))
                   ? 1.0
                   : 0.0;
      case FunctionFamilyKind::kLogOscillation:
        return (1.0 + std::sin(std::log(t))) *
               std::pow(std::fmin(t, 1.0 / t), params_[0]);
      case FunctionFamilyKind::kStairDown:
        return t < 1.0 ? 1.0 : std::exp2(-std::floor(std::log2(t)));
      case FunctionFamilyKind::kStairUp:
        return t > 1.0 ? 1.0 : std::exp2(std::floor(std::log2(t)));
      case FunctionFamilyKind::kCapDown:
        return std::fmin(1.0, 1.0 / t);
      case FunctionFamilyKind::kCapUp:
        return std::fmin(t, 1.0);
    }
    throw std::logic_error("FunctionFamily: unreachable kind");
  }

  std::string descriptor() const {
    std::string out = name() + "(";
    for (std::size_t i = 0; i < params_.size(); ++i) {
      if (i) out += ",";
      out += detail::format_number(params_[i]);
    }
    return out + ")";
  }

  static FunctionFamily zero() { return {FunctionFamilyKind::kZero, {}}; }

  static FunctionFamily constant(double c) {
    if (!(c >= 0.0) || !std::isfinite(c))
      throw std::invalid_argument("const: level must be finite and >= 0");
    return {FunctionFamilyKind::kConstant, {c}};
  }

  static FunctionFamily power(double a) {
    require_finite(a, "power");
    return {FunctionFamilyKind::kPower, {a}};
  }

  /// min(t^a, t^-b): rises to 1 at t = 1 and falls off on both sides.
  static FunctionFamily power_peak(double a, double b) {
    require_finite(a, "powerpeak");
    require_finite(b, "powerpeak");
    return {FunctionFamilyKind::kPowerPeak, {a, b}};
  }

  /// Indicator of the half-open dyadic block [2^j, 2^{j+1}).
  static FunctionFamily octave(int j) {
    return {FunctionFamilyKind::kOctave, {static_cast<double>(j)}};
  }

  /// Indicator of [2^j1, 2^j2).
  static FunctionFamily octaves(int j1, int j2) {
    if (j1 >= j2) throw std::invalid_argument("octaves: need j1 < j2");
    return {FunctionFamilyKind::kOctaves,
            {static_cast<double>(j1), static_cast<double>(j2)}};
  }

  /// (1 + sin(ln t)) * min(t, 1/t)^g: oscillates on every log scale.
  static FunctionFamily log_oscillation(double g) {
    if (!(g > 0.0) || !std::isfinite(g))
      throw std::invalid_argument("logosc: need decay g > 0");
    return {FunctionFamilyKind::kLogOscillation, {g}};
  }

  /// Non-increasing dyadic staircase tracking min(1, 1/t) within a factor 2.
  static FunctionFamily stair_down() {
    return {FunctionFamilyKind::kStairDown, {}};
  }

  /// Non-decreasing dyadic staircase tracking min(t, 1) within a factor 2.
  static FunctionFamily stair_up() {
    return {FunctionFamilyKind::kStairUp, {}};
  }

  static FunctionFamily cap_down() {
    return {FunctionFamilyKind::kCapDown, {}};
  }

  static FunctionFamily cap_up() { return {FunctionFamilyKind::kCapUp, {}}; }

 private:
  FunctionFamily(FunctionFamilyKind kind, std::vector<double> params)
      : kind_(kind), params_(std::move(params)) {}

  static void require_finite(double x, const char* who) {
    if (!std::isfinite(x))
      throw std::invalid_argument(std::string(who) +
                                  ": parameters must be finite");
  }

  std::string name() const {
    switch (kind_) {
      case FunctionFamilyKind::kZero: return "zero";
      case FunctionFamilyKind::kConstant: return "const";
      case FunctionFamilyKind::kPower: return "power";
      case FunctionFamilyKind::kPowerPeak: return "powerpeak";
      case FunctionFamilyKind::kOctave: return "octave";
      case FunctionFamilyKind::kOctaves: return "octaves";
      case FunctionFamilyKind::kLogOscillation: return "logosc";
      case FunctionFamilyKind::kStairDown: return "stairdown";
      case FunctionFamilyKind::kStairUp: return "stairup";
      case FunctionFamilyKind::kCapDown: return "capdown";
      case FunctionFamilyKind::kCapUp: return "capup";
    }
    return "?";
  }

  FunctionFamilyKind kind_;
  std::vector<double> params_;
};

inline SampledFunction sample(const FunctionFamily& fam,
                              const LogGridPtr& grid) {
  return sample(grid, [&](double t) { return fam(t); });
}

}  // namespace vexlab
