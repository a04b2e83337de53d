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
#include <cstdio>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace vexlab {

/// Dyadic range and subdivision count that fully determine a LogGrid.
struct GridSpec {
  int v_min = -30;
  int v_max = 30;
  int nodes_per_octave = 8;

  bool operator==(const GridSpec&) const = default;

  std::string to_string() const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "grid(%d,%d,%d)", v_min, v_max,
                  nodes_per_octave);
    return buf;
  }
};

/// Logarithmic discretization of (0,infinity), truncated to
/// [2^v_min, 2^v_max]. Nodes form a geometric progression with ratio
/// 2^(1/nodes_per_octave); quadrature weights are composite-trapezoid in
/// u = ln t, so integrals are taken against the measure dt/t.
///
/// Immutable after construction; shared freely via LogGridPtr.
class LogGrid {
 public:
  static std::shared_ptr<const LogGrid> build(int v_min, int v_max,
                                              int nodes_per_octave) {
    if (v_min >= v_max)
      throw std::invalid_argument("LogGrid: v_min must be < v_max");
    if (nodes_per_octave < 1)
      throw std::invalid_argument("LogGrid: nodes_per_octave must be >= 1");
    return std::shared_ptr<const LogGrid>(
        new LogGrid(GridSpec{v_min, v_max, nodes_per_octave}));
  }

  static std::shared_ptr<const LogGrid> build(const GridSpec& spec) {
    return build(spec.v_min, spec.v_max, spec.nodes_per_octave);
  }

  const GridSpec& spec() const { return spec_; }
  std::size_t size() const { return nodes_.size(); }
  double node(std::size_t i) const { return nodes_[i]; }
  const std::vector<double>& nodes() const { return nodes_; }
  double log_weight(std::size_t i) const { return weights_[i]; }
  const std::vector<double>& log_weights() const { return weights_; }

  /// Uniform spacing in u = ln t.
  double step() const { return step_; }
  double bottom() const { return nodes_.front(); }
  double top() const { return nodes_.back(); }

  /// True when t = 1 is a node (v_min <= 0 <= v_max).
  bool contains_unit() const { return spec_.v_min <= 0 && spec_.v_max >= 0; }
  std::size_t unit_index() const {
    if (!contains_unit())
      throw std::invalid_argument("LogGrid: grid does not straddle t = 1");
    return static_cast<std::size_t>(-spec_.v_min) *
           static_cast<std::size_t>(spec_.nodes_per_octave);
  }

  /// Index of the node nearest to t in log scale.
  std::size_t nearest_index(double t) const {
    if (!(t > 0.0) || !std::isfinite(t))
      throw std::invalid_argument("LogGrid: t must be positive and finite");
    const double pos =
        (std::log2(t) - spec_.v_min) * spec_.nodes_per_octave;
    const double clamped =
        std::fmin(std::fmax(pos, 0.0), static_cast<double>(size() - 1));
    return static_cast<std::size_t>(std::llround(clamped));
  }

  /// Snap t to the nearest node value.
  double nearest_node(double t) const { return nodes_[nearest_index(t)]; }

  /// Index of an exact node; rejects off-node values.
  std::size_t index_of(double t) const {
    const std::size_t i = nearest_index(t);
    if (std::fabs(nodes_[i] - t) > 1e-9 * t)
      throw std::invalid_argument(
          "LogGrid: bound is not a grid node; snap with nearest_node first");
    return i;
  }

 private:
  explicit LogGrid(const GridSpec& spec) : spec_(spec) {
    const std::size_t n =
        static_cast<std::size_t>(spec.v_max - spec.v_min) *
            static_cast<std::size_t>(spec.nodes_per_octave) +
        1;
    step_ = std::log(2.0) / spec.nodes_per_octave;
    nodes_.resize(n);
    weights_.assign(n, step_);
    for (std::size_t i = 0; i < n; ++i) {
      nodes_[i] = std::exp2(spec.v_min +
                            static_cast<double>(i) / spec.nodes_per_octave);
    }
    weights_.front() = 0.5 * step_;
    weights_.back() = 0.5 * step_;
  }

  GridSpec spec_;
  double step_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

using LogGridPtr = std::shared_ptr<const LogGrid>;

/// Nonnegative function values attached to the nodes of one LogGrid.
struct SampledFunction {
  LogGridPtr grid;
  std::vector<double> values;

  SampledFunction() = default;
  SampledFunction(LogGridPtr g, std::vector<double> v)
      : grid(std::move(g)), values(std::move(v)) {
    validate();
  }

  void validate() const {
    if (!grid) throw std::invalid_argument("SampledFunction: null grid");
    if (values.size() != grid->size())
      throw std::invalid_argument(
          "SampledFunction: value count does not match grid");
    for (double v : values) {
      if (!std::isfinite(v) || v < 0.0)
        throw std::invalid_argument(
            "SampledFunction: values must be finite and nonnegative");
    }
  }

  bool on_grid(const LogGrid& g) const {
    return grid && grid->spec() == g.spec();
  }
};

/// Evaluate fn at every node.
template <class Fn>
SampledFunction sample(const LogGridPtr& grid, Fn&& fn) {
  std::vector<double> v(grid->size());
  for (std::size_t i = 0; i < grid->size(); ++i) v[i] = fn(grid->node(i));
  return SampledFunction(grid, std::move(v));
}

inline void check_same_grid(const SampledFunction& f, const LogGrid& g) {
  if (!f.on_grid(g))
    throw std::invalid_argument("sample does not live on the given grid");
}

/// Trapezoid approximation of the full truncated integral of f against dt/t.
inline double integrate(const SampledFunction& f) {
  f.validate();
  const LogGrid& g = *f.grid;
  double acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) acc += g.log_weight(i) * f.values[i];
  return acc;
}

/// Trapezoid integral of f against dt/t over node range [ia, ib].
inline double integrate_between(const SampledFunction& f, std::size_t ia,
                                std::size_t ib) {
  f.validate();
  const LogGrid& g = *f.grid;
  if (ia > ib || ib >= g.size())
    throw std::invalid_argument("integrate_between: bad node range");
  const double h = g.step();
  double acc = 0.0;
  for (std::size_t i = ia; i < ib; ++i)
    acc += 0.5 * h * (f.values[i] + f.values[i + 1]);
  return acc;
}

/// Same, with bounds given as node values (must be exact nodes).
inline double integrate_between(const SampledFunction& f, double a, double b) {
  const LogGrid& g = *f.grid;
  if (a > b) throw std::invalid_argument("integrate_between: a > b");
  return integrate_between(f, g.index_of(a), g.index_of(b));
}

}  // namespace vexlab
