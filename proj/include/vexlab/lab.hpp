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
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vexlab/exponent.hpp"
#include "vexlab/families.hpp"
#include "vexlab/grid.hpp"
#include "vexlab/hardy.hpp"
#include "vexlab/lebesgue.hpp"
#include "vexlab/rng.hpp"

namespace vexlab {

enum class OperatorSide { kUpper, kLower };
enum class DomainMode { kFullLine, kUnitInterval };

inline const char* to_string(OperatorSide s) {
  return s == OperatorSide::kUpper ? "upper" : "lower";
}
inline const char* to_string(DomainMode m) {
  return m == DomainMode::kFullLine ? "full" : "unit";
}

/// One experiment instance: exponent, source profile, kernel degree,
/// operator side, and domain mode.
struct Scenario {
  std::string id;
  ExponentFunction p;
  FunctionFamily eps;
  double s = 1.0;
  OperatorSide which = OperatorSide::kUpper;
  DomainMode mode = DomainMode::kFullLine;
};

/// Row emitted by every lab operation. `family` concatenates the exponent
/// descriptor(s) and the source descriptor as "exponent|source" (two
/// exponents joined by ';' for cross-exponent rows) so a row is
/// reproducible from its text alone.
struct EquivalenceReport {
  std::string scenario_id;
  std::string family;
  double s = 0.0;
  std::string which;
  std::string mode;
  GridSpec grid;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio_fwd = 0.0;
  double ratio_bwd = 0.0;
  double refinement_delta = 0.0;
  double tail_delta = 0.0;
  double clog_origin = 0.0;
  double clog_infinity = 0.0;
  std::vector<std::string> flags;
  int iterations = 0;
  bool degenerate = false;

  std::string flags_string() const {
    std::string out;
    for (std::size_t i = 0; i < flags.size(); ++i) {
      if (i) out += ";";
      out += flags[i];
    }
    return out;
  }
};

// Drift thresholds: drifts above kFlagThreshold are flagged in reports;
// kStabilityThreshold is the suite-level acceptance line.
inline constexpr double kTailFlagThreshold = 0.01;
inline constexpr double kStabilityThreshold = 0.05;

namespace detail {

struct SideValues {
  double lhs = 0.0;
  double rhs = 0.0;
  int iterations = 0;
};

/// Evaluates one (lhs, rhs) pair for an operator scenario on one grid.
template <class MakeOutput>
SideValues evaluate_sides(const ExponentFunction& p, DomainMode mode,
                          const GridSpec& gs, double tol,
                          MakeOutput&& make_output) {
  if (!(gs.v_min < 0 && gs.v_max > 0))
    throw std::invalid_argument(
        "lab: grid must straddle t = 1 (v_min < 0 < v_max)");
  const LogGridPtr grid = LogGrid::build(gs);
  const SampledFunction out = make_output(grid);
  SideValues sv;
  if (mode == DomainMode::kFullLine) {
    const auto lux = luxemburg_norm(p, out, tol);
    sv.lhs = lux.norm;
    sv.iterations = lux.iterations;
    sv.rhs = fixed_norm(p.p_zero(), out, grid->bottom(), 1.0) +
             fixed_norm(p.p_infinity(), out, 1.0, grid->top());
  } else {
    const auto lux = luxemburg_norm_between(p, out, grid->bottom(), 1.0, tol);
    sv.lhs = lux.norm;
    sv.iterations = lux.iterations;
    sv.rhs = fixed_norm(p.p_zero(), out, grid->bottom(), 1.0);
  }
  return sv;
}

inline SampledFunction apply_operator(OperatorSide which, DomainMode mode,
                                      double s, const SampledFunction& eps) {
  const HardyParams hp{s};
  if (which == OperatorSide::kUpper)
    return mode == DomainMode::kFullLine ? hardy_upper(hp, eps)
                                         : hardy_upper_unit(hp, eps);
  return hardy_lower(hp, eps);
}

inline GridSpec refined(const GridSpec& gs) {
  return {gs.v_min, gs.v_max, 2 * gs.nodes_per_octave};
}

/// Extended grid for the truncation probe: +5 octaves at the top in
/// full-line mode (and -5 at the bottom, where the lower operator loses
/// mass); unit mode only extends downward since the domain is capped at 1.
inline GridSpec extended(const GridSpec& gs, DomainMode mode) {
  if (mode == DomainMode::kFullLine)
    return {gs.v_min - 5, gs.v_max + 5, gs.nodes_per_octave};
  return {gs.v_min - 5, gs.v_max, gs.nodes_per_octave};
}

inline double rel_change(double now, double then) {
  return std::fabs(now - then) / then;
}

/// Fills ratios, stability deltas and flags from the three side
/// evaluations (base, refined, extended).
inline void fill_report(EquivalenceReport& rep, const SideValues& base,
                        const SideValues& fine, const SideValues& ext) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  rep.lhs = base.lhs;
  rep.rhs = base.rhs;
  rep.iterations = base.iterations;
  if (base.lhs == 0.0 || base.rhs == 0.0) {
    rep.degenerate = true;
    rep.flags.push_back("degenerate");
    rep.ratio_fwd = rep.ratio_bwd = nan;
    rep.refinement_delta = rep.tail_delta = nan;
    return;
  }
  rep.ratio_fwd = base.lhs / base.rhs;
  rep.ratio_bwd = base.rhs / base.lhs;
  const double r_fine = fine.lhs / fine.rhs;
  const double r_ext = ext.lhs / ext.rhs;
  rep.refinement_delta =
      std::fmax(rel_change(r_fine, rep.ratio_fwd),
                rel_change(1.0 / r_fine, rep.ratio_bwd));
  rep.tail_delta = std::fmax(rel_change(r_ext, rep.ratio_fwd),
                             rel_change(1.0 / r_ext, rep.ratio_bwd));
  if (rep.refinement_delta >= kStabilityThreshold)
    rep.flags.push_back("refine>5%");
  if (rep.tail_delta > kTailFlagThreshold) rep.flags.push_back("tail>1%");
  if (rep.tail_delta >= kStabilityThreshold) rep.flags.push_back("tail>5%");
}

inline void fill_clog(EquivalenceReport& rep, const ExponentFunction& p,
                      const GridSpec& gs) {
  const LogGridPtr grid = LogGrid::build(gs);
  rep.clog_origin = log_holder_origin_constant(p, *grid);
  rep.clog_infinity = log_holder_infinity_constant(p, *grid);
}

}  // namespace detail

/// Both sides of the norm equivalence for one operator scenario, with
/// refinement and truncation stability probes.
inline EquivalenceReport equivalence_report(
    const ExponentFunction& p, double s, const FunctionFamily& eps,
    OperatorSide which, DomainMode mode, const GridSpec& gs = GridSpec{},
    double tol = kDefaultNormTolerance, const std::string& id = "adhoc") {
  auto evaluate = [&](const GridSpec& spec) {
    return detail::evaluate_sides(p, mode, spec, tol, [&](const LogGridPtr& g) {
      return detail::apply_operator(which, mode, s, sample(eps, g));
    });
  };
  EquivalenceReport rep;
  rep.scenario_id = id;
  rep.family = p.descriptor() + "|" + eps.descriptor();
  rep.s = s;
  rep.which = to_string(which);
  rep.mode = to_string(mode);
  rep.grid = gs;
  detail::fill_report(rep, evaluate(gs), evaluate(detail::refined(gs)),
                      evaluate(detail::extended(gs, mode)));
  detail::fill_clog(rep, p, gs);
  return rep;
}

inline EquivalenceReport equivalence_report(const Scenario& sc,
                                            const GridSpec& gs = GridSpec{},
                                            double tol = kDefaultNormTolerance) {
  return equivalence_report(sc.p, sc.s, sc.eps, sc.which, sc.mode, gs, tol,
                            sc.id);
}

/// One-sided bound: ||upper output|| + ||lower output|| against the
/// two-term (or one-term, unit mode) fixed-norm expression in the source
/// itself. ratio_bwd is still recorded (definitionally 1/ratio_fwd) but the
/// inequality claim is one-directional; rows carry the "one-sided" flag.
inline EquivalenceReport moreover_check(const ExponentFunction& p, double s,
                                        const FunctionFamily& eps,
                                        DomainMode mode,
                                        const GridSpec& gs = GridSpec{},
                                        double tol = kDefaultNormTolerance,
                                        const std::string& id = "moreover") {
  auto evaluate = [&](const GridSpec& spec) {
    if (!(spec.v_min < 0 && spec.v_max > 0))
      throw std::invalid_argument(
          "lab: grid must straddle t = 1 (v_min < 0 < v_max)");
    const LogGridPtr grid = LogGrid::build(spec);
    const SampledFunction eps_s = sample(eps, grid);
    const SampledFunction up = detail::apply_operator(OperatorSide::kUpper,
                                                      mode, s, eps_s);
    const SampledFunction low = detail::apply_operator(OperatorSide::kLower,
                                                       mode, s, eps_s);
    detail::SideValues sv;
    if (mode == DomainMode::kFullLine) {
      const auto lu = luxemburg_norm(p, up, tol);
      const auto ll = luxemburg_norm(p, low, tol);
      sv.lhs = lu.norm + ll.norm;
      sv.iterations = lu.iterations + ll.iterations;
      sv.rhs = fixed_norm(p.p_zero(), eps_s, grid->bottom(), 1.0) +
               fixed_norm(p.p_infinity(), eps_s, 1.0, grid->top());
    } else {
      const auto lu = luxemburg_norm_between(p, up, grid->bottom(), 1.0, tol);
      const auto ll = luxemburg_norm_between(p, low, grid->bottom(), 1.0, tol);
      sv.lhs = lu.norm + ll.norm;
      sv.iterations = lu.iterations + ll.iterations;
      sv.rhs = fixed_norm(p.p_zero(), eps_s, grid->bottom(), 1.0);
    }
    return sv;
  };
  EquivalenceReport rep;
  rep.scenario_id = id;
  rep.family = p.descriptor() + "|" + eps.descriptor();
  rep.s = s;
  rep.which = "moreover";
  rep.mode = to_string(mode);
  rep.grid = gs;
  detail::fill_report(rep, evaluate(gs), evaluate(detail::refined(gs)),
                      evaluate(detail::extended(gs, mode)));
  rep.flags.push_back("one-sided");
  detail::fill_clog(rep, p, gs);
  return rep;
}

/// Equivalence with the source itself playing the operator-output role.
/// The source must be monotone in the direction matching the side: upper
/// requires non-increasing samples, lower non-decreasing (verified on every
/// grid used). s is recorded for bookkeeping but enters no formula.
inline EquivalenceReport monotone_variant_report(
    const ExponentFunction& p, double s, const FunctionFamily& source,
    OperatorSide which, DomainMode mode = DomainMode::kFullLine,
    const GridSpec& gs = GridSpec{}, double tol = kDefaultNormTolerance,
    const std::string& id = "monotone") {
  auto evaluate = [&](const GridSpec& spec) {
    return detail::evaluate_sides(p, mode, spec, tol, [&](const LogGridPtr& g) {
      SampledFunction src = sample(source, g);
      for (std::size_t i = 0; i + 1 < src.values.size(); ++i) {
        const bool ok = which == OperatorSide::kUpper
                            ? src.values[i + 1] <= src.values[i]
                            : src.values[i + 1] >= src.values[i];
        if (!ok)
          throw std::invalid_argument(
              "monotone_variant_report: source is not monotone in the "
              "required direction");
      }
      return src;
    });
  };
  EquivalenceReport rep;
  rep.scenario_id = id;
  rep.family = p.descriptor() + "|" + source.descriptor();
  rep.s = s;
  rep.which = which == OperatorSide::kUpper ? "monotone-upper"
                                            : "monotone-lower";
  rep.mode = to_string(mode);
  rep.grid = gs;
  detail::fill_report(rep, evaluate(gs), evaluate(detail::refined(gs)),
                      evaluate(detail::extended(gs, mode)));
  detail::fill_clog(rep, p, gs);
  return rep;
}

/// Compares the variable-exponent norms of the same operator output under
/// two exponents sharing both limit values. lhs is the norm under p, rhs
/// under q.
inline EquivalenceReport cross_exponent_check(
    const ExponentFunction& p, const ExponentFunction& q, double s,
    const FunctionFamily& eps, OperatorSide which, DomainMode mode,
    const GridSpec& gs = GridSpec{}, double tol = kDefaultNormTolerance,
    const std::string& id = "cross") {
  if (p.p_zero() != q.p_zero() || p.p_infinity() != q.p_infinity())
    throw std::invalid_argument(
        "cross_exponent_check: exponents must share both limit values");
  auto evaluate = [&](const GridSpec& spec) {
    if (!(spec.v_min < 0 && spec.v_max > 0))
      throw std::invalid_argument(
          "lab: grid must straddle t = 1 (v_min < 0 < v_max)");
    const LogGridPtr grid = LogGrid::build(spec);
    const SampledFunction out =
        detail::apply_operator(which, mode, s, sample(eps, grid));
    detail::SideValues sv;
    if (mode == DomainMode::kFullLine) {
      const auto np = luxemburg_norm(p, out, tol);
      const auto nq = luxemburg_norm(q, out, tol);
      sv.lhs = np.norm;
      sv.rhs = nq.norm;
      sv.iterations = np.iterations + nq.iterations;
    } else {
      const auto np = luxemburg_norm_between(p, out, grid->bottom(), 1.0, tol);
      const auto nq = luxemburg_norm_between(q, out, grid->bottom(), 1.0, tol);
      sv.lhs = np.norm;
      sv.rhs = nq.norm;
      sv.iterations = np.iterations + nq.iterations;
    }
    return sv;
  };
  EquivalenceReport rep;
  rep.scenario_id = id;
  rep.family = p.descriptor() + ";" + q.descriptor() + "|" + eps.descriptor();
  rep.s = s;
  rep.which = which == OperatorSide::kUpper ? "cross-upper" : "cross-lower";
  rep.mode = to_string(mode);
  rep.grid = gs;
  detail::fill_report(rep, evaluate(gs), evaluate(detail::refined(gs)),
                      evaluate(detail::extended(gs, mode)));
  detail::fill_clog(rep, p, gs);
  return rep;
}

namespace detail {

inline std::string scenario_tag(const char* prefix, std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s-%03zu", prefix, i);
  return buf;
}

/// Constant-exponent sanity members pair with a source whose operator
/// output has mass on one side of t = 1 only; both sides of the
/// equivalence then reduce to the same single-term norm and the predicted
/// ratio is 1. (With mass on both sides a constant exponent splits into a
/// two-term sum, whose ratio to the single norm is the structural
/// 2^(1/q - 1) -- that is a property of the split, not an error.)
inline FunctionFamily constant_member_source(OperatorSide which) {
  return which == OperatorSide::kUpper ? FunctionFamily::octaves(-8, -2)
                                       : FunctionFamily::octaves(2, 8);
}

}  // namespace detail

/// The standard full-line suite: log-interpolating and log-perturbed
/// exponents with limit values in [1.2, 4], four source families, all of
/// s in {0.5, 1, 2}, both operator sides, plus constant-exponent sanity
/// members with side-aligned sources.
inline std::vector<Scenario> standard_suite() {
  std::vector<Scenario> out;
  const std::vector<ExponentFunction> exps = {
      ExponentFunction::log_interp(3.0, 2.0),
      ExponentFunction::log_interp(2.0, 3.0),
      ExponentFunction::log_interp(1.2, 4.0),
      ExponentFunction::log_perturbed(ExponentFunction::log_interp(2.0, 3.0),
                                      0.4, 0.0),
      ExponentFunction::log_perturbed(ExponentFunction::log_interp(3.0, 1.5),
                                      0.3, 1.0),
  };
  const std::vector<FunctionFamily> sources = {
      FunctionFamily::power_peak(0.5, 0.5),
      FunctionFamily::power_peak(0.25, 1.0),
      FunctionFamily::log_oscillation(0.75),
      FunctionFamily::octaves(-5, -1),
  };
  const double svals[] = {0.5, 1.0, 2.0};
  std::size_t n = 0;
  for (const auto& p : exps)
    for (const auto& eps : sources)
      for (double s : svals)
        for (OperatorSide w : {OperatorSide::kUpper, OperatorSide::kLower})
          out.push_back({detail::scenario_tag("std", n++), p, eps, s, w,
                         DomainMode::kFullLine});
  for (double c : {1.5, 2.5})
    for (double s : svals)
      for (OperatorSide w : {OperatorSide::kUpper, OperatorSide::kLower})
        out.push_back({detail::scenario_tag("std", n++),
                       ExponentFunction::constant(c),
                       detail::constant_member_source(w), s, w,
                       DomainMode::kFullLine});
  return out;
}

/// The unit-interval suite. Constant members here may use any source: both
/// sides are the same one-term norm by construction in unit mode.
inline std::vector<Scenario> unit_suite() {
  std::vector<Scenario> out;
  const std::vector<ExponentFunction> exps = {
      ExponentFunction::log_interp(3.0, 2.0),
      ExponentFunction::log_interp(2.0, 3.0),
      ExponentFunction::log_interp(1.2, 4.0),
      ExponentFunction::log_perturbed(ExponentFunction::log_interp(2.0, 3.0),
                                      0.4, 0.0),
      ExponentFunction::log_perturbed(ExponentFunction::log_interp(3.0, 1.5),
                                      0.3, 1.0),
      ExponentFunction::constant(1.5),
      ExponentFunction::constant(2.5),
  };
  const std::vector<FunctionFamily> sources = {
      FunctionFamily::octave(-3),
      FunctionFamily::octaves(-6, -2),
      FunctionFamily::power_peak(0.5, 0.5),
      FunctionFamily::log_oscillation(0.6),
  };
  const double svals[] = {0.5, 1.0, 2.0};
  std::size_t n = 0;
  for (const auto& p : exps)
    for (const auto& eps : sources)
      for (double s : svals)
        for (OperatorSide w : {OperatorSide::kUpper, OperatorSide::kLower})
          out.push_back({detail::scenario_tag("unit", n++), p, eps, s, w,
                         DomainMode::kUnitInterval});
  return out;
}

/// Runs every scenario and returns the reports sorted by id.
inline std::vector<EquivalenceReport> run_suite(
    const std::vector<Scenario>& scenarios, const GridSpec& gs = GridSpec{},
    double tol = kDefaultNormTolerance) {
  std::vector<EquivalenceReport> out;
  out.reserve(scenarios.size());
  for (const auto& sc : scenarios) out.push_back(equivalence_report(sc, gs, tol));
  std::sort(out.begin(), out.end(),
            [](const EquivalenceReport& a, const EquivalenceReport& b) {
              return a.scenario_id < b.scenario_id;
            });
  return out;
}

/// Endpoint-matched exponent pairs for the cross-exponent remark: the
/// perturbation phase -1 makes sin(1 + phase) = 0, so both limit values of
/// the perturbed exponent equal the base's bit-for-bit.
inline std::vector<std::pair<ExponentFunction, ExponentFunction>>
cross_exponent_pairs(std::size_t count) {
  std::vector<std::pair<ExponentFunction, ExponentFunction>> out;
  for (std::size_t i = 0; i < count; ++i) {
    const double p0 = 1.3 + 0.12 * static_cast<double>(i % 20);
    const double pinf = 3.9 - 0.11 * static_cast<double>(i % 20);
    const double amp = 0.15 + 0.015 * static_cast<double>(i % 20);
    const auto base = ExponentFunction::log_interp(p0, pinf);
    out.emplace_back(base, ExponentFunction::log_perturbed(base, amp, -1.0));
  }
  return out;
}

/// Random-search configuration: draws outside these windows are skipped
/// (and counted), so widening any window only adds accepted tuples.
struct SearchSpace {
  double endpoint_lo = 1.2;
  double endpoint_hi = 4.0;
  double amplitude_lo = 0.0;
  double amplitude_hi = 0.6;
  double s_lo = 0.5;
  double s_hi = 2.0;
  int top_k = 10;
  DomainMode mode = DomainMode::kFullLine;

  void validate() const {
    if (!(endpoint_lo >= 1.0) || !(endpoint_hi >= endpoint_lo) ||
        !(amplitude_lo >= 0.0) || !(amplitude_hi >= amplitude_lo) ||
        !(s_lo > 0.0) || !(s_hi >= s_lo) || top_k < 1)
      throw std::invalid_argument("SearchSpace: inconsistent ranges");
  }
};

struct SearchResult {
  std::vector<EquivalenceReport> top;  // sorted by worst ratio, descending
  std::size_t evaluated = 0;
  std::size_t skipped_out_of_range = 0;
  std::size_t skipped_degenerate = 0;
  std::uint64_t seed = 0;
};

inline double worst_ratio(const EquivalenceReport& r) {
  return std::fmax(r.ratio_fwd, r.ratio_bwd);
}

/// Seeded random search for worst-case equivalence ratios. Tuples are
/// drawn from one fixed master distribution regardless of the requested
/// windows; each draw consumes the same random variates, so runs with
/// nested windows see nested accepted sets.
inline SearchResult adversarial_search(const SearchSpace& space,
                                       std::size_t budget,
                                       std::uint64_t seed,
                                       const GridSpec& gs = GridSpec{},
                                       double tol = kDefaultNormTolerance) {
  space.validate();
  if (budget < 1) throw std::invalid_argument("adversarial_search: budget < 1");
  Rng rng(seed);
  SearchResult result;
  result.seed = seed;
  constexpr double kPi = std::numbers::pi;
  for (std::size_t draw = 0; draw < budget; ++draw) {
    // Master draw (fixed ranges; independent of the requested space).
    const double p0 = rng.uniform(1.05, 6.0);
    const double pinf = rng.uniform(1.05, 6.0);
    const double amp = rng.uniform(0.0, 1.5);
    const double phase = rng.uniform(-kPi, kPi);
    const double s = rng.uniform(0.1, 4.0);
    const OperatorSide which =
        rng.coin() ? OperatorSide::kUpper : OperatorSide::kLower;
    const int eps_kind = rng.uniform_int(0, 2);
    const double e1 = rng.uniform(0.1, 1.5);
    const double e2 = rng.uniform(0.1, 1.5);
    const int j1 = rng.uniform_int(-12, -2);
    const int jspan = rng.uniform_int(1, 8);

    const bool accepted = p0 >= space.endpoint_lo && p0 <= space.endpoint_hi &&
                          pinf >= space.endpoint_lo &&
                          pinf <= space.endpoint_hi &&
                          amp >= space.amplitude_lo &&
                          amp <= space.amplitude_hi && s >= space.s_lo &&
                          s <= space.s_hi;
    if (!accepted) {
      ++result.skipped_out_of_range;
      continue;
    }
    const ExponentFunction base = ExponentFunction::log_interp(p0, pinf);
    const ExponentFunction p =
        amp > 0.0 ? ExponentFunction::log_perturbed(base, amp, phase) : base;
    const bool effectively_constant =
        amp == 0.0 && p.p_zero() == p.p_infinity();
    FunctionFamily eps = FunctionFamily::power_peak(e1, e2);
    if (eps_kind == 1) eps = FunctionFamily::log_oscillation(e1);
    if (eps_kind == 2) eps = FunctionFamily::octaves(j1, j1 + jspan);
    // Constant-exponent draws follow the suite's sanity convention of a
    // side-aligned one-sided source (see constant_member_source).
    if (effectively_constant) eps = detail::constant_member_source(which);

    char idbuf[48];
    std::snprintf(idbuf, sizeof(idbuf), "search-%llu-%04zu",
                  static_cast<unsigned long long>(seed), draw);
    EquivalenceReport rep =
        equivalence_report(p, s, eps, which, space.mode, gs, tol, idbuf);
    ++result.evaluated;
    if (rep.degenerate) {
      ++result.skipped_degenerate;
      continue;
    }
    result.top.push_back(std::move(rep));
  }
  std::sort(result.top.begin(), result.top.end(),
            [](const EquivalenceReport& a, const EquivalenceReport& b) {
              if (worst_ratio(a) != worst_ratio(b))
                return worst_ratio(a) > worst_ratio(b);
              return a.scenario_id < b.scenario_id;
            });
  if (result.top.size() > static_cast<std::size_t>(space.top_k))
    result.top.resize(static_cast<std::size_t>(space.top_k));
  return result;
}

}  // namespace vexlab
