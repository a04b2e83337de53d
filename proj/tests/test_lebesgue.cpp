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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <limits>
#include <vector>

#include "vexlab/exponent.hpp"
#include "vexlab/families.hpp"
#include "vexlab/grid.hpp"
#include "vexlab/lebesgue.hpp"
#include "vexlab/rng.hpp"

using Catch::Approx;
using namespace vexlab;

namespace {

SampledFunction scaled(const SampledFunction& f, double c) {
  SampledFunction g = f;
  for (double& v : g.values) v *= c;
  return g;
}

}  // namespace

TEST_CASE("modular against closed-form integrals") {
  SECTION("power integrand below one") {
    // integral over (0,1] of t^2 dt/t = 1/2; second-order quadrature.
    const auto g = LogGrid::build(-30, 30, 16);
    const auto f = sample(FunctionFamily::power(1.0), g);
    const auto p = ExponentFunction::constant(2.0);
    const double got = modular_between(p, f, g->bottom(), 1.0);
    REQUIRE(got == Approx(0.5).margin(1e-3));
  }

  SECTION("dyadic indicator is integrated exactly") {
    // Nodes inside [1,2) each carry one full panel of log-length, so the
    // modular of the indicator equals ln 2 for every exponent choice.
    const auto g = LogGrid::build(-30, 30, 8);
    const auto f = sample(FunctionFamily::octave(0), g);
    for (const auto& p :
         {ExponentFunction::constant(1.0), ExponentFunction::constant(3.7),
          ExponentFunction::log_interp(1.2, 4.0)}) {
      REQUIRE(modular(p, f) == Approx(std::log(2.0)).epsilon(1e-13));
    }
  }

  SECTION("weight-sum and full-range panel-sum agree") {
    const auto g = LogGrid::build(-10, 10, 8);
    const auto f = sample(FunctionFamily::power_peak(0.5, 0.7), g);
    const auto p = ExponentFunction::log_interp(1.5, 2.5);
    const double a = modular(p, f);
    const double b = modular_between(p, f, g->bottom(), g->top());
    REQUIRE(a == Approx(b).epsilon(1e-12));
  }

  SECTION("restriction bounds must be nodes in order") {
    const auto g = LogGrid::build(-4, 4, 4);
    const auto f = sample(FunctionFamily::constant(1.0), g);
    const auto p = ExponentFunction::constant(2.0);
    REQUIRE_THROWS_AS(modular_between(p, f, 2.0, 1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(modular_between(p, f, 1.05, 2.0), std::invalid_argument);
  }
}

TEST_CASE("luxemburg norm on exactly integrable data") {
  const auto g = LogGrid::build(-30, 30, 8);

  SECTION("block indicator with constant exponent") {
    // rho(f/lambda) = ln2 / lambda^2 = 1 gives lambda = sqrt(ln 2).
    const auto f = sample(FunctionFamily::octave(0), g);
    const auto r = luxemburg_norm(ExponentFunction::constant(2.0), f);
    REQUIRE(r.norm == Approx(std::sqrt(std::log(2.0))).epsilon(1e-7));
    REQUIRE(std::fabs(r.modular_at_norm - 1.0) <= r.tolerance);
  }

  SECTION("wide indicator, fractional exponent") {
    // rho = 4 ln2 / lambda^q = 1 gives lambda = (4 ln 2)^{1/q}.
    const auto f = sample(FunctionFamily::octaves(-2, 2), g);
    const double q = 3.25;
    const auto r = luxemburg_norm(ExponentFunction::constant(q), f);
    REQUIRE(r.norm ==
            Approx(std::pow(4.0 * std::log(2.0), 1.0 / q)).epsilon(1e-7));
  }
}

TEST_CASE("constant-exponent luxemburg matches the classical norm") {
  const auto g = LogGrid::build(-30, 30, 8);
  const double q = 2.5;
  const auto p = ExponentFunction::constant(q);
  for (const auto& fam :
       {FunctionFamily::power_peak(0.5, 0.5), FunctionFamily::octaves(-3, 1),
        FunctionFamily::log_oscillation(0.8)}) {
    const auto f = sample(fam, g);
    const double lux = luxemburg_norm(p, f).norm;
    const double classical = fixed_norm(q, f, g->bottom(), g->top());
    REQUIRE(lux == Approx(classical).epsilon(1e-6));
  }
}

TEST_CASE("luxemburg norm is positively homogeneous") {
  const auto g = LogGrid::build(-30, 30, 8);
  const auto p = ExponentFunction::log_interp(1.3, 3.2);
  const auto f = sample(FunctionFamily::power_peak(0.4, 0.9), g);
  const double base = luxemburg_norm(p, f).norm;
  for (double c : {1e-6, 0.37, 5.0, 1e8}) {
    const double got = luxemburg_norm(p, scaled(f, c)).norm;
    REQUIRE(got == Approx(c * base).epsilon(1e-6));
  }
}

TEST_CASE("luxemburg norm is monotone in the integrand") {
  const auto g = LogGrid::build(-30, 30, 8);
  const auto p = ExponentFunction::log_interp(1.8, 2.7);
  // t^1 <= t^{1/2} below one and t^{-1} <= t^{-1/2} above one.
  const auto small = sample(FunctionFamily::power_peak(1.0, 1.0), g);
  const auto big = sample(FunctionFamily::power_peak(0.5, 0.5), g);
  const double ns = luxemburg_norm(p, small).norm;
  const double nb = luxemburg_norm(p, big).norm;
  REQUIRE(ns <= nb * (1.0 + 1e-7));
}

TEST_CASE("solver contract") {
  const auto g = LogGrid::build(-30, 30, 8);
  const auto p = ExponentFunction::log_interp(1.4, 3.6);
  const auto f = sample(FunctionFamily::log_oscillation(0.6), g);

  SECTION("result fields are coherent") {
    const auto r = luxemburg_norm(p, f);
    REQUIRE(r.norm > 0.0);
    REQUIRE(std::fabs(r.modular_at_norm - 1.0) <= r.tolerance);
    REQUIRE(r.bracket_lo <= r.norm);
    REQUIRE(r.norm <= r.bracket_hi);
    REQUIRE(r.iterations > 0);
    REQUIRE(r.tolerance == kDefaultNormTolerance);
  }

  SECTION("tighter tolerance is honored") {
    const auto r = luxemburg_norm(p, f, 1e-11);
    REQUIRE(std::fabs(r.modular_at_norm - 1.0) <= 1e-11);
    REQUIRE(r.tolerance == 1e-11);
  }

  SECTION("invalid tolerance is rejected") {
    REQUIRE_THROWS_AS(luxemburg_norm(p, f, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(luxemburg_norm(p, f, -1.0), std::invalid_argument);
  }

  SECTION("zero function short-circuits") {
    const auto z = sample(FunctionFamily::zero(), g);
    const auto r = luxemburg_norm(p, z);
    REQUIRE(r.norm == 0.0);
    REQUIRE(r.iterations == 0);
    REQUIRE(modular(p, z) == 0.0);
  }
}

TEST_CASE("modular saturates instead of overflowing") {
  const auto g = LogGrid::build(-30, 30, 8);
  const auto p = ExponentFunction::constant(4.0);
  const auto f = scaled(sample(FunctionFamily::octave(0), g), 1e200);
  REQUIRE(std::isinf(modular(p, f)));
  // The norm solve still succeeds by homogeneity of the scaled modular.
  const auto r = luxemburg_norm(p, f);
  const double expected = 1e200 * std::pow(std::log(2.0), 0.25);
  REQUIRE(r.norm == Approx(expected).epsilon(1e-6));
}

TEST_CASE("restricted luxemburg norm") {
  const auto g = LogGrid::build(-30, 30, 8);
  const auto p = ExponentFunction::log_interp(2.0, 3.0);

  SECTION("restriction strictly containing the support changes nothing") {
    const auto f = sample(FunctionFamily::octaves(-2, 3), g);
    const double whole = luxemburg_norm(p, f).norm;
    const double part =
        luxemburg_norm_between(p, f, std::exp2(-3), std::exp2(4)).norm;
    REQUIRE(part == Approx(whole).epsilon(1e-7));
  }

  SECTION("cutting at the support edge sheds only the boundary ramp") {
    const auto f = sample(FunctionFamily::octaves(-2, 3), g);
    const double whole = luxemburg_norm(p, f).norm;
    const double part =
        luxemburg_norm_between(p, f, std::exp2(-2), std::exp2(3)).norm;
    REQUIRE(part <= whole * (1.0 + 1e-7));
    REQUIRE(part == Approx(whole).epsilon(0.01));
  }

  SECTION("restriction away from the support is zero") {
    const auto f = sample(FunctionFamily::octaves(2, 4), g);
    const auto r = luxemburg_norm_between(p, f, std::exp2(-8), 1.0);
    REQUIRE(r.norm == 0.0);
  }

  SECTION("restriction is monotone in the window") {
    const auto f = sample(FunctionFamily::power_peak(0.5, 0.5), g);
    const double inner = luxemburg_norm_between(p, f, 0.25, 4.0).norm;
    const double outer = luxemburg_norm_between(p, f, 0.0625, 16.0).norm;
    REQUIRE(inner <= outer * (1.0 + 1e-7));
  }
}

TEST_CASE("fixed norm validation and values") {
  const auto g = LogGrid::build(-30, 30, 8);
  const auto f = sample(FunctionFamily::octave(0), g);

  SECTION("indicator closed form") {
    REQUIRE(fixed_norm(3.0, f, g->bottom(), g->top()) ==
            Approx(std::cbrt(std::log(2.0))).epsilon(1e-12));
  }

  SECTION("exponent below one is rejected") {
    REQUIRE_THROWS_AS(fixed_norm(0.5, f, 1.0, 2.0), std::invalid_argument);
    REQUIRE_THROWS_AS(
        fixed_norm(std::numeric_limits<double>::infinity(), f, 1.0, 2.0),
        std::invalid_argument);
  }
}

TEST_CASE("unit ball property") {
  const auto g = LogGrid::build(-30, 30, 8);
  const auto p = ExponentFunction::log_interp(1.6, 3.4);

  SECTION("normalized, small, and large data") {
    const auto f = sample(FunctionFamily::power_peak(0.5, 0.5), g);
    const double n = luxemburg_norm(p, f).norm;
    REQUIRE(unit_ball_check(p, scaled(f, 1.0 / n)));
    REQUIRE(unit_ball_check(p, scaled(f, 0.01 / n)));
    REQUIRE(unit_ball_check(p, scaled(f, 100.0 / n)));
    REQUIRE(unit_ball_check(p, scaled(f, (1.0 + 1e-7) / n)));
    REQUIRE(unit_ball_check(p, scaled(f, (1.0 - 1e-7) / n)));
  }

  SECTION("randomized draws across scales") {
    Rng rng(20260814);
    int checked = 0;
    for (int k = 0; k < 100; ++k) {
      const auto p_draw = ExponentFunction::log_interp(rng.uniform(1.05, 6.0),
                                                       rng.uniform(1.05, 6.0));
      FunctionFamily fam = FunctionFamily::power_peak(rng.uniform(0.1, 1.5),
                                                      rng.uniform(0.1, 1.5));
      if (rng.coin()) {
        const int j1 = rng.uniform_int(-12, 4);
        fam = FunctionFamily::octaves(j1, j1 + rng.uniform_int(1, 8));
      }
      const double c = rng.log_uniform(1e-3, 1e3);
      const auto f = scaled(sample(fam, g), c);
      REQUIRE(unit_ball_check(p_draw, f));
      ++checked;
    }
    REQUIRE(checked == 100);
  }
}

TEST_CASE("mixed norm over block sequences") {
  const auto g = LogGrid::build(-6, 6, 8);

  SECTION("single block with equal exponents reduces to the plain norm") {
    const auto p = ExponentFunction::log_interp(2.2, 3.1);
    const auto f = sample(FunctionFamily::power_peak(0.5, 0.5), g);
    MixedNormDiagnostics diag;
    const double got = mixed_norm({p, p, {f}}, kDefaultNormTolerance, &diag);
    REQUIRE(got == Approx(luxemburg_norm(p, f).norm).epsilon(1e-6));
    REQUIRE(diag.min_inner_ratio == Approx(1.0).epsilon(1e-12));
    REQUIRE_FALSE(diag.inner_ratio_below_one);
    REQUIRE(diag.outer_iterations > 0);
  }

  SECTION("dyadic partition with equal exponents reassembles the norm") {
    const auto p = ExponentFunction::log_interp(2.2, 3.1);
    const auto f = sample(FunctionFamily::power_peak(0.5, 0.5), g);
    std::vector<SampledFunction> blocks;
    for (int v = -6; v <= 6; ++v) {
      SampledFunction b = f;
      for (std::size_t i = 0; i < g->size(); ++i) {
        const double t = g->node(i);
        if (!(t >= std::exp2(v) && t < std::exp2(v + 1))) b.values[i] = 0.0;
      }
      blocks.push_back(std::move(b));
    }
    const double got = mixed_norm({p, p, std::move(blocks)});
    REQUIRE(got == Approx(luxemburg_norm(p, f).norm).epsilon(1e-6));
  }

  SECTION("two identical blocks at a constant exponent") {
    const double q = 2.0;
    const auto p = ExponentFunction::constant(q);
    const auto f = sample(FunctionFamily::octave(0), g);
    const double one = mixed_norm({p, p, {f}});
    const double two = mixed_norm({p, p, {f, f}});
    REQUIRE(two == Approx(std::pow(2.0, 1.0 / q) * one).epsilon(1e-6));
  }

  SECTION("zero blocks are skipped and counted") {
    const auto p = ExponentFunction::constant(2.0);
    const auto f = sample(FunctionFamily::octave(0), g);
    const auto z = sample(FunctionFamily::zero(), g);
    MixedNormDiagnostics diag;
    const double got = mixed_norm({p, p, {z, f, z}}, kDefaultNormTolerance,
                                  &diag);
    REQUIRE(got == Approx(mixed_norm({p, p, {f}})).epsilon(1e-8));
    REQUIRE(diag.blocks_skipped == 2);
  }

  SECTION("all-zero sequence has norm zero") {
    const auto p = ExponentFunction::constant(2.0);
    const auto z = sample(FunctionFamily::zero(), g);
    REQUIRE(mixed_norm({p, p, {z, z}}) == 0.0);
  }

  SECTION("inner ratio below one is reported, not rejected") {
    const auto outer = ExponentFunction::constant(2.0);
    const auto inner = ExponentFunction::log_interp(1.5, 3.0);
    const auto f = sample(FunctionFamily::power_peak(0.5, 0.5), g);
    MixedNormDiagnostics diag;
    const double got = mixed_norm({outer, inner, {f}}, kDefaultNormTolerance,
                                  &diag);
    REQUIRE(std::isfinite(got));
    REQUIRE(got > 0.0);
    REQUIRE(diag.inner_ratio_below_one);
    REQUIRE(diag.min_inner_ratio < 1.0);
    REQUIRE(diag.min_inner_ratio > 0.0);
  }

  SECTION("input validation") {
    const auto p = ExponentFunction::constant(2.0);
    REQUIRE_THROWS_AS(mixed_norm({p, p, {}}), std::invalid_argument);
    const auto f = sample(FunctionFamily::octave(0), g);
    const auto other = LogGrid::build(-4, 4, 8);
    const auto f2 = sample(FunctionFamily::octave(0), other);
    REQUIRE_THROWS_AS(mixed_norm({p, p, {f, f2}}), std::invalid_argument);
  }
}
