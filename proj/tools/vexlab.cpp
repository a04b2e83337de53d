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

// Command-line frontend for the vexlab library. Subcommands:
//   norm    Luxemburg norm of one source under one exponent.
//   equiv   Norm-equivalence reports for a scenario or a whole suite.
//   lemma   Randomized bound checks (discrete summability + pointwise).
//   search  Seeded random search for worst-case equivalence ratios.
// Exit codes: 0 success, 1 runtime failure or violated bound, 2 bad usage.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vexlab/descriptor.hpp"
#include "vexlab/hardy.hpp"
#include "vexlab/lab.hpp"
#include "vexlab/lebesgue.hpp"
#include "vexlab/report_io.hpp"
#include "vexlab/rng.hpp"

namespace {

/// Everything a run needs, resolvable identically from flags or from a
/// key=value config file (see --config on each subcommand).
struct RunConfig {
  std::string subcommand;
  std::string p;                         // exponent descriptor
  std::string q;                         // second exponent (cross compare)
  std::string f = "powerpeak(0.5,0.5)";  // source descriptor
  std::string grid = "grid(-30,30,8)";
  double s = 1.0;
  std::string which = "upper";
  std::string mode = "full";
  std::string suite;
  double tol = 1e-8;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "csv";
  std::size_t budget = 500;
  int top = 10;
  std::string check = "all";
  std::size_t draws = 1000;
  std::size_t margin_draws = 200;
  bool moreover = false;
  bool verbose = false;
  bool dump = false;
  std::string config_path;
};

/// Applies key=value pairs from a config file to the parsed subcommand.
/// Keys are the long flag names without the leading dashes; values use the
/// same syntax as the command line. Flags given on the command line win over
/// the file; unknown or malformed keys are rejected.
void apply_config_file(CLI::App* sub, const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("--config: cannot open '" + path + "'");
  std::string line;
  std::size_t lineno = 0;
  auto trim = [](std::string s) {
    const char* ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return std::string();
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--config: line " + std::to_string(lineno) +
                                  " of '" + path + "' is not key=value");
    const std::string key = trim(text.substr(0, eq));
    std::string value = trim(text.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    CLI::Option* opt =
        key == "config" ? nullptr : sub->get_option_no_throw("--" + key);
    if (opt == nullptr)
      throw std::invalid_argument("--config: unknown key '" + key + "' in '" +
                                  path + "'");
    if (opt->count() > 0) continue;  // command line wins
    opt->add_result(value);
    opt->run_callback();
  }
}

/// Default output directory for bare file names.
std::string resolve_out(const std::string& out) {
  if (out.empty() || out.find('/') != std::string::npos) return out;
  const char* dir = std::getenv("VEXLAB_OUTPUT_DIR");
  if (dir && *dir) return std::string(dir) + "/" + out;
  return out;
}

/// Parses a descriptor, tagging errors with the flag they arrived through.
template <class Fn>
auto parse_flag(const char* flag, const std::string& text, Fn&& parse)
    -> decltype(parse(text)) {
  try {
    return parse(text);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(flag) + ": " + e.what());
  }
}

void dump_config(const RunConfig& c) {
  std::printf("subcommand=%s\n", c.subcommand.c_str());
  std::printf("p=%s\n", c.p.c_str());
  std::printf("q=%s\n", c.q.c_str());
  std::printf("f=%s\n", c.f.c_str());
  std::printf("grid=%s\n", c.grid.c_str());
  std::printf("s=%.12g\n", c.s);
  std::printf("which=%s\n", c.which.c_str());
  std::printf("mode=%s\n", c.mode.c_str());
  std::printf("suite=%s\n", c.suite.c_str());
  std::printf("tol=%.12g\n", c.tol);
  std::printf("seed=%" PRIu64 "\n", c.seed);
  std::printf("out=%s\n", c.out.c_str());
  std::printf("format=%s\n", c.format.c_str());
  std::printf("budget=%zu\n", c.budget);
  std::printf("top=%d\n", c.top);
  std::printf("check=%s\n", c.check.c_str());
  std::printf("draws=%zu\n", c.draws);
  std::printf("margin-draws=%zu\n", c.margin_draws);
  std::printf("moreover=%d\n", c.moreover ? 1 : 0);
  std::printf("verbose=%d\n", c.verbose ? 1 : 0);
}

vexlab::OperatorSide parse_side(const std::string& which) {
  if (which == "upper") return vexlab::OperatorSide::kUpper;
  if (which == "lower") return vexlab::OperatorSide::kLower;
  throw std::invalid_argument("--which: expected 'upper' or 'lower', got '" +
                              which + "'");
}

vexlab::DomainMode parse_mode(const std::string& mode) {
  if (mode == "full") return vexlab::DomainMode::kFullLine;
  if (mode == "unit") return vexlab::DomainMode::kUnitInterval;
  throw std::invalid_argument("--mode: expected 'full' or 'unit', got '" +
                              mode + "'");
}

vexlab::ReportFormat parse_format(const std::string& format) {
  if (format == "csv") return vexlab::ReportFormat::kCsv;
  if (format == "json") return vexlab::ReportFormat::kJson;
  throw std::invalid_argument("--format: expected 'csv' or 'json', got '" +
                              format + "'");
}

// ---------------------------------------------------------------------------
// norm
// ---------------------------------------------------------------------------

int cmd_norm(const RunConfig& cfg) {
  if (cfg.p.empty()) throw std::invalid_argument("--p is required");
  if (cfg.f.empty()) throw std::invalid_argument("--f is required");
  const auto p = parse_flag("--p", cfg.p, vexlab::parse_exponent);
  const auto fam = parse_flag("--f", cfg.f, vexlab::parse_function);
  const auto gs = parse_flag("--grid", cfg.grid, vexlab::parse_grid);
  const auto grid = vexlab::LogGrid::build(gs);
  const auto f = vexlab::sample(fam, grid);
  const auto res = vexlab::luxemburg_norm(p, f, cfg.tol);
  std::printf("norm=%.12g\n", res.norm);
  std::printf("modular=%.12g\n", vexlab::modular(p, f));
  std::printf("modular_at_norm=%.12g\n", res.modular_at_norm);
  std::printf("iterations=%d\n", res.iterations);
  std::printf("bracket=[%.12g,%.12g]\n", res.bracket_lo, res.bracket_hi);
  std::printf("tolerance=%.12g\n", res.tolerance);
  return 0;
}

// ---------------------------------------------------------------------------
// equiv
// ---------------------------------------------------------------------------

int cmd_equiv(const RunConfig& cfg) {
  const auto gs = parse_flag("--grid", cfg.grid, vexlab::parse_grid);
  const auto mode = parse_mode(cfg.mode);
  const auto format = parse_format(cfg.format);
  std::vector<vexlab::EquivalenceReport> reports;

  if (!cfg.p.empty()) {
    // Single scenario.
    const auto p = parse_flag("--p", cfg.p, vexlab::parse_exponent);
    const auto fam = parse_flag("--f", cfg.f, vexlab::parse_function);
    if (!cfg.q.empty()) {
      const auto q = parse_flag("--q", cfg.q, vexlab::parse_exponent);
      reports.push_back(vexlab::cross_exponent_check(
          p, q, cfg.s, fam, parse_side(cfg.which), mode, gs, cfg.tol));
    } else if (cfg.moreover) {
      reports.push_back(
          vexlab::moreover_check(p, cfg.s, fam, mode, gs, cfg.tol));
    } else {
      reports.push_back(vexlab::equivalence_report(
          p, cfg.s, fam, parse_side(cfg.which), mode, gs, cfg.tol));
    }
  } else {
    // A named suite; --mode picks one when --suite is not given.
    std::string suite = cfg.suite;
    if (suite.empty())
      suite = mode == vexlab::DomainMode::kUnitInterval ? "unit" : "standard";
    if (suite == "standard")
      reports = vexlab::run_suite(vexlab::standard_suite(), gs, cfg.tol);
    else if (suite == "unit")
      reports = vexlab::run_suite(vexlab::unit_suite(), gs, cfg.tol);
    else
      throw std::invalid_argument(
          "--suite: expected 'standard' or 'unit', got '" + suite + "'");
  }

  double worst = std::numeric_limits<double>::quiet_NaN();
  std::size_t degenerate = 0;
  for (const auto& r : reports) {
    if (r.degenerate) {
      ++degenerate;
      continue;
    }
    const double w = vexlab::worst_ratio(r);
    if (std::isnan(worst) || w > worst) worst = w;
  }
  if (!cfg.out.empty())
    vexlab::export_report(reports, resolve_out(cfg.out), format);
  if (cfg.verbose)
    for (const auto& r : reports)
      std::printf("%s worst=%.6g fwd=%.6g bwd=%.6g [%s]\n",
                  r.scenario_id.c_str(), vexlab::worst_ratio(r), r.ratio_fwd,
                  r.ratio_bwd, r.family.c_str());
  std::printf("scenarios=%zu degenerate=%zu worst_ratio=%.12g\n",
              reports.size(), degenerate, worst);
  return 0;
}

// ---------------------------------------------------------------------------
// lemma
// ---------------------------------------------------------------------------

int lemma_discrete(const RunConfig& cfg, bool& violated) {
  const double inf = std::numeric_limits<double>::infinity();
  vexlab::Rng rng(cfg.seed);
  double max_ratio = 0.0;
  std::size_t runs = 0;
  for (double a : {0.3, 0.7}) {
    for (double sigma : {0.0, 1.0, 2.0}) {
      for (double p : {0.5, 1.0, 2.0, inf}) {
        vexlab::DiscreteHardyParams params;
        params.a = a;
        params.sigma = sigma;
        params.p = p;
        std::vector<double> eps(params.window_size());
        for (std::size_t d = 0; d < cfg.draws; ++d) {
          for (double& e : eps) e = rng.coin() ? rng.uniform01() : 0.0;
          const auto chk = vexlab::discrete_hardy_check(params, eps);
          ++runs;
          max_ratio = std::fmax(max_ratio, chk.ratio);
          if (chk.ratio > 1.0) {
            violated = true;
            std::printf(
                "VIOLATION discrete: a=%.17g sigma=%.17g p=%.17g seed=%" PRIu64
                " draw=%zu ratio=%.17g\n",
                a, sigma, p, cfg.seed, d, chk.ratio);
            std::printf("sequence=");
            for (std::size_t i = 0; i < eps.size(); ++i)
              std::printf(i ? ",%.17g" : "%.17g", eps[i]);
            std::printf("\n");
          }
        }
      }
    }
  }
  std::printf("discrete: runs=%zu max_ratio=%.12g\n", runs, max_ratio);
  return 0;
}

int lemma_pointwise(const RunConfig& cfg, bool& violated) {
  const auto gs = parse_flag("--grid", cfg.grid, vexlab::parse_grid);
  if (gs.v_min > -22 || gs.v_max < 26)
    throw std::invalid_argument(
        "--grid: pointwise checks draw windows over [2^-20, 2^24]; "
        "need v_min <= -22 and v_max >= 26");
  const auto grid = vexlab::LogGrid::build(gs);
  const struct {
    vexlab::PointwiseVariant variant;
    const char* name;
  } variants[] = {
      {vexlab::PointwiseVariant::kOriginPointwise, "origin-pointwise"},
      {vexlab::PointwiseVariant::kOriginLimit, "origin-limit"},
      {vexlab::PointwiseVariant::kInfinityLimit, "infinity-limit"},
  };
  for (const auto& v : variants) {
    vexlab::Rng rng(cfg.seed);
    double min_margin = std::numeric_limits<double>::infinity();
    double min_ungrouped = std::numeric_limits<double>::infinity();
    for (std::size_t d = 0; d < cfg.margin_draws; ++d) {
      const double p0 = rng.uniform(1.05, 5.0);
      const double pinf = rng.uniform(1.05, 5.0);
      const auto base = vexlab::ExponentFunction::log_interp(p0, pinf);
      const auto p = rng.coin()
                         ? base
                         : vexlab::ExponentFunction::log_perturbed(
                               base, rng.uniform(0.0, 0.5),
                               rng.uniform(-3.0, 3.0));
      vexlab::PointwiseBoundSpec spec;
      spec.m = rng.uniform(0.5, 3.0);
      spec.variant = v.variant;
      const bool origin = v.variant != vexlab::PointwiseVariant::kInfinityLimit;
      const int lo = origin ? rng.uniform_int(-20, -6) : rng.uniform_int(4, 16);
      const int hi = origin ? rng.uniform_int(lo + 2, -1)
                            : rng.uniform_int(lo + 2, 24);
      spec.q_lo = grid->index_of(std::exp2(lo));
      spec.q_hi = grid->index_of(std::exp2(hi));
      const double level = rng.uniform(0.05, 1.0);
      auto fam = vexlab::FunctionFamily::constant(level);
      if (rng.coin())
        fam = vexlab::FunctionFamily::power_peak(rng.uniform(0.1, 1.0),
                                                 rng.uniform(0.1, 1.0));
      auto f = vexlab::sample(fam, grid);
      for (double& x : f.values) x = std::fmin(x, 1.0);
      const auto rep = vexlab::pointwise_bound_check(p, spec, f);
      min_margin = std::fmin(min_margin, rep.min_margin);
      min_ungrouped = std::fmin(min_ungrouped, rep.min_margin_ungrouped);
      if (rep.min_margin < -1e-10) {
        violated = true;
        std::printf(
            "VIOLATION pointwise: variant=%s p=%s f=%s m=%.17g window=[%d,%d] "
            "seed=%" PRIu64 " draw=%zu margin=%.17g\n",
            v.name, p.descriptor().c_str(), fam.descriptor().c_str(), spec.m,
            lo, hi, cfg.seed, d, rep.min_margin);
      }
    }
    if (cfg.verbose)
      std::printf("pointwise[%s]: draws=%zu min_margin=%.12g "
                  "min_margin_ungrouped=%.12g\n",
                  v.name, cfg.margin_draws, min_margin, min_ungrouped);
    else
      std::printf("pointwise[%s]: draws=%zu min_margin=%.12g\n", v.name,
                  cfg.margin_draws, min_margin);
  }
  return 0;
}

int cmd_lemma(const RunConfig& cfg) {
  if (cfg.check != "discrete" && cfg.check != "pointwise" && cfg.check != "all")
    throw std::invalid_argument(
        "--check: expected 'discrete', 'pointwise', or 'all', got '" +
        cfg.check + "'");
  bool violated = false;
  if (cfg.check == "discrete" || cfg.check == "all")
    lemma_discrete(cfg, violated);
  if (cfg.check == "pointwise" || cfg.check == "all")
    lemma_pointwise(cfg, violated);
  std::printf("result=%s\n", violated ? "FAIL" : "PASS");
  return violated ? 1 : 0;
}

// ---------------------------------------------------------------------------
// search
// ---------------------------------------------------------------------------

int cmd_search(const RunConfig& cfg) {
  const auto gs = parse_flag("--grid", cfg.grid, vexlab::parse_grid);
  const auto format = parse_format(cfg.format);
  vexlab::SearchSpace space;
  space.mode = parse_mode(cfg.mode);
  space.top_k = cfg.top;
  const auto result =
      vexlab::adversarial_search(space, cfg.budget, cfg.seed, gs, cfg.tol);
  if (!cfg.out.empty())
    vexlab::export_report(result.top, resolve_out(cfg.out), format);
  std::printf("evaluated=%zu skipped_out_of_range=%zu skipped_degenerate=%zu\n",
              result.evaluated, result.skipped_out_of_range,
              result.skipped_degenerate);
  for (const auto& r : result.top)
    std::printf("%s worst=%.6g fwd=%.6g bwd=%.6g s=%.4g which=%s [%s]\n",
                r.scenario_id.c_str(), vexlab::worst_ratio(r), r.ratio_fwd,
                r.ratio_bwd, r.s, r.which.c_str(), r.family.c_str());
  return 0;
}

void add_common_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--config", cfg.config_path,
                  "Read options from a key=value file (same keys as flags; "
                  "command-line flags take precedence)");
  sub->add_option("--grid", cfg.grid, "Grid descriptor grid(vmin,vmax,npo)")
      ->capture_default_str();
  sub->add_option("--tol", cfg.tol, "Norm solver tolerance")
      ->capture_default_str();
  sub->add_flag("--dump-config", cfg.dump,
                "Print the resolved run configuration and exit");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{
      "vexlab: numerical experiments with variable-exponent norms on the "
      "multiplicative half-line"};
  app.require_subcommand(1);

  CLI::App* norm =
      app.add_subcommand("norm", "Luxemburg norm of a sampled source");
  norm->add_option("--p", cfg.p,
                   "Exponent descriptor, e.g. loginterp(3,2) (required)");
  norm->add_option("--f", cfg.f, "Source descriptor, e.g. powerpeak(0.5,0.5)")
      ->capture_default_str();
  add_common_flags(norm, cfg);

  CLI::App* equiv = app.add_subcommand(
      "equiv", "Norm-equivalence reports for a scenario or a suite");
  equiv->add_option("--p", cfg.p,
                    "Exponent descriptor (omit to run a whole suite)");
  equiv->add_option("--q", cfg.q,
                    "Second exponent for a cross-exponent comparison");
  equiv->add_option("--f", cfg.f, "Source descriptor")->capture_default_str();
  equiv->add_option("--s", cfg.s, "Kernel degree s > 0")
      ->capture_default_str();
  equiv->add_option("--which", cfg.which, "Operator side: upper|lower")
      ->capture_default_str();
  equiv->add_option("--mode", cfg.mode, "Domain mode: full|unit")
      ->capture_default_str();
  equiv->add_option("--suite", cfg.suite, "Named suite: standard|unit");
  equiv->add_flag("--moreover", cfg.moreover,
                  "Check the one-sided sum bound instead of the equivalence");
  equiv->add_option("--out", cfg.out,
                    "Report file (bare names go to $VEXLAB_OUTPUT_DIR)");
  equiv->add_option("--format", cfg.format, "Report format: csv|json")
      ->capture_default_str();
  equiv->add_flag("--verbose", cfg.verbose, "Print one line per scenario");
  add_common_flags(equiv, cfg);

  CLI::App* lemma = app.add_subcommand(
      "lemma", "Randomized checks of the discrete and pointwise bounds");
  lemma->add_option("--check", cfg.check,
                    "Which bounds: discrete|pointwise|all")
      ->capture_default_str();
  lemma->add_option("--draws", cfg.draws,
                    "Random sequences per (a,sigma,p) combination")
      ->capture_default_str();
  lemma->add_option("--margin-draws", cfg.margin_draws,
                    "Random draws per pointwise variant")
      ->capture_default_str();
  lemma->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  lemma->add_flag("--verbose", cfg.verbose,
                  "Also print margins with the damping factor ungrouped");
  add_common_flags(lemma, cfg);

  CLI::App* search = app.add_subcommand(
      "search", "Seeded random search for worst-case equivalence ratios");
  search->add_option("--budget", cfg.budget, "Number of random draws")
      ->capture_default_str();
  search->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  search->add_option("--top", cfg.top, "Rows kept in the worst-case table")
      ->capture_default_str();
  search->add_option("--mode", cfg.mode, "Domain mode: full|unit")
      ->capture_default_str();
  search->add_option("--out", cfg.out,
                     "Report file (bare names go to $VEXLAB_OUTPUT_DIR)");
  search->add_option("--format", cfg.format, "Report format: csv|json")
      ->capture_default_str();
  add_common_flags(search, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* active = nullptr;
  for (CLI::App* sub : {norm, equiv, lemma, search})
    if (sub->parsed()) {
      cfg.subcommand = sub->get_name();
      active = sub;
    }

  try {
    if (!cfg.config_path.empty()) apply_config_file(active, cfg.config_path);
    if (cfg.dump) {
      dump_config(cfg);
      return 0;
    }
    if (norm->parsed()) return cmd_norm(cfg);
    if (equiv->parsed()) return cmd_equiv(cfg);
    if (lemma->parsed()) return cmd_lemma(cfg);
    return cmd_search(cfg);
  } catch (const vexlab::SolverError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
