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
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "vexlab/lab.hpp"
#include "vexlab/report_io.hpp"

using namespace vexlab;

namespace {

EquivalenceReport sample_report() {
  EquivalenceReport r;
  r.scenario_id = "std-007";
  r.family = "loginterp(3,2)|powerpeak(0.5,0.5)";
  r.s = 1.5;
  r.which = "upper";
  r.mode = "full";
  r.grid = GridSpec{-30, 30, 8};
  r.lhs = 1.25;
  r.rhs = 1.5;
  r.ratio_fwd = 1.25 / 1.5;
  r.ratio_bwd = 1.5 / 1.25;
  r.refinement_delta = 0.001;
  r.tail_delta = 0.002;
  r.clog_origin = 0.3;
  r.clog_infinity = 1.0;
  r.flags = {};
  r.iterations = 42;
  r.degenerate = false;
  return r;
}

std::string read_all(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("csv header and row shape") {
  REQUIRE(std::string(kReportCsvHeader) ==
          "scenario_id,family,s,which,mode,grid,lhs,rhs,ratio_fwd,ratio_bwd,"
          "refinement_delta,tail_delta,clog_origin,clog_infinity,flags");

  SECTION("empty input yields only the header") {
    REQUIRE(to_csv({}) == std::string(kReportCsvHeader) + "\n");
  }

  SECTION("one row per report, column count matches") {
    const auto csv = to_csv({sample_report()});
    std::istringstream lines(csv);
    std::string header, row, extra;
    REQUIRE(std::getline(lines, header));
    REQUIRE(std::getline(lines, row));
    REQUIRE_FALSE(std::getline(lines, extra));
    // The family and grid fields contain commas, so they must be quoted.
    REQUIRE(row.find("\"loginterp(3,2)|powerpeak(0.5,0.5)\"") !=
            std::string::npos);
    REQUIRE(row.find("\"grid(-30,30,8)\"") != std::string::npos);
    // Counting unquoted commas: 14 separators for 15 columns.
    int commas = 0;
    bool quoted = false;
    for (char c : row) {
      if (c == '"') quoted = !quoted;
      if (c == ',' && !quoted) ++commas;
    }
    REQUIRE(commas == 14);
  }

  SECTION("numbers carry twelve significant digits") {
    auto r = sample_report();
    r.lhs = 1.0 / 3.0;
    const auto csv = to_csv_row(r);
    REQUIRE(csv.find("0.333333333333") != std::string::npos);
  }

  SECTION("degenerate rows spell nan") {
    auto r = sample_report();
    r.ratio_fwd = std::numeric_limits<double>::quiet_NaN();
    r.tail_delta = std::numeric_limits<double>::quiet_NaN();
    r.flags = {"degenerate"};
    const auto row = to_csv_row(r);
    REQUIRE(row.find(",nan,") != std::string::npos);
    REQUIRE(row.find("degenerate") != std::string::npos);
  }

  SECTION("embedded quotes are doubled") {
    REQUIRE(detail::csv_escape("a\"b") == "\"a\"\"b\"");
    REQUIRE(detail::csv_escape("plain") == "plain");
    REQUIRE(detail::csv_escape("with,comma") == "\"with,comma\"");
  }

  SECTION("flag lists join with semicolons") {
    auto r = sample_report();
    r.flags = {"tail>1%", "one-sided"};
    REQUIRE(r.flags_string() == "tail>1%;one-sided");
    const auto row = to_csv_row(r);
    REQUIRE(row.find("tail>1%;one-sided") != std::string::npos);
  }
}

TEST_CASE("json round-trip") {
  SECTION("plain report survives") {
    const auto r = sample_report();
    const auto j = to_json(r);
    const auto back = report_from_json(j);
    REQUIRE(back.scenario_id == r.scenario_id);
    REQUIRE(back.family == r.family);
    REQUIRE(back.s == r.s);
    REQUIRE(back.which == r.which);
    REQUIRE(back.mode == r.mode);
    REQUIRE(back.grid == r.grid);
    REQUIRE(back.lhs == r.lhs);
    REQUIRE(back.rhs == r.rhs);
    REQUIRE(back.ratio_fwd == r.ratio_fwd);
    REQUIRE(back.ratio_bwd == r.ratio_bwd);
    REQUIRE(back.refinement_delta == r.refinement_delta);
    REQUIRE(back.tail_delta == r.tail_delta);
    REQUIRE(back.clog_origin == r.clog_origin);
    REQUIRE(back.clog_infinity == r.clog_infinity);
    REQUIRE(back.iterations == r.iterations);
    REQUIRE(back.degenerate == r.degenerate);
    REQUIRE(back.flags == r.flags);
  }

  SECTION("nan fields map to text and back") {
    auto r = sample_report();
    r.ratio_fwd = std::numeric_limits<double>::quiet_NaN();
    r.degenerate = true;
    r.flags = {"degenerate", "tail>1%"};
    const auto j = to_json(r);
    REQUIRE(j.at("ratio_fwd").is_string());
    REQUIRE(j.at("ratio_fwd").get<std::string>() == "nan");
    const auto back = report_from_json(j);
    REQUIRE(std::isnan(back.ratio_fwd));
    REQUIRE(back.degenerate);
    REQUIRE(back.flags == std::vector<std::string>{"degenerate", "tail>1%"});
  }

  SECTION("arrays preserve order") {
    auto a = sample_report();
    auto b = sample_report();
    b.scenario_id = "std-008";
    const auto arr = to_json(std::vector<EquivalenceReport>{a, b});
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 2);
    const auto back = reports_from_json(arr);
    REQUIRE(back.size() == 2);
    REQUIRE(back[0].scenario_id == "std-007");
    REQUIRE(back[1].scenario_id == "std-008");
  }

  SECTION("live reports serialize cleanly") {
    const auto rep = equivalence_report(
        ExponentFunction::log_interp(2.0, 3.0), 1.0,
        FunctionFamily::power_peak(0.5, 0.5), OperatorSide::kUpper,
        DomainMode::kFullLine, GridSpec{-12, 12, 6});
    const auto back = report_from_json(to_json(rep));
    REQUIRE(back.ratio_fwd == rep.ratio_fwd);
    REQUIRE(back.family == rep.family);
    REQUIRE(back.grid == rep.grid);
  }
}

TEST_CASE("export to files") {
  const std::string dir = "/tmp/vexlab_report_io_test";
  std::remove((dir + "/out.csv").c_str());
  std::remove((dir + "/out.json").c_str());
  std::filesystem::create_directories(dir);
  const std::vector<EquivalenceReport> reports = {sample_report()};

  SECTION("csv file") {
    export_report(reports, dir + "/out.csv", ReportFormat::kCsv);
    const auto text = read_all(dir + "/out.csv");
    REQUIRE(text == to_csv(reports));
  }

  SECTION("json file parses back") {
    export_report(reports, dir + "/out.json", ReportFormat::kJson);
    const auto text = read_all(dir + "/out.json");
    const auto parsed = nlohmann::json::parse(text);
    const auto back = reports_from_json(parsed);
    REQUIRE(back.size() == 1);
    REQUIRE(back[0].scenario_id == "std-007");
  }

  SECTION("unwritable path reports the file name") {
    REQUIRE_THROWS_WITH(
        export_report(reports, "/nonexistent-dir/x.csv", ReportFormat::kCsv),
        Catch::Matchers::ContainsSubstring("/nonexistent-dir/x.csv"));
  }
}
