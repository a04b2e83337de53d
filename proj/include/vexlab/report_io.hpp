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
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "vexlab/descriptor.hpp"
#include "vexlab/lab.hpp"

namespace vexlab {

inline constexpr const char* kReportCsvHeader =
    "scenario_id,family,s,which,mode,grid,lhs,rhs,ratio_fwd,ratio_bwd,"
    "refinement_delta,tail_delta,clog_origin,clog_infinity,flags";

namespace detail {

/// Numbers print with 12 significant digits; NaN prints as "nan".
inline std::string csv_number(double x) {
  if (std::isnan(x)) return "nan";
  return format_number(x);
}

inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += "\"";
  return out;
}

}  // namespace detail

inline std::string to_csv_row(const EquivalenceReport& r) {
  std::string row;
  row += detail::csv_escape(r.scenario_id);
  row += "," + detail::csv_escape(r.family);
  row += "," + detail::csv_number(r.s);
  row += "," + r.which;
  row += "," + r.mode;
  row += "," + detail::csv_escape(r.grid.to_string());
  row += "," + detail::csv_number(r.lhs);
  row += "," + detail::csv_number(r.rhs);
  row += "," + detail::csv_number(r.ratio_fwd);
  row += "," + detail::csv_number(r.ratio_bwd);
  row += "," + detail::csv_number(r.refinement_delta);
  row += "," + detail::csv_number(r.tail_delta);
  row += "," + detail::csv_number(r.clog_origin);
  row += "," + detail::csv_number(r.clog_infinity);
  row += "," + detail::csv_escape(r.flags_string());
  return row;
}

inline std::string to_csv(const std::vector<EquivalenceReport>& reports) {
  std::string out = std::string(kReportCsvHeader) + "\n";
  for (const auto& r : reports) out += to_csv_row(r) + "\n";
  return out;
}

inline nlohmann::json to_json(const EquivalenceReport& r) {
  nlohmann::json j;
  j["scenario_id"] = r.scenario_id;
  j["family"] = r.family;
  j["s"] = r.s;
  j["which"] = r.which;
  j["mode"] = r.mode;
  j["grid"] = r.grid.to_string();
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  // NaN is not representable in JSON; mirror the CSV's "nan" text.
  auto put = [&](const char* key, double v) {
    if (std::isnan(v))
      j[key] = "nan";
    else
      j[key] = v;
  };
  put("ratio_fwd", r.ratio_fwd);
  put("ratio_bwd", r.ratio_bwd);
  put("refinement_delta", r.refinement_delta);
  put("tail_delta", r.tail_delta);
  j["clog_origin"] = r.clog_origin;
  j["clog_infinity"] = r.clog_infinity;
  j["flags"] = r.flags_string();
  j["iterations"] = r.iterations;
  j["degenerate"] = r.degenerate;
  return j;
}

inline nlohmann::json to_json(const std::vector<EquivalenceReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

inline EquivalenceReport report_from_json(const nlohmann::json& j) {
  EquivalenceReport r;
  r.scenario_id = j.at("scenario_id").get<std::string>();
  r.family = j.at("family").get<std::string>();
  r.s = j.at("s").get<double>();
  r.which = j.at("which").get<std::string>();
  r.mode = j.at("mode").get<std::string>();
  r.grid = parse_grid(j.at("grid").get<std::string>());
  r.lhs = j.at("lhs").get<double>();
  r.rhs = j.at("rhs").get<double>();
  auto get = [&](const char* key) {
    const auto& v = j.at(key);
    if (v.is_string()) return std::numeric_limits<double>::quiet_NaN();
    return v.get<double>();
  };
  r.ratio_fwd = get("ratio_fwd");
  r.ratio_bwd = get("ratio_bwd");
  r.refinement_delta = get("refinement_delta");
  r.tail_delta = get("tail_delta");
  r.clog_origin = j.at("clog_origin").get<double>();
  r.clog_infinity = j.at("clog_infinity").get<double>();
  const std::string flags = j.at("flags").get<std::string>();
  std::size_t pos = 0;
  while (pos < flags.size()) {
    const auto semi = flags.find(';', pos);
    r.flags.push_back(flags.substr(
        pos, semi == std::string::npos ? std::string::npos : semi - pos));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  if (j.contains("iterations")) r.iterations = j.at("iterations").get<int>();
  if (j.contains("degenerate")) r.degenerate = j.at("degenerate").get<bool>();
  return r;
}

inline std::vector<EquivalenceReport> reports_from_json(
    const nlohmann::json& arr) {
  std::vector<EquivalenceReport> out;
  for (const auto& j : arr) out.push_back(report_from_json(j));
  return out;
}

enum class ReportFormat { kCsv, kJson };

inline void export_report(const std::vector<EquivalenceReport>& reports,
                          const std::string& path, ReportFormat format) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("export_report: cannot open '" + path +
                             "' for writing");
  if (format == ReportFormat::kCsv)
    out << to_csv(reports);
  else
    out << to_json(reports).dump(2) << "\n";
  if (!out.good())
    throw std::runtime_error("export_report: write to '" + path + "' failed");
}

}  // namespace vexlab
