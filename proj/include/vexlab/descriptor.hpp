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

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "vexlab/exponent.hpp"
#include "vexlab/families.hpp"
#include "vexlab/grid.hpp"

namespace vexlab {

/// One parsed call of the descriptor mini-language: name(arg,arg,...).
struct ParsedCall {
  std::string name;
  std::vector<double> args;
};

namespace detail {

inline std::string strip_spaces(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

inline int require_int(double x, const std::string& text) {
  const double r = std::nearbyint(x);
  if (std::fabs(x - r) > 0.0 || std::fabs(r) > 1e9)
    throw std::invalid_argument("descriptor: expected integer, got '" + text +
                                "'");
  return static_cast<int>(r);
}

}  // namespace detail

/// Parses "name(a,b,...)" with numeric arguments. "name()" is valid.
inline ParsedCall parse_call(const std::string& raw) {
  const std::string s = detail::strip_spaces(raw);
  const auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')' || open == 0)
    throw std::invalid_argument("descriptor: expected name(args) in '" + raw +
                                "'");
  ParsedCall call;
  call.name = s.substr(0, open);
  for (char c : call.name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      throw std::invalid_argument("descriptor: bad family name '" + call.name +
                                  "'");
  const std::string body = s.substr(open + 1, s.size() - open - 2);
  if (body.empty()) return call;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const auto comma = body.find(',', pos);
    const std::string tok =
        body.substr(pos, comma == std::string::npos ? std::string::npos
                                                    : comma - pos);
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (tok.empty() || end != tok.c_str() + tok.size() || !std::isfinite(v))
      throw std::invalid_argument("descriptor: bad numeric argument '" + tok +
                                  "' in '" + raw + "'");
    call.args.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return call;
}

namespace detail {

inline void require_arity(const ParsedCall& c, std::size_t n) {
  if (c.args.size() != n)
    throw std::invalid_argument("descriptor: '" + c.name + "' takes " +
                                std::to_string(n) + " argument(s), got " +
                                std::to_string(c.args.size()));
}

}  // namespace detail

/// Exponent descriptors: const(c), loginterp(p0,pinf),
/// logperturbed(p0,pinf,amplitude,phase).
inline ExponentFunction parse_exponent(const std::string& text) {
  const ParsedCall c = parse_call(text);
  if (c.name == "const") {
    detail::require_arity(c, 1);
    return ExponentFunction::constant(c.args[0]);
  }
  if (c.name == "loginterp") {
    detail::require_arity(c, 2);
    return ExponentFunction::log_interp(c.args[0], c.args[1]);
  }
  if (c.name == "logperturbed") {
    detail::require_arity(c, 4);
    return ExponentFunction::log_perturbed(
        ExponentFunction::log_interp(c.args[0], c.args[1]), c.args[2],
        c.args[3]);
  }
  throw std::invalid_argument("descriptor: unknown exponent family '" +
                              c.name + "'");
}

/// Source descriptors: zero(), const(c), power(a), powerpeak(a,b),
/// octave(j), octaves(j1,j2), logosc(g), stairdown(), stairup(),
/// capdown(), capup().
inline FunctionFamily parse_function(const std::string& text) {
  const ParsedCall c = parse_call(text);
  if (c.name == "zero") {
    detail::require_arity(c, 0);
    return FunctionFamily::zero();
  }
  if (c.name == "const") {
    detail::require_arity(c, 1);
    return FunctionFamily::constant(c.args[0]);
  }
  if (c.name == "power") {
    detail::require_arity(c, 1);
    return FunctionFamily::power(c.args[0]);
  }
  if (c.name == "powerpeak") {
    detail::require_arity(c, 2);
    return FunctionFamily::power_peak(c.args[0], c.args[1]);
  }
  if (c.name == "octave") {
    detail::require_arity(c, 1);
    return FunctionFamily::octave(detail::require_int(c.args[0], text));
  }
  if (c.name == "octaves") {
    detail::require_arity(c, 2);
    return FunctionFamily::octaves(detail::require_int(c.args[0], text),
                                   detail::require_int(c.args[1], text));
  }
  if (c.name == "logosc") {
    detail::require_arity(c, 1);
    return FunctionFamily::log_oscillation(c.args[0]);
  }
  if (c.name == "stairdown") {
    detail::require_arity(c, 0);
    return FunctionFamily::stair_down();
  }
  if (c.name == "stairup") {
    detail::require_arity(c, 0);
    return FunctionFamily::stair_up();
  }
  if (c.name == "capdown") {
    detail::require_arity(c, 0);
    return FunctionFamily::cap_down();
  }
  if (c.name == "capup") {
    detail::require_arity(c, 0);
    return FunctionFamily::cap_up();
  }
  throw std::invalid_argument("descriptor: unknown source family '" + c.name +
                              "'");
}

/// Grid descriptor: grid(v_min,v_max,nodes_per_octave).
inline GridSpec parse_grid(const std::string& text) {
  const ParsedCall c = parse_call(text);
  if (c.name != "grid")
    throw std::invalid_argument("descriptor: expected grid(...), got '" +
                                text + "'");
  detail::require_arity(c, 3);
  GridSpec spec;
  spec.v_min = detail::require_int(c.args[0], text);
  spec.v_max = detail::require_int(c.args[1], text);
  spec.nodes_per_octave = detail::require_int(c.args[2], text);
  if (spec.v_min >= spec.v_max || spec.nodes_per_octave < 1)
    throw std::invalid_argument("descriptor: invalid grid bounds in '" + text +
                                "'");
  return spec;
}

}  // namespace vexlab
