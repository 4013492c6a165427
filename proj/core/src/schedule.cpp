// Copyright 2026 The hybridpulse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hybridpulse/schedule.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "hybridpulse/errors.hpp"

namespace hp {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void PulseSegment::validate() const {
  if (!std::isfinite(eps_start) || !std::isfinite(eps_end) ||
      !std::isfinite(duration))
    throw Error(ErrorKind::ValidationError, "segment values must be finite");
  if (duration < 0)
    throw Error(ErrorKind::ValidationError, "segment duration must be >= 0");
  if (shape == Shape::Plateau && eps_start != eps_end)
    throw Error(ErrorKind::ValidationError, "plateau needs eps_start == eps_end");
}

double PulseSchedule::total_duration() const {
  double t = 0.0;
  for (const auto& s : segments) t += s.duration;
  return t;
}

void PulseSchedule::validate() const {
  if (segments.empty())
    throw Error(ErrorKind::ValidationError, "schedule has no segments");
  for (const auto& s : segments) s.validate();
}

void write_schedule(std::ostream& os, const PulseSchedule& s,
                    const HybridParams& p) {
  os << "# hybridpulse schedule v1\n";
  os << "# E01 " << fmt17(p.E01) << "\n";
  os << "# t1 " << fmt17(p.t1) << "\n";
  os << "# t2 " << fmt17(p.t2) << "\n";
  os << "# Gamma " << fmt17(p.Gamma) << "\n";
  os << "# gamma " << fmt17(p.gamma) << "\n";
  os << "# eps_init " << fmt17(s.eps_init) << "\n";
  os << "# eps_final " << fmt17(s.eps_final) << "\n";
  for (const auto& g : s.segments) {
    os << (g.shape == Shape::Plateau ? "plateau " : "ramp ") << fmt17(g.eps_start)
       << ' ' << fmt17(g.eps_end) << ' ' << fmt17(g.duration) << '\n';
  }
}

namespace {

double parse_double(const std::string& tok, int line) {
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (tok.empty() || *end != '\0')
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ": bad number '" + tok + "'");
  return v;
}

}  // namespace

ScheduleFile read_schedule(std::istream& is) {
  ScheduleFile f;
  std::string line;
  int n = 0;
  while (std::getline(is, line)) {
    ++n;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "#") {
      std::string key, val;
      if (!(ls >> key >> val)) continue;
      if (key == "hybridpulse") continue;
      const double v = parse_double(val, n);
      if (key == "E01") f.params.E01 = v;
      else if (key == "t1") f.params.t1 = v;
      else if (key == "t2") f.params.t2 = v;
      else if (key == "Gamma") f.params.Gamma = v;
      else if (key == "gamma") f.params.gamma = v;
      else if (key == "eps_init") f.schedule.eps_init = v;
      else if (key == "eps_final") f.schedule.eps_final = v;
      else
        throw Error(ErrorKind::UnknownKey,
                    "line " + std::to_string(n) + ": unknown header key '" + key + "'");
      continue;
    }
    PulseSegment seg;
    if (head == "plateau") seg.shape = Shape::Plateau;
    else if (head == "ramp") seg.shape = Shape::Ramp;
    else
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(n) + ": unknown shape '" + head + "'");
    std::string a, b, c, extra;
    if (!(ls >> a >> b >> c) || (ls >> extra))
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(n) + ": expected 3 numbers");
    seg.eps_start = parse_double(a, n);
    seg.eps_end = parse_double(b, n);
    seg.duration = parse_double(c, n);
    seg.validate();
    f.schedule.segments.push_back(seg);
  }
  f.schedule.validate();
  return f;
}

}  // namespace hp
