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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hybridpulse/model.hpp"

namespace hp {

enum class Shape { Plateau, Ramp };

// Detuning is piecewise: constant on plateaus, linear on ramps, and jumps
// instantaneously between segments.
struct PulseSegment {
  Shape shape = Shape::Plateau;
  double eps_start = 0.0;  // ueV
  double eps_end = 0.0;    // ueV
  double duration = 0.0;   // ns, zero allowed (a skipped gate)

  static PulseSegment plateau(double eps, double T) {
    return {Shape::Plateau, eps, eps, T};
  }
  static PulseSegment ramp(double e0, double e1, double T) {
    return {Shape::Ramp, e0, e1, T};
  }
  double eps_at(double t) const {
    if (shape == Shape::Plateau || duration <= 0) return eps_start;
    return eps_start + (eps_end - eps_start) * (t / duration);
  }
  void validate() const;
  bool operator==(const PulseSegment&) const = default;
};

struct PulseSchedule {
  std::vector<PulseSegment> segments;
  double eps_init = 0.0;
  double eps_final = 0.0;

  double total_duration() const;
  void validate() const;
  bool operator==(const PulseSchedule&) const = default;
};

// Line format: '#' header carrying parameters and the idle detunings, then
// one `shape eps_start eps_end duration` line per segment.
void write_schedule(std::ostream& os, const PulseSchedule& s,
                    const HybridParams& p);

struct ScheduleFile {
  PulseSchedule schedule;
  HybridParams params;
};

ScheduleFile read_schedule(std::istream& is);

// printf("%.17g")
std::string fmt17(double v);

}  // namespace hp
