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

#include "hybridpulse/errors.hpp"

namespace hp {

const char* to_string(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NoDistinctMinimum: return "NoDistinctMinimum";
    case ErrorKind::NonpositiveGap: return "NonpositiveGap";
    case ErrorKind::NonpositiveSplitting: return "NonpositiveSplitting";
    case ErrorKind::CalibrationFailed: return "CalibrationFailed";
    case ErrorKind::StepTooLarge: return "StepTooLarge";
    case ErrorKind::Diagnostics: return "Diagnostics";
    case ErrorKind::OptimizationBracketFailed: return "OptimizationBracketFailed";
    case ErrorKind::ConditioningTooWeak: return "ConditioningTooWeak";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::UnknownKey: return "UnknownKey";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace hp
