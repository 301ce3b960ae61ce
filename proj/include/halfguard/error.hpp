// Copyright 2026 The halfguard Authors.
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

#include <stdexcept>
#include <string>
#include <string_view>

namespace halfguard {

enum class ErrorCode {
  // geometry / input validation
  TooFewVertices,
  RepeatedVertex,
  NotSimple,
  DegenerateStraightVertex,
  InvalidCut,
  DegenerateRay,
  DegenerateTriangle,
  OverlapError,
  NotOnBoundary,
  // guards
  PointOutsidePolygon,
  ReflexVertex,
  ConeNotContained,
  NotEntire,
  AlignmentMissing,
  // constructions
  PreconditionViolated,
  InvalidSize,
  DegenerateConfiguration,
  NotOrthogonal,
  GenerationFailed,
  // serialization
  ParseError,
  // an invariant the construction relies on did not hold
  InternalError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::RepeatedVertex: return "RepeatedVertex";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::DegenerateStraightVertex: return "DegenerateStraightVertex";
    case ErrorCode::InvalidCut: return "InvalidCut";
    case ErrorCode::DegenerateRay: return "DegenerateRay";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::OverlapError: return "OverlapError";
    case ErrorCode::NotOnBoundary: return "NotOnBoundary";
    case ErrorCode::PointOutsidePolygon: return "PointOutsidePolygon";
    case ErrorCode::ReflexVertex: return "ReflexVertex";
    case ErrorCode::ConeNotContained: return "ConeNotContained";
    case ErrorCode::NotEntire: return "NotEntire";
    case ErrorCode::AlignmentMissing: return "AlignmentMissing";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

/// Exception carrying a machine-readable code. Every failure raised by the
/// library is an `Error`; the CLI maps codes onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

namespace detail {

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void check(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace detail

}  // namespace halfguard
