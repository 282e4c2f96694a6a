// Copyright 2026 The isocomb Authors
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

#include <stdexcept>
#include <string>
#include <string_view>

namespace isocomb {

enum class ErrorCode {
  kDomainError,
  kInvalidArgument,
  kNotConvex,
  kNotSimple,
  kWrongOrientation,
  kDegenerateEdge,
  kDegenerateResult,
  kPerimeterMismatch,
  kOrientationMismatch,
  kAlignmentNotFound,
  kNotOnSphere,
  kNotConvexSpherical,
  kAntipodalEdge,
  kNonPositiveHeight,
  kNotConvexPlanar,
  kAntipodalCorrespondence,
  kPositioningNotFound,
  kTruncationTooDeep,
  kEmptyInput,
  kConfigError,
};

std::string_view to_string(ErrorCode code);

// True for failures of the constructive algorithms themselves (as opposed to
// rejected input): the CLI maps these to a distinct exit status.
bool is_algorithmic_failure(ErrorCode code);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace isocomb
