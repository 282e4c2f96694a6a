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

namespace isocomb {

/// Numerical thresholds shared by the certifying operations. Every field has
/// the library default; callers override individual entries.
struct Tolerances {
  /// Slack on the minimum exterior (turning) angle and on the exterior-angle
  /// sum of a certified convex curve, radians.
  double certificate = 1e-9;
  /// Slack on the spherical Gauss-Bonnet residual.
  double gauss_bonnet = 1e-8;
  /// Alignment and positioning succeed only with a margin strictly above this.
  double margin = 1e-9;
  /// Relative perimeter mismatch accepted when pairing two curves.
  double perimeter_rel = 1e-9;
  /// Correspondence breakpoints closer than this (relative to the perimeter)
  /// are treated as one event.
  double breakpoint_merge_rel = 1e-10;
  /// Minimum admissible x0-height sum in the pairwise transform.
  double height = 1e-6;
};

}  // namespace isocomb
