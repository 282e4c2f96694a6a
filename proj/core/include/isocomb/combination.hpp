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

/// @file combination.hpp
/// @brief Isometric combination r(s) = r1(s) + r2(s) of two closed convex
/// polygons of equal perimeter, with alignment and vertex-event analysis.
///
/// Points correspond by equal arc length from the marked base points. The
/// pair motion is applied to the second polygon whenever it is evaluated.

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "isocomb/geometry.hpp"
#include "isocomb/planar_polygon.hpp"
#include "isocomb/tolerances.hpp"

namespace isocomb {

struct MarkedPair {
  PlanarPolygon F1;
  PlanarPolygon F2;
  RigidMotion2 motion;

  double perimeter() const { return F1.perimeter(); }
};

/// Throws kPerimeterMismatch or kOrientationMismatch.
MarkedPair make_pair(PlanarPolygon F1, PlanarPolygon F2, const Tolerances& tol = {});

/// One correspondence breakpoint. A vertex index is present when that
/// polygon has a vertex at s; `in` and `out` are the edges on either side
/// (equal inside an edge).
struct CorrespondenceEvent {
  double s = 0.0;
  std::optional<std::size_t> v1;
  std::optional<std::size_t> v2;
  std::size_t in1 = 0, out1 = 0;
  std::size_t in2 = 0, out2 = 0;
};

/// Merged vertex positions of both polygons plus the base point, ascending
/// from s = 0. Positions closer than merge_rel * perimeter coincide.
std::vector<CorrespondenceEvent> correspondence_events(const MarkedPair& pair,
                                                       double merge_rel);

struct CombinedCurve {
  std::vector<double> breakpoints;
  std::vector<Vec2> curve;         // r1 + motion(r2)
  std::vector<Vec2> first;         // r1
  std::vector<Vec2> second;        // motion(r2)
  std::vector<Vec2> tau_segments;  // r1 - motion(r2)
  ConvexityCertificate certificate;
};

enum class EventCase { kEdgeEdge, kVertexEdge, kVertexVertex };

std::string_view to_string(EventCase c);

/// Angles at one breakpoint. alpha, delta and gamma are only set for
/// vertex-edge events, where beta = alpha/2 + delta/2 + gamma.
struct CombinationVertexEvent {
  double s = 0.0;
  EventCase case_id = EventCase::kEdgeEdge;
  Angle beta1;
  Angle beta2;
  Angle beta;
  Angle alpha;
  Angle delta;
  Angle gamma;
};

struct AlignmentResult {
  double sigma0 = 0.0;
  RigidMotion2 motion;
  Angle margin;
  std::vector<double> g_values;
  MarkedPair aligned;
};

/// pi minus the largest angle between corresponding right semi-tangents.
Angle semitangent_condition(const MarkedPair& pair, const Tolerances& tol = {});

/// Never throws on non-convex output; see the certificate.
CombinedCurve combine(const MarkedPair& pair, const Tolerances& tol = {});

/// Combination sampled at n equally spaced arc-length parameters.
CombinedCurve combine_sampled(const MarkedPair& pair, std::size_t n, const Tolerances& tol = {});

std::vector<CombinationVertexEvent> vertex_events(const MarkedPair& pair, const Tolerances& tol = {});

/// Throws kAlignmentNotFound when no breakpoint base gives a positive margin.
AlignmentResult align(const MarkedPair& pair, const Tolerances& tol = {});

std::pair<AlignmentResult, CombinedCurve> combine_aligned(const MarkedPair& pair,
                                                          const Tolerances& tol = {});

/// Largest | |dr1|^2 - |dr2|^2 | / (|dr| |dtau| + floor_eps) over the
/// segments of the combined curve. Segments with a vanishing dtau count as 0.
double bending_check(const CombinedCurve& combined, double floor_eps = 1e-300);

}  // namespace isocomb
