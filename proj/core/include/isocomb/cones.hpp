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

/// @file cones.hpp
/// @brief Convex cones with apex at the origin, the pairwise Pogorelov
/// transform, and the combination and positioning of isometric cones.
///
/// Two cones are isometric when their links have equal length; points then
/// correspond by link arc length from the marked bases.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "isocomb/geometry.hpp"
#include "isocomb/planar_polygon.hpp"
#include "isocomb/spherical_polygon.hpp"
#include "isocomb/tolerances.hpp"

namespace isocomb {

struct ConvexCone3 {
  SphericalPolygon link;
};

ConvexCone3 cone_from_link(SphericalPolygon link);

/// (r1_bar, r2_bar) / (x0 of r1 + x0 of r2), where r_bar is the projection
/// onto the (x1, x2)-plane. Throws kNonPositiveHeight.
std::pair<Vec2, Vec2> pogorelov_forward(const Vec3& r1, const Vec3& r2, double height_eps = 1e-6);

/// (w, 1) / sqrt(1 + |w|^2), written in (x0, x1, x2) order.
Vec3 pogorelov_inverse(const Vec2& tilde_sum);

/// Largest componentwise disagreement between the inverse of the summed
/// forward images, the closed form, and the normalized sum r1 + r2.
double pogorelov_identity_check(const Vec3& r1, const Vec3& r2, double height_eps = 1e-6);

/// Link correspondence breakpoint: vertex indices when a link has a vertex
/// at s.
struct LinkEvent {
  double s = 0.0;
  std::optional<std::size_t> v1;
  std::optional<std::size_t> v2;
};

std::vector<LinkEvent> link_events(const SphericalPolygon& m1, const SphericalPolygon& m2,
                                   double merge_rel);

struct PogorelovImage {
  std::vector<double> s;
  std::vector<double> x0_sums;
  std::vector<std::pair<Vec2, Vec2>> projections;
  std::vector<Vec2> tilde1;
  std::vector<Vec2> tilde2;
  std::optional<PlanarPolygon> planar1;
  std::optional<PlanarPolygon> planar2;
};

struct TransformOptions {
  /// Largest sampling step is perimeter / subdivisions.
  std::size_t subdivisions = 256;
  /// Build and certify the planar polygons (kNotConvexPlanar on failure).
  bool build_planar = true;
};

/// Throws kPerimeterMismatch, kNonPositiveHeight, kNotConvexPlanar.
PogorelovImage transform_link_pair(const SphericalPolygon& m1, const SphericalPolygon& m2,
                                   const Tolerances& tol = {}, const TransformOptions& opt = {});

/// Largest | |dt1| - |dt2| | over corresponding consecutive samples.
double segment_mismatch(const PogorelovImage& image);

/// Link of the result is (r1 + r2) / |r1 + r2| at the merged breakpoints;
/// its certificate records convexity. Throws kPerimeterMismatch,
/// kAntipodalCorrespondence.
ConvexCone3 combine_cones(const ConvexCone3& k1, const ConvexCone3& k2, const Tolerances& tol = {});

/// Rotation carrying the link's centroid direction to the x0 axis, or the
/// center of the smallest enclosing cap when that leaves a vertex too close
/// to the equator.
Rotation3 centering_rotation(const SphericalPolygon& link);

struct ConePositioning {
  Angle psi;
  double sigma0 = 0.0;
  double margin = 0.0;
  /// Full rotations applied to the input cones.
  Rotation3 frame1;
  Rotation3 frame2;
  ConvexCone3 positioned1;
  ConvexCone3 positioned2;
  ConvexCone3 combined;
  std::size_t candidates_tried = 0;
};

/// Throws kPositioningNotFound when no candidate rotation yields a certified
/// convex combined link.
ConePositioning position_cones(const ConvexCone3& k1, const ConvexCone3& k2,
                               const Tolerances& tol = {}, const TransformOptions& opt = {});

}  // namespace isocomb
