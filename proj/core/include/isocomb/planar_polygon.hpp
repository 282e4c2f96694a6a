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

/// @file planar_polygon.hpp
/// @brief Closed convex polygons with an arc-length parametrization.
///
/// Arc length s is measured counterclockwise from a marked base point, which
/// may lie anywhere on the boundary (not necessarily at a vertex). All
/// queries reduce s modulo the perimeter.

#include <cstddef>
#include <span>
#include <vector>

#include "isocomb/geometry.hpp"

namespace isocomb {

/// Edges shorter than this fraction of the perimeter are degenerate.
inline constexpr double kLengthEpsRel = 1e-12;
/// Vertices whose exterior angle is below this are merged away on build.
inline constexpr double kCollinearAngle = 1e-12;

/// Position of an arc-length parameter on the boundary. When `at_vertex` is
/// set, `edge` is the outgoing edge of that vertex and `offset` is zero.
struct EdgeLocation {
  std::size_t edge = 0;
  double offset = 0.0;
  bool at_vertex = false;
};

class PlanarPolygon {
 public:
  std::span<const Vec2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Vec2& vertex(std::size_t i) const { return vertices_[i]; }

  double perimeter() const { return perimeter_; }
  double base_s() const { return base_s_; }

  /// Cumulative arc length at each vertex measured from vertex 0;
  /// cum_lengths()[0] == 0.
  std::span<const double> cum_lengths() const {
    return std::span<const double>(cum_).first(vertices_.size());
  }
  double edge_length(std::size_t i) const { return cum_[i + 1] - cum_[i]; }
  /// Unit direction of edge i (from vertex i to vertex i+1).
  const Vec2& edge_direction(std::size_t i) const { return directions_[i]; }
  /// Exterior (turning) angle at vertex i, in [0, pi).
  double exterior_angle(std::size_t i) const { return exterior_[i]; }
  /// Arc length from the base point to vertex i, in [0, perimeter).
  double vertex_position(std::size_t i) const;
  double signed_area() const;

  EdgeLocation locate(double s) const;

  PlanarPolygon rebased(double new_base_s) const;
  PlanarPolygon transformed(const RigidMotion2& m) const;

 private:
  friend PlanarPolygon build_polygon(std::vector<Vec2> vertices, double base_s);

  std::vector<Vec2> vertices_;
  std::vector<double> cum_;  // size n + 1, cum_[n] == perimeter_
  std::vector<Vec2> directions_;
  std::vector<double> exterior_;
  double perimeter_ = 0.0;
  double base_s_ = 0.0;
};

/// Right-continuous step function of arc length: the turning of the arc from
/// the base point to s. Breakpoints lie in (0, perimeter]; a vertex sitting
/// exactly at the base contributes its jump at s = perimeter.
struct TurningFunction {
  std::vector<double> breakpoints;
  std::vector<double> values;
  double perimeter = 0.0;

  double operator()(double s) const;
  double total() const { return values.empty() ? 0.0 : values.back(); }
};

struct ConvexityCertificate {
  std::vector<double> interior_angles;
  double exterior_sum = 0.0;
  double min_exterior = 0.0;
  bool is_simple = false;
  bool is_convex = false;
  /// Set when a zero-length edge made the angles undefined (only produced by
  /// certify_curve; convexity_certificate throws instead).
  bool degenerate = false;
  double tolerance = 0.0;
};

/// Validates and normalizes a counterclockwise convex polygon. Collinear
/// vertices are merged. Throws kNotConvex, kNotSimple, kWrongOrientation,
/// kDegenerateEdge.
PlanarPolygon build_polygon(std::vector<Vec2> vertices, double base_s);

Vec2 point_at(const PlanarPolygon& f, double s);
/// Direction of the forward tangent; the outgoing edge at a vertex.
Angle right_semitangent(const PlanarPolygon& f, double s);
/// Direction of the incoming edge at s; equals the right one inside edges.
Angle left_semitangent(const PlanarPolygon& f, double s);

TurningFunction turning_function(const PlanarPolygon& f);

/// Angles and convexity flags of a closed chain. Throws kDegenerateEdge only.
ConvexityCertificate convexity_certificate(std::span<const Vec2> vertices, double tolerance);
/// Same as convexity_certificate but never throws: a degenerate chain yields
/// a non-convex certificate with `degenerate` set. Edges shorter than
/// `min_edge` also count as degenerate.
ConvexityCertificate certify_curve(std::span<const Vec2> vertices, double tolerance,
                                   double min_edge = 0.0);

/// Polygon through n equally spaced arc-length samples of f, starting at the
/// base point. Throws kDegenerateResult when fewer than 3 vertices survive.
PlanarPolygon inscribe(const PlanarPolygon& f, std::size_t n);

/// Homothety about `center` scaling the perimeter to `target`.
PlanarPolygon dilate_to_perimeter(const PlanarPolygon& f, double target, const Vec2& center);

/// Reduces x into [0, period).
double wrap_arc(double x, double period);

}  // namespace isocomb
