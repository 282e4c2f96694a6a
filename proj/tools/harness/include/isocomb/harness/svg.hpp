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

/// @file svg.hpp
/// @brief Deterministic SVG plots of closed planar curves.

#include <span>
#include <string>
#include <vector>

#include "isocomb/geometry.hpp"
#include "isocomb/planar_polygon.hpp"
#include "isocomb/spherical_polygon.hpp"

namespace isocomb::harness {

struct SvgCurve {
  std::string label;
  std::vector<Vec2> points;
};

SvgCurve svg_curve(std::string label, const PlanarPolygon& f);
SvgCurve svg_curve(std::string label, std::span<const Vec2> points);
/// Orthographic projection of the link onto the (x1, x2)-plane.
SvgCurve svg_curve(std::string label, const SphericalPolygon& m);

/// One closed polyline per curve inside a viewBox fitted to the bounding box
/// plus a 5% margin, with a legend. Throws GeometryError(kEmptyInput).
std::string render_svg(std::span<const SvgCurve> curves);

}  // namespace isocomb::harness
