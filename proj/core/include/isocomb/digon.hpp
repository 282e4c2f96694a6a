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

/// @file digon.hpp
/// @brief Digons (lunes), their truncation to quadrilaterals of equal
/// perimeter, and the combination of dihedral angles through a ladder of
/// truncation depths.
///
/// The standard digon has vertices at +-(0, 0, 1) and edges on the half
/// great circles of longitude 0 and `angle`, longitude measured in the
/// (x0, x1)-plane from +x0 toward +x1.

#include <cstddef>
#include <span>
#include <vector>

#include "isocomb/cones.hpp"
#include "isocomb/geometry.hpp"
#include "isocomb/spherical_polygon.hpp"
#include "isocomb/tolerances.hpp"

namespace isocomb {

struct Digon {
  Angle angle;
  Rotation3 placement;

  double perimeter() const { return kTwoPi; }
};

/// Throws kInvalidArgument unless 0 < angle < pi.
Digon make_digon(Angle angle, const Rotation3& placement = Rotation3::identity());

/// Perimeter of the standard digon of the given angle cut at depth e from
/// both vertices by geodesic crosscuts.
double truncated_perimeter(double depth, double angle);

struct TruncatedPair {
  SphericalPolygon q1;
  SphericalPolygon q2;
  double depth1 = 0.0;
  double depth2 = 0.0;
};

/// Cuts D1 at depth eps and D2 at the depth giving an equal perimeter. The
/// second quadrilateral's base is moved forward by base_offset. Throws
/// kTruncationTooDeep unless 0 < eps < pi/4 and a matching depth exists.
TruncatedPair truncate_digons(const Digon& d1, const Digon& d2, double eps,
                              double base_offset = 0.0, const Tolerances& tol = {});

struct DihedralLevel {
  double eps = 0.0;
  double depth2 = 0.0;
  double perimeter = 0.0;
  ConePositioning positioning;
  /// Hausdorff distance to the previous level's combined link; 0 at the first level.
  double hausdorff_to_previous = 0.0;
  /// Dihedral angle spanned by the two longest edges of the combined link.
  double angle_estimate = 0.0;
};

struct DihedralReport {
  std::vector<DihedralLevel> levels;
  bool all_convex = true;
  bool hausdorff_decreasing = true;
};

/// Throws kInvalidArgument on a non-decreasing or non-positive ladder and
/// propagates truncation and positioning failures.
DihedralReport combine_dihedral(const Digon& d1, const Digon& d2, std::span<const double> eps_ladder,
                                double base_offset = 0.0, const Tolerances& tol = {});

}  // namespace isocomb
