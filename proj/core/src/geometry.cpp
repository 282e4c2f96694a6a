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

#include "isocomb/geometry.hpp"

#include <algorithm>

#include "isocomb/error.hpp"

namespace isocomb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotConvex: return "NotConvex";
    case ErrorCode::kNotSimple: return "NotSimple";
    case ErrorCode::kWrongOrientation: return "WrongOrientation";
    case ErrorCode::kDegenerateEdge: return "DegenerateEdge";
    case ErrorCode::kDegenerateResult: return "DegenerateResult";
    case ErrorCode::kPerimeterMismatch: return "PerimeterMismatch";
    case ErrorCode::kOrientationMismatch: return "OrientationMismatch";
    case ErrorCode::kAlignmentNotFound: return "AlignmentNotFound";
    case ErrorCode::kNotOnSphere: return "NotOnSphere";
    case ErrorCode::kNotConvexSpherical: return "NotConvexSpherical";
    case ErrorCode::kAntipodalEdge: return "AntipodalEdge";
    case ErrorCode::kNonPositiveHeight: return "NonPositiveHeight";
    case ErrorCode::kNotConvexPlanar: return "NotConvexPlanar";
    case ErrorCode::kAntipodalCorrespondence: return "AntipodalCorrespondence";
    case ErrorCode::kPositioningNotFound: return "PositioningNotFound";
    case ErrorCode::kTruncationTooDeep: return "TruncationTooDeep";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kConfigError: return "ConfigError";
  }
  return "Unknown";
}

bool is_algorithmic_failure(ErrorCode code) {
  return code == ErrorCode::kAlignmentNotFound || code == ErrorCode::kPositioningNotFound;
}

double normalize_angle(double radians) {
  double r = std::remainder(radians, kTwoPi);  // [-pi, pi]
  if (r <= -kPi) r += kTwoPi;
  return r;
}

RigidMotion2 RigidMotion2::rotation_about(Angle a, const Vec2& center) {
  // p -> R(p - c) + c
  return {Angle::normalized(a.radians), center - rotated(center, a.radians)};
}

Vec2 RigidMotion2::operator()(const Vec2& p) const {
  return rotated(p, rotation.radians) + translation;
}

RigidMotion2 RigidMotion2::inverse() const {
  const double r = -rotation.radians;
  return {Angle::normalized(r), -rotated(translation, r)};
}

Vec2 apply_motion(const RigidMotion2& m, const Vec2& p) { return m(p); }

RigidMotion2 compose(const RigidMotion2& outer, const RigidMotion2& inner) {
  return {Angle::normalized(outer.rotation.radians + inner.rotation.radians),
          outer.rotate(inner.translation) + outer.translation};
}

Angle angle_between(const Vec2& u, const Vec2& v) {
  if (norm2(u) == 0.0 || norm2(v) == 0.0) {
    throw GeometryError(ErrorCode::kDomainError, "angle_between: zero vector");
  }
  // atan2 form; same value as the clamped arccos but accurate near 0 and pi.
  return Angle(std::atan2(std::abs(cross(u, v)), dot(u, v)));
}

Angle angle_between(const Vec3& u, const Vec3& v) {
  if (norm2(u) == 0.0 || norm2(v) == 0.0) {
    throw GeometryError(ErrorCode::kDomainError, "angle_between: zero vector");
  }
  return Angle(std::atan2(norm(cross(u, v)), dot(u, v)));
}

Angle circ_dist(Angle a, Angle b) {
  return Angle(std::abs(normalize_angle(a.radians - b.radians)));
}

Vec3 rotate_about_x0(Angle psi, const Vec3& p) {
  const double c = std::cos(psi.radians);
  const double s = std::sin(psi.radians);
  return {p.x0, c * p.x1 - s * p.x2, s * p.x1 + c * p.x2};
}

}  // namespace isocomb
