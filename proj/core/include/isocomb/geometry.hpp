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

/// @file geometry.hpp
/// @brief Vector algebra, angles and planar rigid motions.
///
/// Vec3 stores its coordinates as (x0, x1, x2); the x0 axis is the
/// distinguished "height" axis of the cone constructions, so it comes first.

#include <cmath>
#include <numbers>

namespace isocomb {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  friend constexpr Vec2 operator*(double s, const Vec2& v) { return v * s; }
  Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
  Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
  constexpr bool operator==(const Vec2&) const = default;
};

constexpr double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& v) { return std::hypot(v.x, v.y); }
constexpr double norm2(const Vec2& v) { return dot(v, v); }
inline bool is_finite(const Vec2& v) { return std::isfinite(v.x) && std::isfinite(v.y); }
/// Direction angle in (-pi, pi].
inline double direction(const Vec2& v) { return std::atan2(v.y, v.x); }
/// Rotation of v by `radians` about the origin.
inline Vec2 rotated(const Vec2& v, double radians) {
  const double c = std::cos(radians);
  const double s = std::sin(radians);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

struct Vec3 {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double a, double b, double c) : x0(a), x1(b), x2(c) {}

  constexpr Vec3 operator+(const Vec3& o) const { return {x0 + o.x0, x1 + o.x1, x2 + o.x2}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x0 - o.x0, x1 - o.x1, x2 - o.x2}; }
  constexpr Vec3 operator-() const { return {-x0, -x1, -x2}; }
  constexpr Vec3 operator*(double s) const { return {x0 * s, x1 * s, x2 * s}; }
  constexpr Vec3 operator/(double s) const { return {x0 / s, x1 / s, x2 / s}; }
  friend constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }
  Vec3& operator+=(const Vec3& o) { x0 += o.x0; x1 += o.x1; x2 += o.x2; return *this; }
  constexpr bool operator==(const Vec3&) const = default;

  /// Orthogonal projection onto the (x1, x2)-plane.
  constexpr Vec2 tangential() const { return {x1, x2}; }
};

constexpr double dot(const Vec3& a, const Vec3& b) {
  return a.x0 * b.x0 + a.x1 * b.x1 + a.x2 * b.x2;
}
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.x1 * b.x2 - a.x2 * b.x1, a.x2 * b.x0 - a.x0 * b.x2, a.x0 * b.x1 - a.x1 * b.x0};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
constexpr double norm2(const Vec3& v) { return dot(v, v); }
inline bool is_finite(const Vec3& v) {
  return std::isfinite(v.x0) && std::isfinite(v.x1) && std::isfinite(v.x2);
}

inline constexpr Vec3 kAxisX0{1.0, 0.0, 0.0};

/// Reduces an angle to (-pi, pi].
double normalize_angle(double radians);

/// Scalar angle carrier. Direction angles are kept normalized by the
/// operations that produce them; accumulated turnings are left unwrapped.
struct Angle {
  double radians = 0.0;

  constexpr Angle() = default;
  constexpr explicit Angle(double r) : radians(r) {}

  static Angle normalized(double r) { return Angle(normalize_angle(r)); }

  constexpr Angle operator+(Angle o) const { return Angle(radians + o.radians); }
  constexpr Angle operator-(Angle o) const { return Angle(radians - o.radians); }
  constexpr Angle operator-() const { return Angle(-radians); }
  constexpr auto operator<=>(const Angle&) const = default;
};

/// Orientation-preserving isometry p -> R(rotation) p + translation.
struct RigidMotion2 {
  Angle rotation;
  Vec2 translation;

  static RigidMotion2 identity() { return {}; }
  static RigidMotion2 rotation_about(Angle a, const Vec2& center);

  Vec2 operator()(const Vec2& p) const;
  /// Linear part only (for directions).
  Vec2 rotate(const Vec2& v) const { return rotated(v, rotation.radians); }
  RigidMotion2 inverse() const;
};

Vec2 apply_motion(const RigidMotion2& m, const Vec2& p);

/// apply_motion(compose(outer, inner), p) == apply_motion(outer, apply_motion(inner, p)).
RigidMotion2 compose(const RigidMotion2& outer, const RigidMotion2& inner);

/// Unsigned angle in [0, pi]; throws kDomainError on a zero vector.
Angle angle_between(const Vec2& u, const Vec2& v);
Angle angle_between(const Vec3& u, const Vec3& v);

/// Minimal absolute difference of two angles modulo 2 pi, in [0, pi].
Angle circ_dist(Angle a, Angle b);

/// Rotation by psi about the x0 axis: x0 is kept, (x1, x2) turns by psi.
Vec3 rotate_about_x0(Angle psi, const Vec3& p);

}  // namespace isocomb
