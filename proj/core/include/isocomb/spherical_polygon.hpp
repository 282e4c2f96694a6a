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

/// @file spherical_polygon.hpp
/// @brief Closed geodesic polygons on the unit sphere and 3D rotations.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "isocomb/geometry.hpp"
#include "isocomb/planar_polygon.hpp"
#include "isocomb/tolerances.hpp"

namespace isocomb {

/// Proper rotation of 3-space stored as a row-major matrix.
struct Rotation3 {
  std::array<std::array<double, 3>, 3> m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

  static Rotation3 identity() { return {}; }
  /// Rotation by `radians` about the unit direction `axis` (right-handed).
  static Rotation3 about_axis(const Vec3& axis, double radians);
  static Rotation3 about_x0(Angle psi);
  /// Shortest rotation carrying direction a onto direction b.
  static Rotation3 from_to(const Vec3& a, const Vec3& b);

  Vec3 operator()(const Vec3& v) const;
  Rotation3 transpose() const;
};

/// (outer * inner)(v) == outer(inner(v)).
Rotation3 operator*(const Rotation3& outer, const Rotation3& inner);

/// v / |v| made idempotent: normalization is repeated until it cycles and a
/// canonical member of the cycle is returned, so unit_fixed_point(u) == u and
/// unit_fixed_point(2 u) == u for every result u.
Vec3 unit_fixed_point(const Vec3& v);

/// Great-circle distance between two unit vectors.
double arc_length(const Vec3& a, const Vec3& b);

/// Signed geodesic turning at b on the path a -> b -> c; positive for a
/// counterclockwise turn seen from outside the sphere.
double geodesic_turning(const Vec3& a, const Vec3& b, const Vec3& c);

/// Turning angles, fan area and Gauss-Bonnet residual of a closed geodesic
/// chain. The area is summed over triangles from the normalized vertex mean.
struct SphericalCertificate {
  std::vector<double> turning;
  double turning_sum = 0.0;
  double min_turning = 0.0;
  double max_turning = 0.0;
  double area = 0.0;
  double gauss_bonnet_residual = 0.0;
  double perimeter = 0.0;
  bool is_convex = false;
  bool degenerate = false;
};

SphericalCertificate certify_spherical(std::span<const Vec3> vertices, const Tolerances& tol = {});

class SphericalPolygon {
 public:
  std::span<const Vec3> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Vec3& vertex(std::size_t i) const { return vertices_[i]; }
  double perimeter() const { return perimeter_; }
  double base_s() const { return base_s_; }
  std::span<const double> cum_lengths() const {
    return std::span<const double>(cum_).first(vertices_.size());
  }
  double edge_length(std::size_t i) const { return cum_[i + 1] - cum_[i]; }
  double vertex_position(std::size_t i) const;
  const SphericalCertificate& certificate() const { return cert_; }

  EdgeLocation locate(double s) const;
  SphericalPolygon rebased(double new_base_s) const;
  SphericalPolygon rotated(const Rotation3& r) const;

 private:
  friend SphericalPolygon make_spherical_polygon(std::vector<Vec3>, double, const Tolerances&);

  std::vector<Vec3> vertices_;
  std::vector<double> cum_;
  SphericalCertificate cert_;
  double perimeter_ = 0.0;
  double base_s_ = 0.0;
};

/// Normalizes and validates. Throws kNotOnSphere (|v| off by more than
/// 1e-9), kAntipodalEdge, kDegenerateEdge, kNotConvexSpherical.
SphericalPolygon build_spherical_polygon(std::vector<Vec3> vertices, double base_s,
                                         const Tolerances& tol = {});

/// Builds without enforcing convexity; the certificate records the outcome.
/// Vertices must already be unit vectors with non-degenerate edges.
SphericalPolygon make_spherical_polygon(std::vector<Vec3> vertices, double base_s,
                                        const Tolerances& tol = {});

Vec3 sph_point_at(const SphericalPolygon& m, double s);

/// Unit direction of the first moment of the enclosed region.
Vec3 sph_centroid(const SphericalPolygon& m);

/// Distance from p to the geodesic segment a-b.
double point_arc_distance(const Vec3& p, const Vec3& a, const Vec3& b);

/// Symmetric Hausdorff distance, measured from dense samples of each
/// boundary to the exact edges of the other.
double spherical_hausdorff(const SphericalPolygon& a, const SphericalPolygon& b,
                           std::size_t samples_per_edge = 64);

}  // namespace isocomb
