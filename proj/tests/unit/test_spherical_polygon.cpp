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


#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "isocomb/error.hpp"
#include "isocomb/random_shapes.hpp"
#include "isocomb/spherical_polygon.hpp"
#include "oracles.hpp"

namespace isocomb {
namespace {

const Vec3 kE0{1, 0, 0};
const Vec3 kE1{0, 1, 0};
const Vec3 kE2{0, 0, 1};

SphericalPolygon Octant(double base = 0.0) { return build_spherical_polygon({kE0, kE1, kE2}, base); }

ErrorCode BuildError(std::vector<Vec3> v) {
  try {
    build_spherical_polygon(std::move(v), 0.0);
  } catch (const GeometryError& e) {
    return e.code();
  }
  return ErrorCode::kConfigError;
}

void ExpectNear3(const Vec3& a, const Vec3& b, double eps) {
  EXPECT_NEAR(a.x0, b.x0, eps);
  EXPECT_NEAR(a.x1, b.x1, eps);
  EXPECT_NEAR(a.x2, b.x2, eps);
}

TEST(SphericalPolygon, OctantCertificate) {
  const SphericalPolygon m = Octant();
  const SphericalCertificate& c = m.certificate();
  ASSERT_EQ(c.turning.size(), 3u);
  for (double t : c.turning) EXPECT_NEAR(t, kPi / 2, 1e-15);
  EXPECT_NEAR(c.area, kPi / 2, 1e-14);
  EXPECT_NEAR(c.gauss_bonnet_residual, 0.0, 1e-14);
  EXPECT_NEAR(m.perimeter(), 1.5 * kPi, 1e-15);
  EXPECT_TRUE(c.is_convex);
}

TEST(SphericalPolygon, RegularPolygonMatchesOracle) {
  for (std::size_t n : {3u, 5u, 17u, 64u}) {
    for (double rho : {0.05, 0.3, 1.0, 1.4}) {
      const SphericalPolygon m = build_spherical_polygon(testing::spherical_regular_polygon(n, rho, 0.2), 0.0);
      const auto oracle = testing::spherical_regular_oracle(n, rho);
      const SphericalCertificate& c = m.certificate();
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_NEAR(m.edge_length(i), oracle.side, 1e-12);
        EXPECT_NEAR(c.turning[i], oracle.turning, 1e-11) << "n = " << n << " rho = " << rho;
      }
      EXPECT_NEAR(c.area, oracle.area, 1e-11 * std::max(1.0, oracle.area));
      EXPECT_LT(std::abs(c.gauss_bonnet_residual), 1e-12);
      EXPECT_TRUE(c.is_convex);
    }
  }
}

TEST(SphericalPolygon, BuildErrors) {
  EXPECT_EQ(BuildError({{1.001, 0, 0}, kE1, kE2}), ErrorCode::kNotOnSphere);
  EXPECT_EQ(BuildError({kE0, kE1}), ErrorCode::kInvalidArgument);
  EXPECT_EQ(BuildError({kE0, -kE0, kE2}), ErrorCode::kAntipodalEdge);
  EXPECT_EQ(BuildError({kE0, kE0, kE1, kE2}), ErrorCode::kDegenerateEdge);
  EXPECT_EQ(BuildError({kE0, kE2, kE1}), ErrorCode::kNotConvexSpherical);
  EXPECT_EQ(BuildError(testing::spherical_regular_polygon(12, 1.65)), ErrorCode::kNotConvexSpherical);
}

TEST(SphericalPolygon, NearUnitVerticesAreNormalized) {
  const SphericalPolygon m = build_spherical_polygon({{1 + 5e-10, 0, 0}, kE1, kE2}, 0.0);
  EXPECT_EQ(m.vertex(0), kE0);
}

TEST(UnitFixedPoint, IsIdempotent) {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Vec3 v{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const Vec3 u = unit_fixed_point(v);
    EXPECT_EQ(unit_fixed_point(u), u);
    EXPECT_EQ(unit_fixed_point(u * 2.0), u);
    EXPECT_NEAR(norm(u), 1.0, 1e-15);
  }
}

TEST(ArcLength, Examples) {
  EXPECT_NEAR(arc_length(kE0, kE1), kPi / 2, 1e-15);
  EXPECT_EQ(arc_length(kE0, kE0), 0.0);
  EXPECT_NEAR(arc_length(kE0, -kE0), kPi, 1e-15);
  const Vec3 near{std::cos(1e-9), std::sin(1e-9), 0};
  EXPECT_NEAR(arc_length(kE0, near), 1e-9, 1e-24);
}

TEST(GeodesicTurning, SignFollowsOrientation) {
  EXPECT_NEAR(geodesic_turning(kE0, kE1, kE2), kPi / 2, 1e-15);
  EXPECT_NEAR(geodesic_turning(kE2, kE1, kE0), -kPi / 2, 1e-15);
  const Vec3 further{0, std::cos(0.1), std::sin(0.1)};
  EXPECT_NEAR(geodesic_turning(kE0, kE1, Vec3{-1, 0, 0}), 0.0, 1e-15);
  EXPECT_GT(geodesic_turning(kE0, kE1, further), 0.0);
}

TEST(SphPointAt, OctantExamples) {
  const SphericalPolygon m = Octant();
  EXPECT_EQ(sph_point_at(m, 0.0), kE0);
  ExpectNear3(sph_point_at(m, kPi / 2), kE1, 1e-15);
  ExpectNear3(sph_point_at(m, kPi / 4), Vec3(std::sqrt(0.5), std::sqrt(0.5), 0), 1e-15);
  ExpectNear3(sph_point_at(m, 1.5 * kPi), kE0, 1e-15);
  ExpectNear3(sph_point_at(m, -kPi / 2), sph_point_at(m, kPi), 1e-15);
  const SphericalPolygon shifted = Octant(kPi / 4);
  ExpectNear3(sph_point_at(shifted, 0.0), Vec3(std::sqrt(0.5), std::sqrt(0.5), 0), 1e-15);
  ExpectNear3(sph_point_at(shifted, kPi / 4), kE1, 1e-15);
}

TEST(SphPointAt, StaysOnSphereAndMatchesVertexPositions) {
  const SphericalPolygon m = build_spherical_polygon(testing::spherical_regular_polygon(9, 0.7), 0.3);
  for (std::size_t i = 0; i < m.size(); ++i) {
    ExpectNear3(sph_point_at(m, m.vertex_position(i)), m.vertex(i), 1e-14);
  }
  for (int k = 0; k < 500; ++k) {
    const double s = m.perimeter() * k / 500.0;
    EXPECT_NEAR(norm(sph_point_at(m, s)), 1.0, 1e-15);
  }
}

TEST(SphericalPolygon, RebasedKeepsPoints) {
  const SphericalPolygon m = build_spherical_polygon(testing::spherical_regular_polygon(7, 0.5), 0.0);
  const SphericalPolygon r = m.rebased(0.4);
  for (int k = 0; k < 50; ++k) {
    const double s = m.perimeter() * k / 50.0;
    ExpectNear3(sph_point_at(r, s), sph_point_at(m, s + 0.4), 1e-14);
  }
}

TEST(Rotation3, AboutX0MatchesRotateAboutX0) {
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const Angle psi(rng.uniform(-kPi, kPi));
    const Vec3 p{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    ExpectNear3(Rotation3::about_x0(psi)(p), rotate_about_x0(psi, p), 1e-15);
    ExpectNear3(Rotation3::about_axis(kE0, psi.radians)(p), rotate_about_x0(psi, p), 1e-15);
  }
}

TEST(Rotation3, FromToAndTranspose) {
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const Rotation3 r = random_rotation(rng);
    const Vec3 a = r(kE0);
    const Vec3 b = r(kE2);
    ExpectNear3(Rotation3::from_to(a, b)(a), b, 1e-14);
    ExpectNear3(r.transpose()(r(kE1)), kE1, 1e-15);
    const Rotation3 s = random_rotation(rng);
    ExpectNear3((r * s)(kE1), r(s(kE1)), 1e-15);
  }
  ExpectNear3(Rotation3::from_to(kE0, -kE0)(kE0), -kE0, 1e-15);
  EXPECT_EQ(Rotation3::from_to(kE1, kE1)(kE2), kE2);
}

TEST(SphericalPolygon, RotationPreservesCertificate) {
  Rng rng(14);
  const SphericalPolygon m = build_spherical_polygon(testing::spherical_regular_polygon(11, 0.8), 0.2);
  for (int i = 0; i < 20; ++i) {
    const Rotation3 r = random_rotation(rng);
    const SphericalPolygon q = m.rotated(r);
    EXPECT_NEAR(q.perimeter(), m.perimeter(), 1e-13);
    EXPECT_NEAR(q.certificate().area, m.certificate().area, 1e-13);
    for (int k = 0; k < 20; ++k) {
      const double s = m.perimeter() * k / 20.0;
      ExpectNear3(sph_point_at(q, s), r(sph_point_at(m, s)), 1e-14);
    }
  }
}

TEST(SphCentroid, RegularPolygonIsCentered) {
  const SphericalPolygon m = build_spherical_polygon(testing::spherical_regular_polygon(13, 1.2, 0.4), 0.0);
  ExpectNear3(sph_centroid(m), kE0, 1e-14);
  ExpectNear3(sph_centroid(Octant()), Vec3(1, 1, 1) / std::sqrt(3.0), 1e-15);
}

TEST(PointArcDistance, Examples) {
  EXPECT_NEAR(point_arc_distance(kE2, kE0, kE1), kPi / 2, 1e-15);
  const Vec3 mid{std::sqrt(0.5), std::sqrt(0.5), 0};
  EXPECT_NEAR(point_arc_distance(mid, kE0, kE1), 0.0, 1e-15);
  const Vec3 lifted{std::cos(0.1) * std::sqrt(0.5), std::cos(0.1) * std::sqrt(0.5), std::sin(0.1)};
  EXPECT_NEAR(point_arc_distance(lifted, kE0, kE1), 0.1, 1e-15);
  const Vec3 beyond{std::cos(-0.3), std::sin(-0.3), 0};
  EXPECT_NEAR(point_arc_distance(beyond, kE0, kE1), 0.3, 1e-15);
}

TEST(SphericalHausdorff, Examples) {
  const SphericalPolygon m = build_spherical_polygon(testing::spherical_regular_polygon(40, 0.5), 0.0);
  EXPECT_LT(spherical_hausdorff(m, m), 1e-14);
  const SphericalPolygon wider = build_spherical_polygon(testing::spherical_regular_polygon(40, 0.51), 0.0);
  const double d = spherical_hausdorff(m, wider);
  EXPECT_GT(d, 0.0099);
  EXPECT_LT(d, 0.0101);
  EXPECT_EQ(d, spherical_hausdorff(wider, m));
}

}  // namespace
}  // namespace isocomb
