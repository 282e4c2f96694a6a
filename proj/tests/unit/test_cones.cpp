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

#include <algorithm>
#include <cmath>
#include <vector>

#include "isocomb/cones.hpp"
#include "isocomb/error.hpp"
#include "isocomb/random_shapes.hpp"
#include "oracles.hpp"

namespace isocomb {
namespace {

const Vec3 kE0{1, 0, 0};
const Vec3 kE1{0, 1, 0};
const Vec3 kE2{0, 0, 1};

Vec3 RandomUpper(Rng& rng, double min_x0) {
  for (;;) {
    const Vec3 v{rng.uniform(min_x0, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    if (norm(v) > 1.0 || norm(v) < 0.1) continue;
    const Vec3 u = v / norm(v);
    if (u.x0 >= min_x0) return u;
  }
}

ConvexCone3 RegularCone(std::size_t n, double rho, const Rotation3& r = Rotation3::identity()) {
  return cone_from_link(build_spherical_polygon(testing::spherical_regular_polygon(n, rho), 0.0).rotated(r));
}

template <typename F>
ErrorCode ErrorOf(F&& f) {
  try {
    f();
  } catch (const GeometryError& e) {
    return e.code();
  }
  return ErrorCode::kConfigError;
}

TEST(PogorelovForward, Examples) {
  const auto [a, b] = pogorelov_forward(kE0, kE0);
  EXPECT_EQ(a, (Vec2{0, 0}));
  EXPECT_EQ(b, (Vec2{0, 0}));
  const auto [c, d] = pogorelov_forward(kE0, kE1);
  EXPECT_EQ(c, (Vec2{0, 0}));
  EXPECT_EQ(d, (Vec2{1, 0}));
  EXPECT_EQ(ErrorOf([] { pogorelov_forward(kE1, kE2); }), ErrorCode::kNonPositiveHeight);
  EXPECT_EQ(ErrorOf([] { pogorelov_forward(kE1, Vec3{-0.5, 0, std::sqrt(0.75)}); }),
            ErrorCode::kNonPositiveHeight);
}

TEST(PogorelovInverse, Examples) {
  EXPECT_EQ(pogorelov_inverse({0, 0}), kE0);
  const Vec3 v = pogorelov_inverse({1, 0});
  EXPECT_NEAR(v.x0, std::sqrt(0.5), 2e-16);
  EXPECT_NEAR(v.x1, std::sqrt(0.5), 2e-16);
  EXPECT_EQ(v.x2, 0.0);
}

TEST(PogorelovIdentity, RandomPairs) {
  Rng rng(21);
  for (int i = 0; i < 10000; ++i) {
    EXPECT_LE(pogorelov_identity_check(RandomUpper(rng, 0.05), RandomUpper(rng, 0.05)), 1e-12);
  }
}

TEST(PogorelovForward, CommutesWithRotationAboutX0) {
  Rng rng(22);
  for (int i = 0; i < 1000; ++i) {
    const Vec3 r1 = RandomUpper(rng, 0.05);
    const Vec3 r2 = RandomUpper(rng, 0.05);
    const double psi = rng.uniform(-kPi, kPi);
    const auto [a, b] = pogorelov_forward(r1, r2);
    const auto [ra, rb] = pogorelov_forward(rotate_about_x0(Angle(psi), r1), rotate_about_x0(Angle(psi), r2));
    EXPECT_NEAR(norm(ra - rotated(a, psi)), 0.0, 1e-14);
    EXPECT_NEAR(norm(rb - rotated(b, psi)), 0.0, 1e-14);
  }
}

TEST(PogorelovForward, EqualChordsMapToEqualChords) {
  Rng rng(23);
  int checked = 0;
  while (checked < 2000) {
    const Vec3 r1 = RandomUpper(rng, 0.05);
    const Vec3 q1 = RandomUpper(rng, 0.05);
    const Rotation3 g = random_rotation(rng);
    const Vec3 r2 = g(r1);
    const Vec3 q2 = g(q1);
    if (r1.x0 + r2.x0 < 0.1 || q1.x0 + q2.x0 < 0.1) continue;
    const auto [tr1, tr2] = pogorelov_forward(r1, r2);
    const auto [tq1, tq2] = pogorelov_forward(q1, q2);
    const double d1 = norm(tr1 - tq1);
    const double d2 = norm(tr2 - tq2);
    EXPECT_NEAR(d1, d2, 1e-12 * std::max(1.0, d1));
    ++checked;
  }
}

TEST(LinkEvents, SharedVertices) {
  const SphericalPolygon m = build_spherical_polygon({kE0, kE1, kE2}, 0.0);
  const auto events = link_events(m, m, 1e-10);
  ASSERT_EQ(events.size(), 3u);
  for (std::size_t i = 0; i < events.size(); ++i) {
    EXPECT_EQ(events[i].v1, i);
    EXPECT_EQ(events[i].v2, i);
  }
  const auto shifted = link_events(m, m.rebased(0.5), 1e-10);
  EXPECT_EQ(shifted.size(), 6u);
}

TEST(TransformLinkPair, CongruentPairHasMatchingImages) {
  Rng rng(24);
  for (int i = 0; i < 20; ++i) {
    const SphericalPolygon m = build_spherical_polygon(testing::spherical_regular_polygon(7, 0.6, 0.1), 0.0);
    const Rotation3 tilt = Rotation3::about_axis(kE2, rng.uniform(-0.3, 0.3));
    const SphericalPolygon m1 = m.rotated(tilt);
    const SphericalPolygon m2 = m.rotated(Rotation3::about_x0(Angle(rng.uniform(-1, 1))) * tilt);
    const PogorelovImage img = transform_link_pair(m1, m2);
    ASSERT_TRUE(img.planar1 && img.planar2);
    EXPECT_NEAR(img.planar1->perimeter(), img.planar2->perimeter(), 1e-12);
    EXPECT_LE(segment_mismatch(img), 1e-12);
    for (double h : img.x0_sums) EXPECT_GT(h, 0.0);
  }
}

TEST(TransformLinkPair, Errors) {
  const SphericalPolygon a = build_spherical_polygon(testing::spherical_regular_polygon(6, 0.5), 0.0);
  const SphericalPolygon b = build_spherical_polygon(testing::spherical_regular_polygon(6, 0.6), 0.0);
  EXPECT_EQ(ErrorOf([&] { transform_link_pair(a, b); }), ErrorCode::kPerimeterMismatch);
  const SphericalPolygon down = a.rotated(Rotation3::about_axis(kE2, kPi));
  EXPECT_EQ(ErrorOf([&] { transform_link_pair(a, down); }), ErrorCode::kNonPositiveHeight);
}

TEST(TransformLinkPair, SubdivisionBoundsSampleSpacing) {
  const SphericalPolygon m = build_spherical_polygon(testing::spherical_regular_polygon(5, 0.7), 0.0);
  TransformOptions opt;
  opt.subdivisions = 64;
  const PogorelovImage img = transform_link_pair(m, m.rebased(0.3), {}, opt);
  for (std::size_t k = 1; k < img.s.size(); ++k) {
    EXPECT_LE(img.s[k] - img.s[k - 1], m.perimeter() / 64 + 1e-12);
  }
  EXPECT_LE(m.perimeter() - img.s.back(), m.perimeter() / 64 + 1e-12);
}

TEST(CombineCones, IdenticalConesAreExact) {
  Rng rng(25);
  for (int i = 0; i < 50; ++i) {
    const ConePair pair = random_isometric_cone_pair(rng);
    const SphericalPolygon& m = pair.k1.link;
    const ConvexCone3 c = combine_cones(pair.k1, pair.k1);
    EXPECT_TRUE(c.link.certificate().is_convex);
    for (const Vec3& v : m.vertices()) {
      EXPECT_NE(std::find(c.link.vertices().begin(), c.link.vertices().end(), v), c.link.vertices().end());
    }
    // The base point is an extra event when it is not a vertex.
    EXPECT_LE(c.link.size(), m.size() + 1);
    EXPECT_NEAR(arc_length(c.link.vertex(0), sph_point_at(m, 0.0)), 0.0, 1e-15);
    const SphericalPolygon at_vertex = m.rebased(0.0);
    const ConvexCone3 d = combine_cones(cone_from_link(at_vertex), cone_from_link(at_vertex));
    ASSERT_EQ(d.link.size(), m.size());
    for (std::size_t k = 0; k < m.size(); ++k) EXPECT_EQ(d.link.vertex(k), m.vertex(k));
  }
}

TEST(CombineCones, TiltedCircularConesGiveEllipticCone) {
  const std::size_t n = 96;
  const double rho = 0.4;
  const double theta = 0.5;
  const ConvexCone3 k1 = RegularCone(n, rho, Rotation3::about_axis(kE2, theta));
  const ConvexCone3 k2 = RegularCone(n, rho, Rotation3::about_axis(kE2, -theta));
  const ConvexCone3 c = combine_cones(k1, k2);
  ASSERT_EQ(c.link.size(), n);
  double lo = kPi, hi = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    Vec3 expected{std::cos(rho) * std::cos(theta), std::sin(rho) * std::cos(theta) * std::cos(lambda),
                  std::sin(rho) * std::sin(lambda)};
    expected = expected / norm(expected);
    EXPECT_NEAR(arc_length(c.link.vertex(k), expected), 0.0, 1e-14);
    lo = std::min(lo, arc_length(c.link.vertex(k), kE0));
    hi = std::max(hi, arc_length(c.link.vertex(k), kE0));
  }
  EXPECT_GT(hi - lo, 1e-2);
  EXPECT_TRUE(c.link.certificate().is_convex);
}

TEST(CombineCones, Errors) {
  const ConvexCone3 a = RegularCone(6, 0.5);
  const ConvexCone3 b = RegularCone(6, 0.6);
  EXPECT_EQ(ErrorOf([&] { combine_cones(a, b); }), ErrorCode::kPerimeterMismatch);
  const ConvexCone3 flipped = RegularCone(6, 0.5, Rotation3::about_axis(kE2, kPi));
  EXPECT_EQ(ErrorOf([&] { combine_cones(a, flipped); }), ErrorCode::kAntipodalCorrespondence);
}

TEST(CenteringRotation, CarriesCentroidToX0) {
  Rng rng(26);
  for (int i = 0; i < 50; ++i) {
    const Rotation3 r = random_rotation(rng);
    const SphericalPolygon m =
        build_spherical_polygon(testing::spherical_regular_polygon(9, rng.uniform(0.2, 1.3)), 0.0).rotated(r);
    const Rotation3 c = centering_rotation(m);
    const Vec3 axis = c(r(kE0));
    EXPECT_NEAR(arc_length(axis, kE0), 0.0, 1e-12);
  }
}

TEST(PositionCones, IdenticalConesNeedNoRotation) {
  const ConvexCone3 k = RegularCone(8, 0.7, Rotation3::about_axis(Vec3(0, 1, 1) / std::sqrt(2.0), 0.4));
  const ConePositioning p = position_cones(k, k);
  EXPECT_NEAR(p.psi.radians, 0.0, 1e-12);
  EXPECT_EQ(p.sigma0, 0.0);
  EXPECT_TRUE(p.combined.link.certificate().is_convex);
}

TEST(PositionCones, RotatedCopyIsPositioned) {
  Rng rng(27);
  for (int i = 0; i < 20; ++i) {
    const ConePair pair = random_isometric_cone_pair(rng);
    const ConvexCone3 copy = cone_from_link(pair.k1.link.rotated(random_rotation(rng)));
    const ConePositioning p = position_cones(pair.k1, copy);
    EXPECT_TRUE(p.combined.link.certificate().is_convex);
    EXPECT_GT(p.margin, 0.0);
  }
}

TEST(PositionCones, RandomIsometricPairs) {
  Rng rng(28);
  for (int i = 0; i < 40; ++i) {
    const ConePair pair = random_isometric_cone_pair(rng);
    const ConePositioning p = position_cones(pair.k1, pair.k2);
    const SphericalCertificate& c = p.combined.link.certificate();
    EXPECT_TRUE(c.is_convex);
    EXPECT_LE(std::abs(c.gauss_bonnet_residual), 1e-8);
    EXPECT_NEAR(p.positioned1.link.perimeter(), pair.target_length, 1e-9);
    for (std::size_t k = 0; k < p.positioned1.link.size(); ++k) {
      EXPECT_NEAR(arc_length(p.positioned1.link.vertex(k), p.frame1(pair.k1.link.vertex(k))), 0.0, 1e-14);
    }
  }
}

}  // namespace
}  // namespace isocomb
