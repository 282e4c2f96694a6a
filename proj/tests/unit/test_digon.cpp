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

#include "isocomb/digon.hpp"
#include "isocomb/error.hpp"

namespace isocomb {
namespace {

template <typename F>
ErrorCode ErrorOf(F&& f) {
  try {
    f();
  } catch (const GeometryError& e) {
    return e.code();
  }
  return ErrorCode::kConfigError;
}

TEST(MakeDigon, AngleBounds) {
  EXPECT_NO_THROW(make_digon(Angle(kPi / 3)));
  EXPECT_EQ(make_digon(Angle(1.0)).perimeter(), kTwoPi);
  EXPECT_EQ(ErrorOf([] { make_digon(Angle(0.0)); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(ErrorOf([] { make_digon(Angle(kPi)); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(ErrorOf([] { make_digon(Angle(-0.5)); }), ErrorCode::kInvalidArgument);
}

TEST(TruncatedPerimeter, LimitsAndMonotonicity) {
  EXPECT_NEAR(truncated_perimeter(0.0, 1.0), kTwoPi, 1e-15);
  EXPECT_NEAR(truncated_perimeter(kPi / 2, 1.0), 2.0, 1e-14);
  double prev = kTwoPi;
  for (int k = 1; k < 100; ++k) {
    const double p = truncated_perimeter(k * kPi / 200, 0.8);
    EXPECT_LT(p, prev);
    prev = p;
  }
}

TEST(TruncateDigons, PerimetersMatch) {
  const Digon d1 = make_digon(Angle(kPi / 3));
  const Digon d2 = make_digon(Angle(kPi / 2));
  for (double eps : {0.2, 0.1, 0.05, 0.025}) {
    const TruncatedPair t = truncate_digons(d1, d2, eps);
    EXPECT_EQ(t.depth1, eps);
    EXPECT_GT(t.depth2, eps);
    EXPECT_NEAR(t.q1.perimeter(), t.q2.perimeter(), 1e-12 * t.q1.perimeter());
    EXPECT_NEAR(t.q1.perimeter(), truncated_perimeter(eps, kPi / 3), 1e-13);
    EXPECT_EQ(t.q1.size(), 4u);
    EXPECT_TRUE(t.q1.certificate().is_convex);
    EXPECT_TRUE(t.q2.certificate().is_convex);
  }
}

TEST(TruncateDigons, EqualDigonsGiveEqualDepths) {
  const Digon d = make_digon(Angle(1.1));
  const TruncatedPair t = truncate_digons(d, d, 0.1);
  EXPECT_NEAR(t.depth2, 0.1, 1e-12);
}

TEST(TruncateDigons, BaseOffsetMovesSecondBase) {
  const Digon d1 = make_digon(Angle(kPi / 3));
  const Digon d2 = make_digon(Angle(kPi / 2));
  const TruncatedPair a = truncate_digons(d1, d2, 0.1);
  const TruncatedPair b = truncate_digons(d1, d2, 0.1, 0.3);
  EXPECT_NEAR(arc_length(sph_point_at(b.q2, 0.0), sph_point_at(a.q2, 0.3)), 0.0, 1e-14);
}

TEST(TruncateDigons, Errors) {
  const Digon d1 = make_digon(Angle(0.2));
  const Digon d2 = make_digon(Angle(3.0));
  EXPECT_EQ(ErrorOf([&] { truncate_digons(d1, d1, 0.0); }), ErrorCode::kTruncationTooDeep);
  EXPECT_EQ(ErrorOf([&] { truncate_digons(d1, d1, kPi / 4); }), ErrorCode::kTruncationTooDeep);
  EXPECT_EQ(ErrorOf([&] { truncate_digons(d1, d2, 0.7); }), ErrorCode::kTruncationTooDeep);
}

TEST(CombineDihedral, LadderConvergesToAverageAngle) {
  const Digon d1 = make_digon(Angle(kPi / 3));
  const Digon d2 = make_digon(Angle(kPi / 2));
  const std::vector<double> ladder{0.2, 0.1, 0.05, 0.025};
  const DihedralReport r = combine_dihedral(d1, d2, ladder);
  ASSERT_EQ(r.levels.size(), ladder.size());
  EXPECT_TRUE(r.all_convex);
  EXPECT_TRUE(r.hausdorff_decreasing);
  EXPECT_EQ(r.levels[0].hausdorff_to_previous, 0.0);
  for (std::size_t i = 1; i < r.levels.size(); ++i) {
    EXPECT_GT(r.levels[i].perimeter, r.levels[i - 1].perimeter);
    EXPECT_LT(std::abs(r.levels[i].angle_estimate - 5 * kPi / 12),
              std::abs(r.levels[i - 1].angle_estimate - 5 * kPi / 12) + 1e-12);
  }
  EXPECT_NEAR(r.levels.back().angle_estimate, 5 * kPi / 12, 0.02);
}

TEST(CombineDihedral, OffsetBases) {
  const Digon d1 = make_digon(Angle(kPi / 3));
  const Digon d2 = make_digon(Angle(kPi / 2));
  const std::vector<double> ladder{0.2, 0.1, 0.05, 0.025};
  const DihedralReport r = combine_dihedral(d1, d2, ladder, 0.3);
  EXPECT_TRUE(r.all_convex);
  EXPECT_TRUE(r.hausdorff_decreasing);
}

TEST(CombineDihedral, IdenticalDigonsReproduceTheDigon) {
  const Digon d = make_digon(Angle(1.0));
  const std::vector<double> ladder{0.1, 0.05};
  const DihedralReport r = combine_dihedral(d, d, ladder);
  EXPECT_TRUE(r.all_convex);
  for (const DihedralLevel& level : r.levels) EXPECT_NEAR(level.angle_estimate, 1.0, 1e-9);
}

TEST(CombineDihedral, RejectsBadLadder) {
  const Digon d = make_digon(Angle(1.0));
  const std::vector<double> rising{0.05, 0.1};
  const std::vector<double> negative{0.1, -0.05};
  EXPECT_EQ(ErrorOf([&] { combine_dihedral(d, d, rising); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(ErrorOf([&] { combine_dihedral(d, d, negative); }), ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace isocomb
