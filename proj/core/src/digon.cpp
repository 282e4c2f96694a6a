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


#include "isocomb/digon.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "isocomb/error.hpp"

namespace isocomb {
namespace {

Vec3 lune_point(double longitude, double colatitude) {
  return {std::sin(colatitude) * std::cos(longitude), std::sin(colatitude) * std::sin(longitude),
          std::cos(colatitude)};
}

SphericalPolygon quadrilateral(const Digon& d, double depth, double base_s, const Tolerances& tol) {
  const double a = d.angle.radians;
  std::vector<Vec3> v{lune_point(0.0, depth), lune_point(0.0, kPi - depth),
                      lune_point(a, kPi - depth), lune_point(a, depth)};
  for (Vec3& p : v) p = d.placement(p);
  return build_spherical_polygon(std::move(v), base_s, tol);
}

double dihedral_of_longest_edges(const SphericalPolygon& m) {
  std::vector<std::size_t> order(m.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.edge_length(a) > m.edge_length(b);
  });
  auto normal = [&](std::size_t i) { return cross(m.vertex(i), m.vertex((i + 1) % m.size())); };
  return kPi - angle_between(normal(order[0]), normal(order[1])).radians;
}

}  // namespace

Digon make_digon(Angle angle, const Rotation3& placement) {
  if (!(angle.radians > 0.0 && angle.radians < kPi)) {
    throw GeometryError(ErrorCode::kInvalidArgument, "digon angle must lie in (0, pi)");
  }
  return {angle, placement};
}

double truncated_perimeter(double depth, double angle) {
  const double s = std::sin(depth);
  const double c = std::cos(depth);
  const double cross_cut = std::acos(std::clamp(c * c + s * s * std::cos(angle), -1.0, 1.0));
  return 2.0 * (kPi - 2.0 * depth) + 2.0 * cross_cut;
}

TruncatedPair truncate_digons(const Digon& d1, const Digon& d2, double eps, double base_offset,
                              const Tolerances& tol) {
  if (!(eps > 0.0 && eps < kPi / 4.0)) {
    throw GeometryError(ErrorCode::kTruncationTooDeep, "eps must lie in (0, pi/4)");
  }
  const double target = truncated_perimeter(eps, d1.angle.radians);
  const double a2 = d2.angle.radians;
  double lo = 0.0;
  double hi = kPi / 2.0;
  if (truncated_perimeter(hi, a2) > target) {
    throw GeometryError(ErrorCode::kTruncationTooDeep, "no matching depth for the second digon");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    (truncated_perimeter(mid, a2) > target ? lo : hi) = mid;
  }
  const double depth2 = 0.5 * (lo + hi);
  if (!(depth2 < kPi / 2.0 - 1e-9)) {
    throw GeometryError(ErrorCode::kTruncationTooDeep, "matching depth reaches the equator");
  }

  TruncatedPair out{quadrilateral(d1, eps, 0.0, tol), quadrilateral(d2, depth2, base_offset, tol),
                    eps, depth2};
  const double p1 = out.q1.perimeter();
  const double p2 = out.q2.perimeter();
  if (std::abs(p1 - p2) > 1e-12 * p1) {
    throw GeometryError(ErrorCode::kPerimeterMismatch,
                        "equalized perimeters differ by " + std::to_string(std::abs(p1 - p2)));
  }
  return out;
}

DihedralReport combine_dihedral(const Digon& d1, const Digon& d2, std::span<const double> eps_ladder,
                                double base_offset, const Tolerances& tol) {
  for (std::size_t i = 0; i < eps_ladder.size(); ++i) {
    if (!(eps_ladder[i] > 0.0) || (i > 0 && !(eps_ladder[i] < eps_ladder[i - 1]))) {
      throw GeometryError(ErrorCode::kInvalidArgument, "eps ladder must be positive and decreasing");
    }
  }
  DihedralReport report;
  for (std::size_t i = 0; i < eps_ladder.size(); ++i) {
    const TruncatedPair quads = truncate_digons(d1, d2, eps_ladder[i], base_offset, tol);
    DihedralLevel level;
    level.eps = eps_ladder[i];
    level.depth2 = quads.depth2;
    level.perimeter = quads.q1.perimeter();
    level.positioning =
        position_cones(cone_from_link(quads.q1), cone_from_link(quads.q2), tol);
    const SphericalPolygon& link = level.positioning.combined.link;
    level.angle_estimate = dihedral_of_longest_edges(link);
    report.all_convex = report.all_convex && link.certificate().is_convex;
    if (i > 0) {
      const DihedralLevel& prev = report.levels.back();
      level.hausdorff_to_previous = spherical_hausdorff(prev.positioning.combined.link, link);
      if (i > 1 && !(level.hausdorff_to_previous < prev.hausdorff_to_previous)) {
        report.hausdorff_decreasing = false;
      }
    }
    report.levels.push_back(std::move(level));
  }
  return report;
}

}  // namespace isocomb
