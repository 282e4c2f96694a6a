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


#include "isocomb/random_shapes.hpp"

#include <algorithm>
#include <cmath>

#include "isocomb/error.hpp"

namespace isocomb {

std::size_t Rng::uniform_int(std::size_t lo, std::size_t hi) {
  const auto span = static_cast<double>(hi - lo + 1);
  const auto k = static_cast<std::size_t>(uniform01() * span);
  return lo + std::min(k, hi - lo);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ (index * 0xd1b54a32d192ed03ULL));
}

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const Vec2& a, const Vec2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Vec2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Vec2& p : pts) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

PlanarPolygon random_convex_polygon(Rng& rng, std::size_t min_k, std::size_t max_k) {
  for (;;) {
    const std::size_t k = rng.uniform_int(min_k, max_k);
    std::vector<Vec2> pts(k);
    for (Vec2& p : pts) {
      const double r = std::sqrt(rng.uniform01());
      const double t = rng.uniform(0.0, kTwoPi);
      p = {r * std::cos(t), r * std::sin(t)};
    }
    std::vector<Vec2> hull = convex_hull(std::move(pts));
    if (hull.size() < 3) continue;
    const double u = rng.uniform01();
    try {
      PlanarPolygon f = build_polygon(std::move(hull), 0.0);
      return f.rebased(u * f.perimeter());
    } catch (const GeometryError&) {
      continue;
    }
  }
}

PlanarPolygon random_cyclic_polygon(Rng& rng, std::size_t n, double radius) {
  for (;;) {
    std::vector<double> angles(n);
    for (double& a : angles) a = rng.uniform(0.0, kTwoPi);
    std::sort(angles.begin(), angles.end());
    std::vector<Vec2> pts;
    pts.reserve(n);
    for (double a : angles) pts.push_back({radius * std::cos(a), radius * std::sin(a)});
    const double u = rng.uniform01();
    try {
      PlanarPolygon f = build_polygon(std::move(pts), 0.0);
      return f.rebased(u * f.perimeter());
    } catch (const GeometryError&) {
      continue;
    }
  }
}

RigidMotion2 random_motion(Rng& rng, double max_shift) {
  const double theta = rng.uniform(-kPi, kPi);
  const double tx = rng.uniform(-max_shift, max_shift);
  const double ty = rng.uniform(-max_shift, max_shift);
  return {Angle::normalized(theta), {tx, ty}};
}

MarkedPair random_isometric_pair(Rng& rng, const PlanarPolygon& f1, PlanarPolygon f2) {
  Vec2 center;
  for (const Vec2& v : f2.vertices()) center += v;
  center = center / static_cast<double>(f2.size());
  PlanarPolygon scaled = dilate_to_perimeter(f2, f1.perimeter(), center);
  PlanarPolygon moved = scaled.transformed(random_motion(rng));
  return make_pair(f1, std::move(moved));
}

Rotation3 random_rotation(Rng& rng) {
  const double u1 = rng.uniform01();
  const double u2 = rng.uniform(0.0, kTwoPi);
  const double u3 = rng.uniform(0.0, kTwoPi);
  const double a = std::sqrt(1.0 - u1);
  const double b = std::sqrt(u1);
  const double w = a * std::sin(u2), x = a * std::cos(u2), y = b * std::sin(u3), z = b * std::cos(u3);
  Rotation3 r;
  r.m = {{{1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)},
          {2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)},
          {2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)}}};
  return r;
}

namespace {

std::vector<Vec3> lift(const std::vector<Vec2>& gnomonic, double t) {
  std::vector<Vec3> out;
  out.reserve(gnomonic.size());
  for (const Vec2& w : gnomonic) out.push_back(unit_fixed_point(Vec3{1.0, t * w.x, t * w.y}));
  return out;
}

double lifted_perimeter(const std::vector<Vec2>& gnomonic, double t) {
  const std::vector<Vec3> v = lift(gnomonic, t);
  double p = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) p += arc_length(v[i], v[(i + 1) % v.size()]);
  return p;
}

}  // namespace

bool random_link_of_length(Rng& rng, double length, const ConeGeneratorConfig& cfg,
                           SphericalPolygon& out) {
  const std::size_t k = rng.uniform_int(cfg.min_points, cfg.max_points);
  const double cos_cap = std::cos(cfg.cap_colatitude);
  std::vector<Vec2> pts(k);
  for (Vec2& p : pts) {
    const double z = rng.uniform(cos_cap, 1.0);
    const double lon = rng.uniform(0.0, kTwoPi);
    const double r = std::sqrt(1.0 - z * z) / z;
    p = {r * std::cos(lon), r * std::sin(lon)};
  }
  const std::vector<Vec2> hull = convex_hull(std::move(pts));
  if (hull.size() < 3) return false;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    if (!(cross(hull[i], hull[(i + 1) % hull.size()]) > 0.0)) return false;  // origin outside
  }
  if (lifted_perimeter(hull, 1.0) < length) return false;

  double lo = 0.0, hi = 1.0, t = 1.0;
  for (int it = 0; it < 200; ++it) {
    t = 0.5 * (lo + hi);
    const double p = lifted_perimeter(hull, t);
    if (std::abs(p - length) <= 1e-12) break;
    (p < length ? lo : hi) = t;
  }
  if (std::abs(lifted_perimeter(hull, t) - length) > 1e-10) return false;
  try {
    out = build_spherical_polygon(lift(hull, t), 0.0);
  } catch (const GeometryError&) {
    return false;
  }
  return true;
}

ConePair random_isometric_cone_pair(Rng& rng, const ConeGeneratorConfig& cfg) {
  ConePair pair;
  for (;;) {
    pair.target_length = rng.uniform(cfg.min_length, cfg.max_length);
    SphericalPolygon a, b;
    int attempts = 0;
    while (!random_link_of_length(rng, pair.target_length, cfg, a) && ++attempts < 64) {
    }
    if (attempts >= 64) continue;
    attempts = 0;
    while (!random_link_of_length(rng, pair.target_length, cfg, b) && ++attempts < 64) {
    }
    if (attempts >= 64) continue;
    const double base1 = rng.uniform01();
    const double base2 = rng.uniform01();
    const Rotation3 r1 = random_rotation(rng);
    const Rotation3 r2 = random_rotation(rng);
    a = a.rotated(r1);
    b = b.rotated(r2);
    pair.k1 = cone_from_link(a.rebased(base1 * a.perimeter()));
    pair.k2 = cone_from_link(b.rebased(base2 * b.perimeter()));
    return pair;
  }
}

}  // namespace isocomb
