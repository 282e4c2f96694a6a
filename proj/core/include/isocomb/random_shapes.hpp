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

/// @file random_shapes.hpp
/// @brief Seeded generators for convex polygons, isometric planar pairs and
/// isometric cone pairs.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "isocomb/combination.hpp"
#include "isocomb/cones.hpp"
#include "isocomb/geometry.hpp"
#include "isocomb/planar_polygon.hpp"
#include "isocomb/spherical_polygon.hpp"

namespace isocomb {

/// Portable deterministic generator: the draw sequence depends only on the
/// seed, not on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  /// Uniform integer in [lo, hi].
  std::size_t uniform_int(std::size_t lo, std::size_t hi);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);
/// Per-trial seed derived from the master seed and the trial index.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

/// Counterclockwise hull without collinear points (monotone chain).
std::vector<Vec2> convex_hull(std::vector<Vec2> points);

/// Hull of k uniform points in the unit disk, k drawn from [min_k, max_k];
/// base point uniform on the boundary. Degenerate hulls are redrawn.
PlanarPolygon random_convex_polygon(Rng& rng, std::size_t min_k, std::size_t max_k);

/// n points at sorted uniform angles on a circle of the given radius.
PlanarPolygon random_cyclic_polygon(Rng& rng, std::size_t n, double radius = 1.0);

RigidMotion2 random_motion(Rng& rng, double max_shift = 5.0);

/// F2 is dilated to F1's perimeter and moved by a random rigid motion.
MarkedPair random_isometric_pair(Rng& rng, const PlanarPolygon& f1, PlanarPolygon f2);

/// Uniformly distributed rotation (Shoemake's quaternion method).
Rotation3 random_rotation(Rng& rng);

struct ConePair {
  ConvexCone3 k1;
  ConvexCone3 k2;
  double target_length = 0.0;
};

struct ConeGeneratorConfig {
  double min_length = 0.5;
  double max_length = kTwoPi - 0.5;
  std::size_t min_points = 4;
  std::size_t max_points = 16;
  /// Largest colatitude of the raw points around the pole.
  double cap_colatitude = 1.5;
};

/// Convex spherical polygon around +x0 whose gnomonic image is the hull of
/// random points in a polar cap, scaled toward the pole to the given length.
/// Returns false when the sampled hull is too small to reach it.
bool random_link_of_length(Rng& rng, double length, const ConeGeneratorConfig& cfg,
                           SphericalPolygon& out);

/// Two independent links of a common random length, each randomly rotated
/// and rebased.
ConePair random_isometric_cone_pair(Rng& rng, const ConeGeneratorConfig& cfg = {});

}  // namespace isocomb
