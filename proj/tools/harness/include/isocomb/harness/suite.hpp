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

/// @file suite.hpp
/// @brief Seeded randomized suites for planar and cone combination.
///
/// Trial i draws from a generator seeded with trial_seed(seed, i), so any
/// trial can be replayed on its own. Reports never contain timings, which
/// keeps them byte-identical across runs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isocomb/combination.hpp"
#include "isocomb/geometry.hpp"
#include "isocomb/random_shapes.hpp"
#include "isocomb/tolerances.hpp"

namespace isocomb::harness {

enum class SuiteKind { kPlanar, kCone };

struct SuiteConfig {
  SuiteKind kind = SuiteKind::kPlanar;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t min_vertices = 3;
  std::size_t max_vertices = 200;
  /// Fraction of planar trials drawn as cyclic polygons instead of hulls.
  double cyclic_fraction = 0.2;
  double min_link_length = 0.5;
  double max_link_length = kTwoPi - 0.5;
  /// Every trial uses the same fixed shape twice (square or octant link).
  bool identical_pair = false;
  std::size_t threads = 0;
  std::optional<std::size_t> replay;
  Tolerances tolerances;
};

/// Throws GeometryError(kConfigError).
void validate_config(const SuiteConfig& config);

/// Tolerances with ISOCOMB_TOL applied to the certificate slack when set.
/// Throws GeometryError(kConfigError) on a malformed value.
Tolerances tolerances_from_env(Tolerances base = {});

struct TrialReport {
  std::size_t trial_id = 0;
  std::uint64_t seed = 0;
  std::string digest;
  std::size_t vertices1 = 0;
  std::size_t vertices2 = 0;
  bool pass = false;
  std::string failure;
  double margin = 0.0;
  double min_exterior = 0.0;
  double exterior_sum = 0.0;
  double angle_law_residual = 0.0;
  double bending_residual = 0.0;
  double link_length = 0.0;
  double psi = 0.0;
  double sigma0 = 0.0;
  double gauss_bonnet_residual = 0.0;
};

struct SuiteReport {
  SuiteKind kind = SuiteKind::kPlanar;
  SuiteConfig config;
  std::vector<TrialReport> trials;
  std::size_t passed = 0;
};

/// Inputs of trial `index`; the same pair the suite evaluates.
MarkedPair planar_trial_pair(const SuiteConfig& config, std::size_t index);
ConePair cone_trial_pair(const SuiteConfig& config, std::size_t index);

TrialReport run_planar_trial(const SuiteConfig& config, std::size_t index);
TrialReport run_cone_trial(const SuiteConfig& config, std::size_t index);

/// All trials (or only config.replay), evaluated concurrently and reported
/// in index order.
SuiteReport run_suite(const SuiteConfig& config);
SuiteReport run_planar_suite(SuiteConfig config);
SuiteReport run_cone_suite(SuiteConfig config);

/// One JSON object per trial line followed by an aggregate footer line.
std::string format_report(const SuiteReport& report);

/// 64-bit FNV-1a over raw bytes, as 16 hex digits.
std::string fnv1a_hex(const void* data, std::size_t size);

}  // namespace isocomb::harness
