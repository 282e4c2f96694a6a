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


#include "isocomb/harness/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>

#include "isocomb/combination.hpp"
#include "isocomb/cones.hpp"
#include "isocomb/error.hpp"
#include "isocomb/harness/json_io.hpp"
#include "isocomb/random_shapes.hpp"

namespace isocomb::harness {
namespace {

constexpr double kExteriorSumSlack = 1e-8;
constexpr double kAngleLawSlack = 1e-9;

class Digest {
 public:
  void add(double v) { bytes_.append(reinterpret_cast<const char*>(&v), sizeof v); }
  void add(const Vec2& v) { add(v.x); add(v.y); }
  void add(const Vec3& v) { add(v.x0); add(v.x1); add(v.x2); }
  std::string hex() const { return fnv1a_hex(bytes_.data(), bytes_.size()); }

 private:
  std::string bytes_;
};

PlanarPolygon unit_square() { return build_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, 0.0); }

SphericalPolygon octant_link() {
  return build_spherical_polygon({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 0.0);
}

const char* kind_name(SuiteKind k) { return k == SuiteKind::kPlanar ? "planar" : "cone"; }

}  // namespace

std::string fnv1a_hex(const void* data, std::size_t size) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < size; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

void validate_config(const SuiteConfig& c) {
  auto fail = [](const std::string& what) { throw GeometryError(ErrorCode::kConfigError, what); };
  if (c.trials < 1) fail("trials must be at least 1");
  if (c.min_vertices < 3) fail("min_vertices must be at least 3");
  if (c.max_vertices < c.min_vertices) fail("max_vertices is below min_vertices");
  if (!(c.cyclic_fraction >= 0.0 && c.cyclic_fraction <= 1.0)) fail("cyclic_fraction must lie in [0, 1]");
  if (!(c.min_link_length > 0.0)) fail("link length range must be positive");
  if (!(c.max_link_length < kTwoPi)) fail("link length must stay below 2 pi");
  if (!(c.min_link_length <= c.max_link_length)) fail("link length range is empty");
  if (c.replay && *c.replay >= c.trials) fail("replay index is outside the trial range");
}

Tolerances tolerances_from_env(Tolerances base) {
  const char* raw = std::getenv("ISOCOMB_TOL");
  if (raw == nullptr || *raw == '\0') return base;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
    throw GeometryError(ErrorCode::kConfigError, std::string("ISOCOMB_TOL is not a positive number: ") + raw);
  }
  base.certificate = v;
  return base;
}

MarkedPair planar_trial_pair(const SuiteConfig& config, std::size_t index) {
  const Tolerances& tol = config.tolerances;
  if (config.identical_pair) return make_pair(unit_square(), unit_square(), tol);
  Rng rng(trial_seed(config.seed, index));
  const bool cyclic = rng.uniform01() < config.cyclic_fraction;
  auto draw = [&] {
    return cyclic ? random_cyclic_polygon(rng, rng.uniform_int(config.min_vertices, config.max_vertices))
                  : random_convex_polygon(rng, config.min_vertices, config.max_vertices);
  };
  PlanarPolygon f1 = draw();
  PlanarPolygon f2 = draw();
  return random_isometric_pair(rng, f1, std::move(f2));
}

ConePair cone_trial_pair(const SuiteConfig& config, std::size_t index) {
  ConePair pair;
  if (config.identical_pair) {
    pair.k1 = pair.k2 = cone_from_link(octant_link());
    pair.target_length = pair.k1.link.perimeter();
    return pair;
  }
  Rng rng(trial_seed(config.seed, index));
  ConeGeneratorConfig gen;
  gen.min_length = config.min_link_length;
  gen.max_length = config.max_link_length;
  return random_isometric_cone_pair(rng, gen);
}

TrialReport run_planar_trial(const SuiteConfig& config, std::size_t index) {
  TrialReport r;
  r.trial_id = index;
  r.seed = trial_seed(config.seed, index);
  const Tolerances& tol = config.tolerances;
  try {
    const MarkedPair pair = planar_trial_pair(config, index);
    Digest d;
    for (const Vec2& v : pair.F1.vertices()) d.add(v);
    d.add(pair.F1.base_s());
    for (const Vec2& v : pair.F2.vertices()) d.add(v);
    d.add(pair.F2.base_s());
    r.digest = d.hex();
    r.vertices1 = pair.F1.size();
    r.vertices2 = pair.F2.size();

    const auto [alignment, combined] = combine_aligned(pair, tol);
    r.margin = alignment.margin.radians;
    r.sigma0 = alignment.sigma0;
    r.min_exterior = combined.certificate.min_exterior;
    r.exterior_sum = combined.certificate.exterior_sum;
    r.bending_residual = bending_check(combined);
    for (const CombinationVertexEvent& e : vertex_events(alignment.aligned, tol)) {
      if (e.case_id == EventCase::kEdgeEdge) continue;
      r.angle_law_residual = std::max(
          r.angle_law_residual, std::abs(e.beta.radians - 0.5 * (e.beta1.radians + e.beta2.radians)));
    }
    if (!combined.certificate.is_convex) {
      r.failure = "combined curve is not certified convex";
    } else if (std::abs(r.exterior_sum - kTwoPi) > kExteriorSumSlack) {
      r.failure = "exterior angle sum differs from 2 pi";
    } else if (r.angle_law_residual > kAngleLawSlack) {
      r.failure = "vertex angle law violated";
    }
  } catch (const GeometryError& e) {
    r.failure = e.what();
  }
  r.pass = r.failure.empty();
  return r;
}

TrialReport run_cone_trial(const SuiteConfig& config, std::size_t index) {
  TrialReport r;
  r.trial_id = index;
  r.seed = trial_seed(config.seed, index);
  const Tolerances& tol = config.tolerances;
  try {
    const ConePair pair = cone_trial_pair(config, index);
    Digest d;
    for (const Vec3& v : pair.k1.link.vertices()) d.add(v);
    d.add(pair.k1.link.base_s());
    for (const Vec3& v : pair.k2.link.vertices()) d.add(v);
    d.add(pair.k2.link.base_s());
    r.digest = d.hex();
    r.vertices1 = pair.k1.link.size();
    r.vertices2 = pair.k2.link.size();
    r.link_length = pair.k1.link.perimeter();

    const ConePositioning pos = position_cones(pair.k1, pair.k2, tol);
    const SphericalCertificate& cert = pos.combined.link.certificate();
    r.psi = pos.psi.radians;
    r.sigma0 = pos.sigma0;
    r.margin = pos.margin;
    r.min_exterior = cert.min_turning;
    r.exterior_sum = cert.turning_sum;
    r.gauss_bonnet_residual = cert.gauss_bonnet_residual;
    if (!cert.is_convex) r.failure = "combined link is not certified convex";
  } catch (const GeometryError& e) {
    r.failure = e.what();
  }
  r.pass = r.failure.empty();
  return r;
}

SuiteReport run_suite(const SuiteConfig& config) {
  validate_config(config);
  SuiteReport report;
  report.kind = config.kind;
  report.config = config;

  std::vector<std::size_t> indices;
  if (config.replay) {
    indices.push_back(*config.replay);
  } else {
    for (std::size_t i = 0; i < config.trials; ++i) indices.push_back(i);
  }
  report.trials.resize(indices.size());
  auto run_one = [&](std::size_t slot) {
    report.trials[slot] = config.kind == SuiteKind::kPlanar ? run_planar_trial(config, indices[slot])
                                                            : run_cone_trial(config, indices[slot]);
  };

  std::size_t threads = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, indices.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t slot = next++; slot < indices.size(); slot = next++) run_one(slot);
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  report.passed = static_cast<std::size_t>(
      std::count_if(report.trials.begin(), report.trials.end(), [](const TrialReport& t) { return t.pass; }));
  return report;
}

SuiteReport run_planar_suite(SuiteConfig config) {
  config.kind = SuiteKind::kPlanar;
  return run_suite(config);
}

SuiteReport run_cone_suite(SuiteConfig config) {
  config.kind = SuiteKind::kCone;
  return run_suite(config);
}

std::string format_report(const SuiteReport& report) {
  std::string out;
  double worst_margin = kPi;
  double worst_min_exterior = kPi;
  double worst_sum = 0.0;
  double worst_law = 0.0;
  double worst_gb = 0.0;
  for (const TrialReport& t : report.trials) {
    Json line = {{"trial_id", t.trial_id},
                 {"seed", t.seed},
                 {"digest", t.digest},
                 {"vertices", {t.vertices1, t.vertices2}},
                 {"pass", t.pass},
                 {"margin", t.margin},
                 {"sigma0", t.sigma0}};
    if (report.kind == SuiteKind::kPlanar) {
      line["min_exterior"] = t.min_exterior;
      line["exterior_sum"] = t.exterior_sum;
      line["angle_law_residual"] = t.angle_law_residual;
      line["bending_residual"] = t.bending_residual;
    } else {
      line["link_length"] = t.link_length;
      line["psi"] = t.psi;
      line["min_turning"] = t.min_exterior;
      line["turning_sum"] = t.exterior_sum;
      line["gauss_bonnet_residual"] = t.gauss_bonnet_residual;
    }
    if (!t.pass) line["failure"] = t.failure;
    out += line.dump() + "\n";
    if (t.pass) {
      worst_margin = std::min(worst_margin, t.margin);
      worst_min_exterior = std::min(worst_min_exterior, t.min_exterior);
      worst_sum = std::max(worst_sum, std::abs(t.exterior_sum - kTwoPi));
      worst_law = std::max(worst_law, t.angle_law_residual);
      worst_gb = std::max(worst_gb, t.gauss_bonnet_residual);
    }
  }
  const std::size_t n = report.trials.size();
  Json summary = {{"kind", kind_name(report.kind)},
                  {"seed", report.config.seed},
                  {"trials", n},
                  {"passed", report.passed},
                  {"pass_rate", n == 0 ? 0.0 : static_cast<double>(report.passed) / static_cast<double>(n)},
                  {"min_margin", worst_margin},
                  {"min_exterior", worst_min_exterior}};
  if (report.kind == SuiteKind::kPlanar) {
    summary["max_exterior_sum_error"] = worst_sum;
    summary["max_angle_law_residual"] = worst_law;
  } else {
    summary["max_gauss_bonnet_residual"] = worst_gb;
  }
  out += Json{{"summary", summary}}.dump() + "\n";
  return out;
}

}  // namespace isocomb::harness
