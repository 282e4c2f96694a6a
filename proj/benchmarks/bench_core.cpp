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


#include <benchmark/benchmark.h>

#include <vector>

#include "isocomb/combination.hpp"
#include "isocomb/cones.hpp"
#include "isocomb/digon.hpp"
#include "isocomb/random_shapes.hpp"

namespace {

using namespace isocomb;

MarkedPair cyclic_pair(std::size_t n) {
  Rng rng(n);
  const PlanarPolygon f1 = random_cyclic_polygon(rng, n);
  const PlanarPolygon f2 = random_cyclic_polygon(rng, n, 2.0);
  return random_isometric_pair(rng, f1, f2);
}

void BM_Align(benchmark::State& state) {
  const MarkedPair pair = cyclic_pair(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(align(pair));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Align)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_CombineAligned(benchmark::State& state) {
  const MarkedPair pair = cyclic_pair(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(combine_aligned(pair));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CombineAligned)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_VertexEvents(benchmark::State& state) {
  const MarkedPair aligned = align(cyclic_pair(static_cast<std::size_t>(state.range(0)))).aligned;
  for (auto _ : state) benchmark::DoNotOptimize(vertex_events(aligned));
}
BENCHMARK(BM_VertexEvents)->Arg(64)->Arg(1024);

void BM_BuildPolygon(benchmark::State& state) {
  Rng rng(3);
  const PlanarPolygon f = random_cyclic_polygon(rng, static_cast<std::size_t>(state.range(0)));
  const std::vector<Vec2> v(f.vertices().begin(), f.vertices().end());
  for (auto _ : state) benchmark::DoNotOptimize(build_polygon(v, 0.0));
}
BENCHMARK(BM_BuildPolygon)->Arg(64)->Arg(4096);

void BM_PogorelovForward(benchmark::State& state) {
  const Vec3 r1{0.8, 0.6, 0.0};
  const Vec3 r2{0.6, 0.0, 0.8};
  for (auto _ : state) benchmark::DoNotOptimize(pogorelov_forward(r1, r2));
}
BENCHMARK(BM_PogorelovForward);

void BM_TransformLinkPair(benchmark::State& state) {
  Rng rng(5);
  const ConePair pair = random_isometric_cone_pair(rng);
  const Rotation3 c1 = centering_rotation(pair.k1.link);
  const SphericalPolygon m1 = pair.k1.link.rotated(c1);
  const SphericalPolygon m2 = pair.k1.link.rotated(Rotation3::about_x0(Angle(0.4)) * c1);
  TransformOptions opt;
  opt.subdivisions = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(transform_link_pair(m1, m2, {}, opt));
}
BENCHMARK(BM_TransformLinkPair)->Arg(64)->Arg(1024);

void BM_PositionCones(benchmark::State& state) {
  Rng rng(6);
  const ConePair pair = random_isometric_cone_pair(rng);
  for (auto _ : state) benchmark::DoNotOptimize(position_cones(pair.k1, pair.k2));
}
BENCHMARK(BM_PositionCones);

void BM_CombineDihedral(benchmark::State& state) {
  const Digon d1 = make_digon(Angle(1.0471975511965976));
  const Digon d2 = make_digon(Angle(1.5707963267948966));
  const std::vector<double> ladder{0.2, 0.1, 0.05, 0.025};
  for (auto _ : state) benchmark::DoNotOptimize(combine_dihedral(d1, d2, ladder));
}
BENCHMARK(BM_CombineDihedral);

}  // namespace

BENCHMARK_MAIN();
