// Copyright 2026 The symprot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "symprot/symprot.hpp"

namespace {

symprot::CMatrix random_matrix(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  symprot::CMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = {nd(rng), nd(rng)};
  return m;
}

void BM_Permanent(benchmark::State& state) {
  const auto a = random_matrix(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(symprot::permanent(a));
}
BENCHMARK(BM_Permanent)->DenseRange(4, 12, 2);

void BM_LiftHm(benchmark::State& state) {
  const auto basis = symprot::FockBasis::make(symprot::ModeSpace::hm(1),
                                              static_cast<int>(state.range(0)));
  symprot::ScatterSampler sampler(2, symprot::Unitarity::Subunitary);
  const auto s = sampler.sample(basis->space());
  for (auto _ : state) benchmark::DoNotOptimize(symprot::lift(s.matrix(), basis).matrix);
  state.counters["dim"] = static_cast<double>(basis->size());
}
BENCHMARK(BM_LiftHm)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_Certify(benchmark::State& state) {
  const auto psi = symprot::build(symprot::StateRecipe::parse(
      "pair:m=1,N=" + std::to_string(state.range(0))));
  symprot::CertificationConfig cfg;
  cfg.n_samples = 16;
  for (auto _ : state) benchmark::DoNotOptimize(symprot::certify(psi, cfg).worst_residual);
}
BENCHMARK(BM_Certify)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_SearchH0(benchmark::State& state) {
  symprot::CertificationConfig cfg;
  cfg.n_samples = 16;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        symprot::find_protected(symprot::ModeSpace::h0(), static_cast<int>(state.range(0)), cfg)
            .rays.size());
  }
}
BENCHMARK(BM_SearchH0)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
