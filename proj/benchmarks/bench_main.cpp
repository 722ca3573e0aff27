// benchmarks/bench_main.cpp

// Copyright 2026  Minkowski decoding authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "minkowski/decoder.hpp"
#include "minkowski/loss.hpp"
#include "minkowski/posterior_ops.hpp"
#include "minkowski/scoring.hpp"
#include "oracles.hpp"

namespace {

using namespace minkowski;

void BM_ClosedForm(benchmark::State& state) {
  const LossOrder order = LossOrder::even(static_cast<int>(state.range(0)));
  double mu = 0.0;
  for (auto _ : state) {
    mu += 0.001;
    if (mu > 1.0) mu = 0.0;
    benchmark::DoNotOptimize(closed_form_transform(Posterior(mu), order));
  }
}
BENCHMARK(BM_ClosedForm)->Arg(4)->Arg(6)->Arg(10);

void BM_Newton(benchmark::State& state) {
  const LossOrder order = LossOrder::even(static_cast<int>(state.range(0)));
  double mu = 0.0;
  for (auto _ : state) {
    mu += 0.001;
    if (mu > 1.0) mu = 0.0;
    benchmark::DoNotOptimize(newton_transform(Posterior(mu), order));
  }
}
BENCHMARK(BM_Newton)->Arg(4)->Arg(6)->Arg(10);

void BM_TransformMatrix(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto p = testing::random_posteriors(rng, 1000, state.range(0));
  const LossOrder order = LossOrder::even(4);
  for (auto _ : state) benchmark::DoNotOptimize(transform_matrix(p, order));
  state.SetItemsProcessed(state.iterations() * p.values().size());
}
BENCHMARK(BM_TransformMatrix)->Arg(10)->Arg(100);

void BM_Viterbi(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto states = static_cast<std::size_t>(state.range(0));
  const HmmModel hmm = testing::random_hmm(rng, states, states);
  const auto scores = to_log_scores(testing::random_posteriors(rng, 500, states));
  for (auto _ : state) benchmark::DoNotOptimize(viterbi_decode(scores, hmm));
  state.SetItemsProcessed(state.iterations() * 500);
}
BENCHMARK(BM_Viterbi)->Arg(4)->Arg(16)->Arg(64);

void BM_Wer(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const auto len = static_cast<std::size_t>(state.range(0));
  auto ref = testing::random_tokens(rng, len, 20);
  ref.push_back("w0");
  const auto hyp = testing::random_tokens(rng, len, 20);
  for (auto _ : state) benchmark::DoNotOptimize(align_and_score(ref, hyp));
}
BENCHMARK(BM_Wer)->Arg(50)->Arg(500);

}  // namespace

BENCHMARK_MAIN();
