// Copyright 2026 The syncagg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference against the OpenMP paths: batch verification, constituent
// validation during aggregation, and the Monte-Carlo trial runner.

#include <benchmark/benchmark.h>

#include "syncagg/games.hpp"
#include "syncagg/parallel.hpp"
#include "syncagg/sas.hpp"

namespace syncagg {
namespace {

struct Batch {
  SasParams pp;
  std::vector<GroupElement> vks;
  std::vector<Bytes> msgs;
  std::vector<SasSignature> sigs;
};

const Batch& production_batch(std::size_t n) {
  static std::map<std::size_t, Batch> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Rng rng(9);
  Batch b{sas_setup(GroupParams{Backend::production}, 16, rng), {}, {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    SasKeyPair kp = sas_keygen(b.pp, rng);
    Bytes m(32);
    rng.fill(m);
    b.vks.push_back(kp.vk);
    b.sigs.push_back(sas_sign(b.pp, kp.sk, 5, m));
    b.msgs.push_back(std::move(m));
  }
  return cache.emplace(n, std::move(b)).first->second;
}

Execution mode(const benchmark::State& state) { return state.range(1) ? Execution::parallel : Execution::serial; }

void BM_VerifyBatch(benchmark::State& state) {
  const Batch& b = production_batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_batch(b.pp, b.vks, b.msgs, b.sigs, mode(state)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = mode(state) == Execution::parallel ? parallel_threads() : 1;
}
BENCHMARK(BM_VerifyBatch)->ArgsProduct({{16, 64}, {0, 1}})->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);

void BM_Aggregate(benchmark::State& state) {
  const Batch& b = production_batch(static_cast<std::size_t>(state.range(0)));
  AggregateOptions opts;
  opts.parallel_validation = mode(state) == Execution::parallel;
  for (auto _ : state) benchmark::DoNotOptimize(sas_aggregate(b.pp, b.vks, b.msgs, b.sigs, opts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Aggregate)->ArgsProduct({{16, 64}, {0, 1}})->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);

void BM_AggVerify(benchmark::State& state) {
  const Batch& b = production_batch(static_cast<std::size_t>(state.range(0)));
  const AggregateSignature agg = sas_aggregate(b.pp, b.vks, b.msgs, b.sigs);
  for (auto _ : state) benchmark::DoNotOptimize(sas_agg_verify(b.pp, b.vks, b.msgs, agg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AggVerify)->Arg(16)->Arg(64)->ArgName("n")->Unit(benchmark::kMillisecond);

void BM_ReductionTrials(benchmark::State& state) {
  const GroupParams gp{Backend::toy, 128, 101};
  std::function<bool(Rng&)> trial = [&](Rng& rng) {
    CooperativeForger f(4, 4);
    return run_reduction_trial(f, 4, 4, gp, rng, [&](const MclKeyPair& kp) { f.set_secret(kp.sk.x); }).success();
  };
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_trials(static_cast<std::size_t>(state.range(0)), ++seed, trial, mode(state)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ReductionTrials)->ArgsProduct({{1000}, {0, 1}})->ArgNames({"trials", "parallel"})->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace syncagg

BENCHMARK_MAIN();
