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

// Data-parallel kernels. Every kernel has a serial reference path; the
// parallel path uses OpenMP and must produce identical results.

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "syncagg/sas.hpp"

namespace syncagg {

enum class Execution { serial, parallel };

// Verdict of sas_verify for each constituent, using DomainHashSuite.
// Backend mismatches are reported as a false verdict.
std::vector<std::uint8_t> verify_batch(const SasParams& pp, std::span<const GroupElement> vks,
                                       std::span<const Bytes> msgs, std::span<const SasSignature> sigs,
                                       Execution exec = Execution::parallel);

// Runs body(i) for i in [0, n). Bodies must be independent; exceptions are
// rethrown on the calling thread (the one from the lowest index wins).
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body,
                    Execution exec = Execution::parallel);

// Monte-Carlo driver: trial i receives Rng::derive(seed, i), so results do
// not depend on the execution mode or thread count.
template <class Result>
std::vector<Result> run_trials(std::size_t n, std::uint64_t seed, const std::function<Result(Rng&)>& trial,
                               Execution exec = Execution::parallel) {
  std::vector<Result> out(n);
  for_each_index(
      n,
      [&](std::size_t i) {
        Rng rng = Rng::derive(seed, i);
        out[i] = trial(rng);
      },
      exec);
  return out;
}

// Number of threads the parallel path would use.
int parallel_threads();

}  // namespace syncagg
