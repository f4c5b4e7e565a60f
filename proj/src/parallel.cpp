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

#include "syncagg/parallel.hpp"

#include <exception>

#include <omp.h>

namespace syncagg {

namespace {

bool verify_one(const SasParams& pp, DomainHashSuite& h, const GroupElement& vk, const Bytes& m,
                const SasSignature& sig) {
  try {
    return sas_verify(pp, h, vk, m, sig);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::backend_mismatch) return false;
    throw;
  }
}

}  // namespace

std::vector<std::uint8_t> verify_batch(const SasParams& pp, std::span<const GroupElement> vks,
                                       std::span<const Bytes> msgs, std::span<const SasSignature> sigs,
                                       Execution exec) {
  if (vks.size() != msgs.size() || vks.size() != sigs.size()) {
    throw Error(ErrorCode::length_mismatch, "vks, messages and signatures differ in length");
  }
  std::vector<std::uint8_t> ok(vks.size(), 0);
  for_each_index(
      vks.size(),
      [&](std::size_t i) {
        DomainHashSuite h(pp);
        ok[i] = verify_one(pp, h, vks[i], msgs[i], sigs[i]) ? 1 : 0;
      },
      exec);
  return ok;
}

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body, Execution exec) {
  if (exec == Execution::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

int parallel_threads() { return omp_get_max_threads(); }

}  // namespace syncagg
