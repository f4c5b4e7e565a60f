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

#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>

#include "syncagg/bytes.hpp"

namespace syncagg {

using Digest = std::array<std::uint8_t, 32>;

Digest sha256(ByteView data);
// SHA-256 over the concatenation of the parts.
Digest sha256(std::initializer_list<ByteView> parts);

// Deterministic generator: ChaCha20 keystream keyed by SHA-256 of the seed.
// Not thread-safe; give each thread its own instance (see derive()).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  explicit Rng(ByteView seed);

  // Seeded from the operating system.
  static Rng from_entropy();
  // Independent stream number `index` under `seed`, for per-trial and
  // per-thread use.
  static Rng derive(std::uint64_t seed, std::uint64_t index);

  void fill(std::span<std::uint8_t> out);
  std::uint64_t next_u64();
  // Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t uniform(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::uint64_t uniform_range(std::uint64_t lo, std::uint64_t hi);

 private:
  void refill();

  std::array<std::uint8_t, 32> key_{};
  std::uint64_t block_ = 0;
  std::array<std::uint8_t, 1024> buffer_{};
  std::size_t pos_ = 1024;
};

}  // namespace syncagg
