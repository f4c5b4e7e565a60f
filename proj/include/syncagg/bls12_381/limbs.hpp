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
#include <cstddef>
#include <cstdint>
#include <span>

namespace syncagg::bls12_381 {

// Little-endian arrays of 64-bit words.
template <std::size_t N>
using Limbs = std::array<std::uint64_t, N>;

using u128 = unsigned __int128;

namespace limbs {

template <std::size_t N>
constexpr bool is_zero(const Limbs<N>& a) {
  for (auto w : a) {
    if (w != 0) return false;
  }
  return true;
}

template <std::size_t N>
constexpr int compare(const Limbs<N>& a, const Limbs<N>& b) {
  for (std::size_t i = N; i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

template <std::size_t N>
constexpr std::uint64_t add(Limbs<N>& out, const Limbs<N>& a, const Limbs<N>& b) {
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < N; ++i) {
    u128 s = static_cast<u128>(a[i]) + b[i] + carry;
    out[i] = static_cast<std::uint64_t>(s);
    carry = static_cast<std::uint64_t>(s >> 64);
  }
  return carry;
}

template <std::size_t N>
constexpr std::uint64_t sub(Limbs<N>& out, const Limbs<N>& a, const Limbs<N>& b) {
  std::uint64_t borrow = 0;
  for (std::size_t i = 0; i < N; ++i) {
    u128 d = static_cast<u128>(a[i]) - b[i] - borrow;
    out[i] = static_cast<std::uint64_t>(d);
    borrow = static_cast<std::uint64_t>(d >> 64) & 1;
  }
  return borrow;
}

template <std::size_t N>
constexpr Limbs<N> add_small(Limbs<N> a, std::uint64_t v) {
  for (std::size_t i = 0; i < N && v != 0; ++i) {
    u128 s = static_cast<u128>(a[i]) + v;
    a[i] = static_cast<std::uint64_t>(s);
    v = static_cast<std::uint64_t>(s >> 64);
  }
  return a;
}

template <std::size_t N>
constexpr Limbs<N> sub_small(Limbs<N> a, std::uint64_t v) {
  for (std::size_t i = 0; i < N && v != 0; ++i) {
    std::uint64_t before = a[i];
    a[i] = before - v;
    v = before < v ? 1 : 0;
  }
  return a;
}

template <std::size_t N>
constexpr Limbs<N> shift_right(Limbs<N> a, unsigned bits) {
  for (std::size_t i = 0; i < N; ++i) {
    std::uint64_t hi = i + 1 < N ? a[i + 1] : 0;
    a[i] = bits == 0 ? a[i] : (a[i] >> bits) | (hi << (64 - bits));
  }
  return a;
}

template <std::size_t N>
constexpr Limbs<N> div_small(const Limbs<N>& a, std::uint64_t d) {
  Limbs<N> q{};
  u128 rem = 0;
  for (std::size_t i = N; i-- > 0;) {
    u128 cur = (rem << 64) | a[i];
    q[i] = static_cast<std::uint64_t>(cur / d);
    rem = cur % d;
  }
  return q;
}

template <std::size_t N>
constexpr std::size_t bit_length(const Limbs<N>& a) {
  for (std::size_t i = N; i-- > 0;) {
    if (a[i] != 0) {
      std::size_t bits = 0;
      for (std::uint64_t w = a[i]; w != 0; w >>= 1) ++bits;
      return i * 64 + bits;
    }
  }
  return 0;
}

inline bool test_bit(std::span<const std::uint64_t> a, std::size_t bit) {
  return (a[bit / 64] >> (bit % 64)) & 1;
}

inline std::size_t bit_length(std::span<const std::uint64_t> a) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != 0) return i * 64 + (64 - static_cast<std::size_t>(__builtin_clzll(a[i])));
  }
  return 0;
}

// Big-endian bytes of exactly 8*N bytes.
template <std::size_t N>
constexpr Limbs<N> from_be_bytes(std::span<const std::uint8_t> bytes) {
  Limbs<N> out{};
  for (std::size_t i = 0; i < 8 * N; ++i) {
    std::size_t limb = (8 * N - 1 - i) / 8;
    out[limb] = (out[limb] << 8) | bytes[i];
  }
  return out;
}

template <std::size_t N>
constexpr void to_be_bytes(const Limbs<N>& a, std::span<std::uint8_t> out) {
  for (std::size_t i = 0; i < 8 * N; ++i) {
    std::size_t byte_index = 8 * N - 1 - i;
    out[byte_index] = static_cast<std::uint8_t>(a[i / 8] >> (8 * (i % 8)));
  }
}

}  // namespace limbs
}  // namespace syncagg::bls12_381
