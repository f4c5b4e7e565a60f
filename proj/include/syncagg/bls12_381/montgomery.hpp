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

#include <cstdint>
#include <optional>
#include <span>

#include "limbs.hpp"

namespace syncagg::bls12_381 {

// Prime field element in Montgomery form. Cfg supplies kLimbs and kModulus;
// the modulus must leave the top bit of the top limb clear. Nothing here is
// constant time.
template <class Cfg>
class MontgomeryField {
 public:
  static constexpr std::size_t kLimbs = Cfg::kLimbs;
  static constexpr std::size_t kBytes = 8 * kLimbs;
  using Repr = Limbs<kLimbs>;

  static constexpr Repr kModulus = Cfg::kModulus;
  static_assert(kModulus[kLimbs - 1] < 0x7fffffffffffffffULL, "modulus needs spare bits");
  static_assert((kModulus[0] & 1) == 1, "modulus must be odd");

 private:
  static constexpr std::uint64_t compute_inv() {
    std::uint64_t inv = 1;
    for (int i = 0; i < 7; ++i) inv *= 2 - kModulus[0] * inv;
    return ~inv + 1;
  }

  static constexpr Repr double_mod(const Repr& a) {
    Repr out{};
    limbs::add(out, a, a);
    if (limbs::compare(out, kModulus) >= 0) limbs::sub(out, out, kModulus);
    return out;
  }

  // 2^(64*kLimbs*k) mod p
  static constexpr Repr power_of_r(int k) {
    Repr x{};
    x[0] = 1;
    for (int i = 0; i < 64 * static_cast<int>(kLimbs) * k; ++i) x = double_mod(x);
    return x;
  }

 public:
  static constexpr std::uint64_t kInv = compute_inv();
  static constexpr Repr kR = power_of_r(1);
  static constexpr Repr kR2 = power_of_r(2);
  static constexpr Repr kR3 = power_of_r(3);
  static constexpr Repr kModulusMinusTwo = limbs::sub_small(kModulus, 2);
  static constexpr Repr kHalfModulus = limbs::shift_right(kModulus, 1);  // (p-1)/2

  constexpr MontgomeryField() = default;

  static constexpr MontgomeryField zero() { return MontgomeryField{}; }
  static constexpr MontgomeryField one() {
    MontgomeryField f;
    f.v_ = kR;
    return f;
  }

  // Requires canonical < p.
  static MontgomeryField from_canonical(const Repr& canonical) {
    MontgomeryField f;
    f.v_ = canonical;
    return f * from_raw(kR2);
  }

  static MontgomeryField from_u64(std::uint64_t v) {
    Repr r{};
    r[0] = v;
    if (limbs::compare(r, kModulus) >= 0) limbs::sub(r, r, kModulus);
    return from_canonical(r);
  }

  // Big-endian, exactly kBytes; nullopt when the value is not below p.
  static std::optional<MontgomeryField> from_bytes(std::span<const std::uint8_t> bytes) {
    if (bytes.size() != kBytes) return std::nullopt;
    Repr r = limbs::from_be_bytes<kLimbs>(bytes);
    if (limbs::compare(r, kModulus) >= 0) return std::nullopt;
    return from_canonical(r);
  }

  // Reduces an arbitrary big-endian string of 2*kBytes bytes modulo p.
  static MontgomeryField from_wide_bytes(std::span<const std::uint8_t> bytes) {
    Repr hi = limbs::from_be_bytes<kLimbs>(bytes.subspan(0, kBytes));
    Repr lo = limbs::from_be_bytes<kLimbs>(bytes.subspan(kBytes, kBytes));
    MontgomeryField h = from_raw(reduce_once(hi));
    MontgomeryField l = from_raw(reduce_once(lo));
    // mont(hi * R + lo) = hi * R^2 + lo * R
    return h * from_raw(kR3) + l * from_raw(kR2);
  }

  Repr to_canonical() const {
    Repr one{};
    one[0] = 1;
    return (*this * from_raw(one)).v_;
  }

  void to_bytes(std::span<std::uint8_t> out) const { limbs::to_be_bytes(to_canonical(), out); }

  const Repr& raw() const { return v_; }

  bool is_zero() const { return limbs::is_zero(v_); }
  bool is_one() const { return v_ == kR; }

  // Canonical value strictly greater than (p-1)/2.
  bool is_lexicographically_largest() const {
    return limbs::compare(to_canonical(), kHalfModulus) > 0;
  }

  friend bool operator==(const MontgomeryField& a, const MontgomeryField& b) { return a.v_ == b.v_; }

  friend MontgomeryField operator+(const MontgomeryField& a, const MontgomeryField& b) {
    MontgomeryField out;
    limbs::add(out.v_, a.v_, b.v_);
    if (limbs::compare(out.v_, kModulus) >= 0) limbs::sub(out.v_, out.v_, kModulus);
    return out;
  }

  friend MontgomeryField operator-(const MontgomeryField& a, const MontgomeryField& b) {
    MontgomeryField out;
    if (limbs::sub(out.v_, a.v_, b.v_) != 0) limbs::add(out.v_, out.v_, kModulus);
    return out;
  }

  MontgomeryField operator-() const { return zero() - *this; }

  MontgomeryField& operator+=(const MontgomeryField& o) { return *this = *this + o; }
  MontgomeryField& operator-=(const MontgomeryField& o) { return *this = *this - o; }
  MontgomeryField& operator*=(const MontgomeryField& o) { return *this = *this * o; }

  // CIOS without the extra carry words; valid because the top limb of the
  // modulus is below 2^63 - 1.
  friend MontgomeryField operator*(const MontgomeryField& a, const MontgomeryField& b) {
    constexpr std::size_t N = kLimbs;
    std::uint64_t t[N] = {};
#pragma GCC unroll 8
    for (std::size_t i = 0; i < N; ++i) {
      const std::uint64_t bi = b.v_[i];
      u128 s = static_cast<u128>(a.v_[0]) * bi + t[0];
      std::uint64_t carry_a = static_cast<std::uint64_t>(s >> 64);
      t[0] = static_cast<std::uint64_t>(s);
      const std::uint64_t m = t[0] * kInv;
      s = static_cast<u128>(m) * kModulus[0] + t[0];
      std::uint64_t carry_c = static_cast<std::uint64_t>(s >> 64);
#pragma GCC unroll 8
      for (std::size_t j = 1; j < N; ++j) {
        s = static_cast<u128>(a.v_[j]) * bi + t[j] + carry_a;
        carry_a = static_cast<std::uint64_t>(s >> 64);
        t[j] = static_cast<std::uint64_t>(s);
        s = static_cast<u128>(m) * kModulus[j] + t[j] + carry_c;
        carry_c = static_cast<std::uint64_t>(s >> 64);
        t[j - 1] = static_cast<std::uint64_t>(s);
      }
      t[N - 1] = carry_a + carry_c;
    }
    MontgomeryField out;
    for (std::size_t i = 0; i < N; ++i) out.v_[i] = t[i];
    if (limbs::compare(out.v_, kModulus) >= 0) limbs::sub(out.v_, out.v_, kModulus);
    return out;
  }

  MontgomeryField square() const { return *this * *this; }
  MontgomeryField doubled() const { return *this + *this; }

  // Exponent given as little-endian canonical limbs.
  MontgomeryField pow(std::span<const std::uint64_t> exponent) const {
    MontgomeryField acc = one();
    for (std::size_t bit = limbs::bit_length(exponent); bit-- > 0;) {
      acc = acc.square();
      if (limbs::test_bit(exponent, bit)) acc = acc * *this;
    }
    return acc;
  }

  // Zero maps to zero.
  MontgomeryField inverse() const { return pow(kModulusMinusTwo); }

 private:
  static constexpr MontgomeryField from_raw(const Repr& r) {
    MontgomeryField f;
    f.v_ = r;
    return f;
  }

  static constexpr Repr reduce_once(Repr r) {
    while (limbs::compare(r, kModulus) >= 0) limbs::sub(r, r, kModulus);
    return r;
  }

  Repr v_{};
};

}  // namespace syncagg::bls12_381
