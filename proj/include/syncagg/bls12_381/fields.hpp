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
#include <optional>

#include "montgomery.hpp"

namespace syncagg::bls12_381 {

struct FpConfig {
  static constexpr std::size_t kLimbs = 6;
  // 0x1a0111ea397fe69a4b1ba7b6434bacd764774b84f38512bf6730d2a0f6b0f6241eabfffeb153ffffb9feffffffffaaab
  static constexpr Limbs<6> kModulus = {
      0xb9feffffffffaaabULL, 0x1eabfffeb153ffffULL, 0x6730d2a0f6b0f624ULL,
      0x64774b84f38512bfULL, 0x4b1ba7b6434bacd7ULL, 0x1a0111ea397fe69aULL};
};

struct FrConfig {
  static constexpr std::size_t kLimbs = 4;
  // 0x73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001
  static constexpr Limbs<4> kModulus = {
      0xffffffff00000001ULL, 0x53bda402fffe5bfeULL, 0x3339d80809a1d805ULL,
      0x73eda753299d7d48ULL};
};

using Fp = MontgomeryField<FpConfig>;
using Fr = MontgomeryField<FrConfig>;

// |x| for the curve parameter x = -0xd201000000010000.
inline constexpr std::uint64_t kCurveParamAbs = 0xd201000000010000ULL;

std::optional<Fp> sqrt(const Fp& a);

// Fp2 = Fp[u] / (u^2 + 1)
struct Fp2 {
  Fp c0, c1;

  static Fp2 zero() { return {}; }
  static Fp2 one() { return {Fp::one(), Fp::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  friend bool operator==(const Fp2&, const Fp2&) = default;

  friend Fp2 operator+(const Fp2& a, const Fp2& b) { return {a.c0 + b.c0, a.c1 + b.c1}; }
  friend Fp2 operator-(const Fp2& a, const Fp2& b) { return {a.c0 - b.c0, a.c1 - b.c1}; }
  Fp2 operator-() const { return {-c0, -c1}; }
  friend Fp2 operator*(const Fp2& a, const Fp2& b) {
    Fp v0 = a.c0 * b.c0;
    Fp v1 = a.c1 * b.c1;
    return {v0 - v1, (a.c0 + a.c1) * (b.c0 + b.c1) - v0 - v1};
  }
  friend Fp2 operator*(const Fp2& a, const Fp& s) { return {a.c0 * s, a.c1 * s}; }
  Fp2& operator+=(const Fp2& o) { return *this = *this + o; }
  Fp2& operator-=(const Fp2& o) { return *this = *this - o; }
  Fp2& operator*=(const Fp2& o) { return *this = *this * o; }

  Fp2 square() const {
    Fp a = (c0 + c1) * (c0 - c1);
    Fp b = c0 * c1;
    return {a, b + b};
  }
  Fp2 doubled() const { return {c0.doubled(), c1.doubled()}; }
  Fp2 conjugate() const { return {c0, -c1}; }
  // multiplication by the sextic non-residue 1 + u
  Fp2 mul_by_nonresidue() const { return {c0 - c1, c0 + c1}; }
  Fp2 inverse() const {
    Fp t = (c0.square() + c1.square()).inverse();
    return {c0 * t, -(c1 * t)};
  }
  Fp2 pow(std::span<const std::uint64_t> exponent) const;

  // Sign convention of the compressed point encoding.
  bool is_lexicographically_largest() const {
    if (!c1.is_zero()) return c1.is_lexicographically_largest();
    return c0.is_lexicographically_largest();
  }
};

std::optional<Fp2> sqrt(const Fp2& a);

// Fp6 = Fp2[v] / (v^3 - (1 + u))
struct Fp6 {
  Fp2 c0, c1, c2;

  static Fp6 zero() { return {}; }
  static Fp6 one() { return {Fp2::one(), Fp2::zero(), Fp2::zero()}; }
  friend bool operator==(const Fp6&, const Fp6&) = default;

  friend Fp6 operator+(const Fp6& a, const Fp6& b) { return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2}; }
  friend Fp6 operator-(const Fp6& a, const Fp6& b) { return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2}; }
  Fp6 operator-() const { return {-c0, -c1, -c2}; }
  friend Fp6 operator*(const Fp6& a, const Fp6& b);
  Fp6 mul_by_v() const { return {c2.mul_by_nonresidue(), c0, c1}; }
  // Sparse products by b0 + b1 v and by b1 v.
  Fp6 mul_by_01(const Fp2& b0, const Fp2& b1) const;
  Fp6 mul_by_1(const Fp2& b1) const;
  Fp6 inverse() const;
};

// Fp12 = Fp2[w] / (w^6 - (1 + u)), stored as six Fp2 coefficients of w^i.
// With v = w^2 the even coefficients form one Fp6 element and the odd ones
// another.
struct Fp12 {
  std::array<Fp2, 6> c{};

  static Fp12 one() {
    Fp12 f;
    f.c[0] = Fp2::one();
    return f;
  }
  bool is_one() const;
  friend bool operator==(const Fp12&, const Fp12&) = default;

  Fp6 even() const { return {c[0], c[2], c[4]}; }
  Fp6 odd() const { return {c[1], c[3], c[5]}; }
  static Fp12 from_halves(const Fp6& even, const Fp6& odd);

  friend Fp12 operator*(const Fp12& a, const Fp12& b);
  Fp12& operator*=(const Fp12& o) { return *this = *this * o; }
  Fp12 square() const;
  // Valid only for elements of the cyclotomic subgroup.
  Fp12 cyclotomic_square() const;
  // f^(p^6); inverse for elements of the cyclotomic subgroup
  Fp12 conjugate() const;
  Fp12 inverse() const;
  Fp12 frobenius() const;
  Fp12 frobenius2() const { return frobenius().frobenius(); }
  Fp12 pow(std::span<const std::uint64_t> exponent) const;

  // Multiplication by l0 + l2 w^2 + l3 w^3.
  Fp12 mul_by_line(const Fp2& l0, const Fp2& l2, const Fp2& l3) const;
};

// Curve y^2 = x^3 + 4 over Fp and its M-type sextic twist
// y^2 = x^3 + 4(1 + u) over Fp2.
template <class F>
struct AffinePoint {
  F x{}, y{};
  bool infinity = true;
  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

using G1Affine = AffinePoint<Fp>;
using G2Affine = AffinePoint<Fp2>;

Fp curve_b_g1();
Fp2 curve_b_g2();

bool on_curve(const G1Affine& p);
bool on_curve(const G2Affine& p);

G1Affine g1_generator();
G2Affine g2_generator();

G1Affine g1_add(const G1Affine& a, const G1Affine& b);
G2Affine g2_add(const G2Affine& a, const G2Affine& b);
G1Affine g1_neg(const G1Affine& a);
G2Affine g2_neg(const G2Affine& a);
G1Affine g1_mul(const G1Affine& a, std::span<const std::uint64_t> scalar);
G2Affine g2_mul(const G2Affine& a, std::span<const std::uint64_t> scalar);

// Generator multiples through a precomputed table (built on first use).
G1Affine g1_mul_generator(std::span<const std::uint64_t> scalar);
G2Affine g2_mul_generator(std::span<const std::uint64_t> scalar);
// sum scalars[i] * bases[i]
G1Affine g1_multi_mul(std::span<const G1Affine> bases, std::span<const Limbs<4>> scalars);
G2Affine g2_multi_mul(std::span<const G2Affine> bases, std::span<const Limbs<4>> scalars);

bool g1_in_subgroup(const G1Affine& p);
bool g2_in_subgroup(const G2Affine& p);

// Compressed encodings (flags in the three top bits of the first byte).
inline constexpr std::size_t kG1CompressedSize = 48;
inline constexpr std::size_t kG2CompressedSize = 96;

enum class PointDecodeError { malformed, off_curve, not_in_subgroup };

void g1_compress(const G1Affine& p, std::span<std::uint8_t> out);
void g2_compress(const G2Affine& p, std::span<std::uint8_t> out);
// Returns the point or the reason it was rejected.
struct G1Decoded {
  G1Affine point;
  std::optional<PointDecodeError> error;
};
struct G2Decoded {
  G2Affine point;
  std::optional<PointDecodeError> error;
};
G1Decoded g1_decompress(std::span<const std::uint8_t> in);
G2Decoded g2_decompress(std::span<const std::uint8_t> in);

// Pairing over the r-torsion. The product form shares one final
// exponentiation across all pairs.
Fp12 miller_loop(std::span<const G1Affine> ps, std::span<const G2Affine> qs);
Fp12 final_exponentiation(const Fp12& f);
Fp12 pairing(const G1Affine& p, const G2Affine& q);

// Square-and-multiply with cyclotomic squarings; f must be cyclotomic.
Fp12 cyclotomic_pow(const Fp12& f, std::span<const std::uint64_t> exponent);
bool gt_in_subgroup(const Fp12& f);

}  // namespace syncagg::bls12_381
