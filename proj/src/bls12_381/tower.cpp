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

#include "syncagg/bls12_381/fields.hpp"

namespace syncagg::bls12_381 {
namespace {

constexpr Limbs<6> kSqrtExponent = limbs::shift_right(limbs::add_small(FpConfig::kModulus, 1), 2);
constexpr Limbs<6> kFrobeniusExponent = limbs::div_small(limbs::sub_small(FpConfig::kModulus, 1), 6);

const Fp& inverse_of_two() {
  static const Fp v = Fp::from_u64(2).inverse();
  return v;
}

// gamma[i] = (1 + u)^(i (p - 1) / 6), so that (w^i)^p = gamma[i] w^i.
const std::array<Fp2, 6>& frobenius_coefficients() {
  static const std::array<Fp2, 6> table = [] {
    std::array<Fp2, 6> t;
    const Fp2 xi{Fp::one(), Fp::one()};
    const Fp2 g1 = xi.pow(kFrobeniusExponent);
    t[0] = Fp2::one();
    for (std::size_t i = 1; i < 6; ++i) t[i] = t[i - 1] * g1;
    return t;
  }();
  return table;
}

}  // namespace

std::optional<Fp> sqrt(const Fp& a) {
  Fp s = a.pow(kSqrtExponent);
  if (s.square() == a) return s;
  return std::nullopt;
}

Fp2 Fp2::pow(std::span<const std::uint64_t> exponent) const {
  Fp2 acc = one();
  for (std::size_t bit = limbs::bit_length(exponent); bit-- > 0;) {
    acc = acc.square();
    if (limbs::test_bit(exponent, bit)) acc = acc * *this;
  }
  return acc;
}

std::optional<Fp2> sqrt(const Fp2& a) {
  if (a.c1.is_zero()) {
    if (auto s = sqrt(a.c0)) return Fp2{*s, Fp::zero()};
    if (auto s = sqrt(-a.c0)) return Fp2{Fp::zero(), *s};
    return std::nullopt;
  }
  auto norm_root = sqrt(a.c0.square() + a.c1.square());
  if (!norm_root) return std::nullopt;
  const Fp& half = inverse_of_two();
  auto x0 = sqrt((a.c0 + *norm_root) * half);
  if (!x0) x0 = sqrt((a.c0 - *norm_root) * half);
  if (!x0) return std::nullopt;
  Fp2 candidate{*x0, a.c1 * (x0->doubled()).inverse()};
  if (candidate.square() == a) return candidate;
  return std::nullopt;
}

Fp6 operator*(const Fp6& a, const Fp6& b) {
  Fp2 v0 = a.c0 * b.c0, v1 = a.c1 * b.c1, v2 = a.c2 * b.c2;
  Fp2 c0 = ((a.c1 + a.c2) * (b.c1 + b.c2) - v1 - v2).mul_by_nonresidue() + v0;
  Fp2 c1 = (a.c0 + a.c1) * (b.c0 + b.c1) - v0 - v1 + v2.mul_by_nonresidue();
  Fp2 c2 = (a.c0 + a.c2) * (b.c0 + b.c2) - v0 - v2 + v1;
  return {c0, c1, c2};
}

Fp6 Fp6::mul_by_01(const Fp2& b0, const Fp2& b1) const {
  Fp2 v0 = c0 * b0, v1 = c1 * b1;
  return {(c2 * b1).mul_by_nonresidue() + v0, (c0 + c1) * (b0 + b1) - v0 - v1, v1 + c2 * b0};
}

Fp6 Fp6::mul_by_1(const Fp2& b1) const {
  return {(c2 * b1).mul_by_nonresidue(), c0 * b1, c1 * b1};
}

Fp6 Fp6::inverse() const {
  Fp2 d0 = c0.square() - (c1 * c2).mul_by_nonresidue();
  Fp2 d1 = c2.square().mul_by_nonresidue() - c0 * c1;
  Fp2 d2 = c1.square() - c0 * c2;
  Fp2 t = c0 * d0 + (c2 * d1 + c1 * d2).mul_by_nonresidue();
  Fp2 ti = t.inverse();
  return {d0 * ti, d1 * ti, d2 * ti};
}

bool Fp12::is_one() const {
  if (!(c[0] == Fp2::one())) return false;
  for (std::size_t i = 1; i < 6; ++i) {
    if (!c[i].is_zero()) return false;
  }
  return true;
}

Fp12 Fp12::from_halves(const Fp6& even, const Fp6& odd) {
  Fp12 out;
  out.c = {even.c0, odd.c0, even.c1, odd.c1, even.c2, odd.c2};
  return out;
}

Fp12 operator*(const Fp12& a, const Fp12& b) {
  Fp6 ae = a.even(), ao = a.odd(), be = b.even(), bo = b.odd();
  Fp6 e = ae * be, o = ao * bo;
  Fp6 cross = (ae + ao) * (be + bo) - e - o;
  return Fp12::from_halves(e + o.mul_by_v(), cross);
}

Fp12 Fp12::square() const {
  Fp6 e = even(), o = odd();
  Fp6 t = e * o;
  Fp6 even_out = (e + o) * (e + o.mul_by_v()) - t - t.mul_by_v();
  return from_halves(even_out, t + t);
}

// Granger-Scott: view the element as a + b w + c w^2 over Fp4 = Fp2[s],
// s = w^3, s^2 = 1 + u. In the cyclotomic subgroup
//   f^2 = (3a^2 - 2 conj(a)) + (3 s c^2 + 2 conj(b)) w + (3 b^2 - 2 conj(c)) w^2.
Fp12 Fp12::cyclotomic_square() const {
  auto fp4_square = [](const Fp2& x, const Fp2& y) {
    Fp2 xx = x.square(), yy = y.square();
    return std::pair<Fp2, Fp2>{xx + yy.mul_by_nonresidue(), (x + y).square() - xx - yy};
  };
  auto [a0, a1] = fp4_square(c[0], c[3]);
  auto [b0, b1] = fp4_square(c[1], c[4]);
  auto [d0, d1] = fp4_square(c[2], c[5]);
  // s * (d0 + d1 s) = d1 xi + d0 s
  Fp2 sd0 = d1.mul_by_nonresidue(), sd1 = d0;
  auto triple = [](const Fp2& v) { return v.doubled() + v; };
  Fp12 out;
  out.c[0] = triple(a0) - c[0].doubled();
  out.c[3] = triple(a1) + c[3].doubled();
  out.c[1] = triple(sd0) + c[1].doubled();
  out.c[4] = triple(sd1) - c[4].doubled();
  out.c[2] = triple(b0) - c[2].doubled();
  out.c[5] = triple(b1) + c[5].doubled();
  return out;
}

Fp12 Fp12::conjugate() const {
  Fp12 out = *this;
  out.c[1] = -out.c[1];
  out.c[3] = -out.c[3];
  out.c[5] = -out.c[5];
  return out;
}

Fp12 Fp12::inverse() const {
  Fp6 e = even(), o = odd();
  Fp6 denom = (e * e - (o * o).mul_by_v()).inverse();
  return from_halves(e * denom, -(o * denom));
}

Fp12 Fp12::frobenius() const {
  const auto& gamma = frobenius_coefficients();
  Fp12 out;
  for (std::size_t i = 0; i < 6; ++i) out.c[i] = c[i].conjugate() * gamma[i];
  return out;
}

Fp12 Fp12::pow(std::span<const std::uint64_t> exponent) const {
  Fp12 acc = one();
  for (std::size_t bit = limbs::bit_length(exponent); bit-- > 0;) {
    acc = acc.square();
    if (limbs::test_bit(exponent, bit)) acc = acc * *this;
  }
  return acc;
}

Fp12 Fp12::mul_by_line(const Fp2& l0, const Fp2& l2, const Fp2& l3) const {
  Fp6 e = even(), o = odd();
  Fp6 le = e.mul_by_01(l0, l2);
  Fp6 lo = o.mul_by_1(l3);
  Fp6 cross = (e + o).mul_by_01(l0, l2 + l3) - le - lo;
  return from_halves(le + lo.mul_by_v(), cross);
}

}  // namespace syncagg::bls12_381
