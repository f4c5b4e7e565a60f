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

#include <vector>

#include "syncagg/bls12_381/fields.hpp"

namespace syncagg::bls12_381 {
namespace {

// The running twist point T = (X, Y, Z) is Jacobian. Untwisting
// (x', y') -> (x' / w^2, y' / w^3) and scaling the line by w^3 gives
//   l = (lambda x'_T - y'_T) - lambda x_P w^2 + y_P w^3,
// and clearing the Fp2 denominator of lambda leaves a multiple of the line
// by a subfield element, which the final exponentiation erases.
struct MillerState {
  Fp2 x, y, z;
  const G2Affine* q;
  const G1Affine* p;
};

Fp12 doubling_step(const Fp12& f, MillerState& s) {
  // lambda = 3 X^2 / (2 Y Z), scaled by 2 Y Z^3
  Fp2 a = s.x.square();
  Fp2 b = s.y.square();
  Fp2 zz = s.z.square();
  Fp2 a3 = a.doubled() + a;
  Fp2 l0 = a3 * s.x - b.doubled();
  Fp2 l2 = -(a3 * zz * s.p->x);

  Fp2 c = b.square();
  Fp2 d = ((s.x + b).square() - a - c).doubled();
  Fp2 f2 = a3.square();
  Fp2 x3 = f2 - d.doubled();
  Fp2 y3 = a3 * (d - x3) - c.doubled().doubled().doubled();
  Fp2 z3 = (s.y * s.z).doubled();
  Fp2 l3 = z3 * zz * s.p->y;
  s.x = x3;
  s.y = y3;
  s.z = z3;
  return f.mul_by_line(l0, l2, l3);
}

Fp12 addition_step(const Fp12& f, MillerState& s) {
  // lambda = R / (Z H) with H = x_Q Z^2 - X and R = y_Q Z^3 - Y; the line
  // is taken through Q and scaled by Z H.
  const G2Affine& q = *s.q;
  Fp2 zz = s.z.square();
  Fp2 h = q.x * zz - s.x;
  Fp2 r = q.y * s.z * zz - s.y;
  Fp2 zh = s.z * h;
  Fp2 l0 = r * q.x - zh * q.y;
  Fp2 l2 = -(r * s.p->x);
  Fp2 l3 = zh * s.p->y;

  Fp2 hh = h.square();
  Fp2 hhh = h * hh;
  Fp2 v = s.x * hh;
  Fp2 x3 = r.square() - hhh - v.doubled();
  Fp2 y3 = r * (v - x3) - s.y * hhh;
  s.x = x3;
  s.y = y3;
  s.z = zh;
  return f.mul_by_line(l0, l2, l3);
}

// m^|x| for the curve parameter; m must be cyclotomic.
Fp12 pow_param(const Fp12& m) {
  Fp12 acc = m;
  for (int bit = 62; bit >= 0; --bit) {
    acc = acc.cyclotomic_square();
    if ((kCurveParamAbs >> bit) & 1) acc = acc * m;
  }
  return acc;
}

}  // namespace

Fp12 miller_loop(std::span<const G1Affine> ps, std::span<const G2Affine> qs) {
  std::vector<MillerState> states;
  states.reserve(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].infinity || qs[i].infinity) continue;
    states.push_back({qs[i].x, qs[i].y, Fp2::one(), &qs[i], &ps[i]});
  }
  Fp12 f = Fp12::one();
  if (states.empty()) return f;
  for (int bit = 62; bit >= 0; --bit) {
    f = f.square();
    for (auto& s : states) f = doubling_step(f, s);
    if ((kCurveParamAbs >> bit) & 1) {
      for (auto& s : states) f = addition_step(f, s);
    }
  }
  // x < 0
  return f.conjugate();
}

// Hard part via 3 (p^4 - p^2 + 1) / r = (x - 1)^2 (x + p) (x^2 + p^2 - 1) + 3,
// so the result is the cube of the textbook reduced pairing.
Fp12 final_exponentiation(const Fp12& f) {
  Fp12 m = f.conjugate() * f.inverse();
  m = m.frobenius2() * m;
  // m is in the cyclotomic subgroup from here on: inverse == conjugate.
  auto pow_x = [](const Fp12& a) { return pow_param(a).conjugate(); };

  Fp12 a = (pow_param(m) * m).conjugate();   // m^(x-1)
  Fp12 t = (pow_param(a) * a).conjugate();   // m^((x-1)^2)
  Fp12 t2 = pow_x(t) * t.frobenius();        // t^(x+p)
  Fp12 t3 = pow_x(pow_x(t2)) * t2.frobenius2() * t2.conjugate();  // t2^(x^2+p^2-1)
  return t3 * m.square() * m;
}

Fp12 pairing(const G1Affine& p, const G2Affine& q) {
  return final_exponentiation(miller_loop(std::span(&p, 1), std::span(&q, 1)));
}

Fp12 cyclotomic_pow(const Fp12& f, std::span<const std::uint64_t> exponent) {
  Fp12 acc = Fp12::one();
  for (std::size_t bit = limbs::bit_length(exponent); bit-- > 0;) {
    acc = acc.cyclotomic_square();
    if (limbs::test_bit(exponent, bit)) acc = acc * f;
  }
  return acc;
}

// f^(p^4 - p^2 + 1) = 1 puts f in the cyclotomic subgroup; within it, f lies
// in the order-r subgroup iff f^p = f^x (Scott).
bool gt_in_subgroup(const Fp12& f) {
  if (f == Fp12{}) return false;
  Fp12 f2 = f.frobenius2();
  if (!(f2.frobenius2() * f == f2)) return false;
  return f.frobenius() == pow_param(f).conjugate();
}

}  // namespace syncagg::bls12_381
