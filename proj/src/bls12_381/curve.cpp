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

#include <string_view>
#include <vector>

#include "syncagg/bls12_381/fields.hpp"

namespace syncagg::bls12_381 {
namespace {

Fp fp_from_hex(std::string_view hex) {
  std::array<std::uint8_t, Fp::kBytes> bytes{};
  std::size_t offset = bytes.size() * 2 - hex.size();
  auto nibble = [](char ch) -> std::uint8_t {
    if (ch >= '0' && ch <= '9') return static_cast<std::uint8_t>(ch - '0');
    return static_cast<std::uint8_t>(ch - 'a' + 10);
  };
  for (std::size_t i = 0; i < hex.size(); ++i) {
    std::size_t pos = offset + i;
    bytes[pos / 2] |= static_cast<std::uint8_t>(nibble(hex[i]) << (pos % 2 == 0 ? 4 : 0));
  }
  return *Fp::from_bytes(bytes);
}

template <class F>
struct Jacobian {
  F x = F::one(), y = F::one(), z{};  // z == 0 is the point at infinity

  bool is_infinity() const { return z.is_zero(); }
};

template <class F>
Jacobian<F> to_jacobian(const AffinePoint<F>& p) {
  if (p.infinity) return {};
  return {p.x, p.y, F::one()};
}

template <class F>
AffinePoint<F> to_affine(const Jacobian<F>& p) {
  if (p.is_infinity()) return {};
  F zi = p.z.inverse();
  F zi2 = zi.square();
  return {p.x * zi2, p.y * zi2 * zi, false};
}

// dbl-2009-l, a = 0
template <class F>
Jacobian<F> dbl(const Jacobian<F>& p) {
  if (p.is_infinity()) return p;
  F a = p.x.square();
  F b = p.y.square();
  F c = b.square();
  F d = ((p.x + b).square() - a - c).doubled();
  F e = a.doubled() + a;
  F f = e.square();
  Jacobian<F> r;
  r.x = f - d.doubled();
  F c8 = c.doubled().doubled().doubled();
  r.y = e * (d - r.x) - c8;
  r.z = (p.y * p.z).doubled();
  return r;
}

// add-2007-bl
template <class F>
Jacobian<F> add(const Jacobian<F>& p, const Jacobian<F>& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  F z1z1 = p.z.square();
  F z2z2 = q.z.square();
  F u1 = p.x * z2z2;
  F u2 = q.x * z1z1;
  F s1 = p.y * q.z * z2z2;
  F s2 = q.y * p.z * z1z1;
  F h = u2 - u1;
  F rr = (s2 - s1).doubled();
  if (h.is_zero()) {
    if (rr.is_zero()) return dbl(p);
    return {};
  }
  F i = h.doubled().square();
  F j = h * i;
  F v = u1 * i;
  Jacobian<F> r;
  r.x = rr.square() - j - v.doubled();
  r.y = rr * (v - r.x) - (s1 * j).doubled();
  r.z = ((p.z + q.z).square() - z1z1 - z2z2) * h;
  return r;
}

// madd-2007-bl, q affine and finite
template <class F>
Jacobian<F> add_mixed(const Jacobian<F>& p, const AffinePoint<F>& q) {
  if (p.is_infinity()) return to_jacobian(q);
  F z1z1 = p.z.square();
  F u2 = q.x * z1z1;
  F s2 = q.y * p.z * z1z1;
  F h = u2 - p.x;
  F rr = (s2 - p.y).doubled();
  if (h.is_zero()) {
    if (rr.is_zero()) return dbl(p);
    return {};
  }
  F hh = h.square();
  F i = hh.doubled().doubled();
  F j = h * i;
  F v = p.x * i;
  Jacobian<F> r;
  r.x = rr.square() - j - v.doubled();
  r.y = rr * (v - r.x) - (p.y * j).doubled();
  r.z = (p.z + h).square() - z1z1 - hh;
  return r;
}

// One inversion for the whole batch.
template <class F>
std::vector<AffinePoint<F>> batch_to_affine(const std::vector<Jacobian<F>>& pts) {
  std::vector<F> prefix(pts.size());
  F acc = F::one();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    prefix[i] = acc;
    if (!pts[i].is_infinity()) acc = acc * pts[i].z;
  }
  F inv = acc.inverse();
  std::vector<AffinePoint<F>> out(pts.size());
  for (std::size_t i = pts.size(); i-- > 0;) {
    if (pts[i].is_infinity()) continue;
    F zi = inv * prefix[i];
    inv = inv * pts[i].z;
    F zi2 = zi.square();
    out[i] = {pts[i].x * zi2, pts[i].y * zi2 * zi, false};
  }
  return out;
}

template <class F>
AffinePoint<F> scalar_mul(const AffinePoint<F>& base, std::span<const std::uint64_t> scalar) {
  if (base.infinity) return base;
  std::array<Jacobian<F>, 16> table;
  table[0] = {};
  table[1] = to_jacobian(base);
  for (std::size_t i = 2; i < 16; ++i) table[i] = add(table[i - 1], table[1]);

  std::size_t bits = limbs::bit_length(scalar);
  std::size_t windows = (bits + 3) / 4;
  Jacobian<F> acc;
  for (std::size_t w = windows; w-- > 0;) {
    for (int k = 0; k < 4; ++k) acc = dbl(acc);
    std::size_t shift = 4 * w;
    std::uint64_t nib = (scalar[shift / 64] >> (shift % 64)) & 0xf;
    if (nib != 0) acc = add(acc, table[nib]);
  }
  return to_affine(acc);
}

// Fixed-base table: entry [w][d - 1] = d * 256^w * G for d in 1..255.
constexpr std::size_t kFixedWindows = 32;
constexpr std::size_t kFixedDigits = 255;

template <class F>
std::vector<AffinePoint<F>> build_fixed_table(const AffinePoint<F>& g) {
  std::vector<Jacobian<F>> pts;
  pts.reserve(kFixedWindows * kFixedDigits);
  Jacobian<F> base = to_jacobian(g);
  for (std::size_t w = 0; w < kFixedWindows; ++w) {
    Jacobian<F> acc = base;
    for (std::size_t d = 1; d <= kFixedDigits; ++d) {
      pts.push_back(acc);
      acc = add(acc, base);
    }
    base = acc;  // 256 * base
  }
  return batch_to_affine(pts);
}

template <class F>
AffinePoint<F> fixed_base_mul(const std::vector<AffinePoint<F>>& table, const AffinePoint<F>& g,
                              std::span<const std::uint64_t> scalar) {
  if (limbs::bit_length(scalar) > 8 * kFixedWindows) return scalar_mul(g, scalar);
  Jacobian<F> acc;
  for (std::size_t w = 0; w < kFixedWindows; ++w) {
    std::size_t shift = 8 * w;
    if (shift / 64 >= scalar.size()) break;
    std::uint64_t digit = (scalar[shift / 64] >> (shift % 64)) & 0xff;
    if (digit != 0) acc = add_mixed(acc, table[w * kFixedDigits + digit - 1]);
  }
  return to_affine(acc);
}

// Interleaved 4-bit windows with shared doublings.
template <class F>
AffinePoint<F> multi_mul(std::span<const AffinePoint<F>> bases, std::span<const Limbs<4>> scalars) {
  std::vector<std::array<Jacobian<F>, 16>> tables(bases.size());
  std::size_t bits = 0;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    auto& t = tables[i];
    t[0] = {};
    t[1] = to_jacobian(bases[i]);
    for (std::size_t k = 2; k < 16; ++k) t[k] = add(t[k - 1], t[1]);
    bits = std::max(bits, limbs::bit_length(scalars[i]));
  }
  Jacobian<F> acc;
  for (std::size_t w = (bits + 3) / 4; w-- > 0;) {
    for (int k = 0; k < 4; ++k) acc = dbl(acc);
    std::size_t shift = 4 * w;
    for (std::size_t i = 0; i < bases.size(); ++i) {
      std::uint64_t nib = (scalars[i][shift / 64] >> (shift % 64)) & 0xf;
      if (nib != 0) acc = add(acc, tables[i][nib]);
    }
  }
  return to_affine(acc);
}

template <class F>
AffinePoint<F> add_affine(const AffinePoint<F>& a, const AffinePoint<F>& b) {
  return to_affine(add(to_jacobian(a), to_jacobian(b)));
}

template <class F>
bool on_curve_impl(const AffinePoint<F>& p, const F& b) {
  if (p.infinity) return true;
  return p.y.square() == p.x.square() * p.x + b;
}

}  // namespace

Fp curve_b_g1() { return Fp::from_u64(4); }
Fp2 curve_b_g2() { return {Fp::from_u64(4), Fp::from_u64(4)}; }

bool on_curve(const G1Affine& p) { return on_curve_impl(p, curve_b_g1()); }
bool on_curve(const G2Affine& p) { return on_curve_impl(p, curve_b_g2()); }

G1Affine g1_generator() {
  static const G1Affine g{
      fp_from_hex("17f1d3a73197d7942695638c4fa9ac0fc3688c4f9774b905a14e3a3f171bac586c55e83ff97a1aeffb3af00adb22c6bb"),
      fp_from_hex("08b3f481e3aaa0f1a09e30ed741d8ae4fcf5e095d5d00af600db18cb2c04b3edd03cc744a2888ae40caa232946c5e7e1"),
      false};
  return g;
}

G2Affine g2_generator() {
  static const G2Affine g{
      {fp_from_hex("024aa2b2f08f0a91260805272dc51051c6e47ad4fa403b02b4510b647ae3d1770bac0326a805bbefd48056c8c121bdb8"),
       fp_from_hex("13e02b6052719f607dacd3a088274f65596bd0d09920b61ab5da61bbdc7f5049334cf11213945d57e5ac7d055d042b7e")},
      {fp_from_hex("0ce5d527727d6e118cc9cdc6da2e351aadfd9baa8cbdd3a76d429a695160d12c923ac9cc3baca289e193548608b82801"),
       fp_from_hex("0606c4a02ea734cc32acd2b02bc28b99cb3e287e85a763af267492ab572e99ab3f370d275cec1da1aaa9075ff05f79be")},
      false};
  return g;
}

G1Affine g1_add(const G1Affine& a, const G1Affine& b) { return add_affine(a, b); }
G2Affine g2_add(const G2Affine& a, const G2Affine& b) { return add_affine(a, b); }

G1Affine g1_neg(const G1Affine& a) {
  if (a.infinity) return a;
  return {a.x, -a.y, false};
}

G2Affine g2_neg(const G2Affine& a) {
  if (a.infinity) return a;
  return {a.x, -a.y, false};
}

G1Affine g1_mul(const G1Affine& a, std::span<const std::uint64_t> scalar) { return scalar_mul(a, scalar); }
G2Affine g2_mul(const G2Affine& a, std::span<const std::uint64_t> scalar) { return scalar_mul(a, scalar); }

G1Affine g1_mul_generator(std::span<const std::uint64_t> scalar) {
  static const auto table = build_fixed_table(g1_generator());
  return fixed_base_mul(table, g1_generator(), scalar);
}

G2Affine g2_mul_generator(std::span<const std::uint64_t> scalar) {
  static const auto table = build_fixed_table(g2_generator());
  return fixed_base_mul(table, g2_generator(), scalar);
}

G1Affine g1_multi_mul(std::span<const G1Affine> bases, std::span<const Limbs<4>> scalars) {
  return multi_mul(bases, scalars);
}

G2Affine g2_multi_mul(std::span<const G2Affine> bases, std::span<const Limbs<4>> scalars) {
  return multi_mul(bases, scalars);
}

// Endomorphism membership tests (Bowe for G1, Scott for G2):
//   P in G1  iff  (beta x, y) = -x^2 P,  beta = 2^((p-1)/3)
//   Q in G2  iff  psi(Q) = x Q,  psi = twist^-1 . Frobenius . twist
// Both constants are resolved at first use.
bool g1_in_subgroup(const G1Affine& p) {
  if (p.infinity) return true;
  if (!on_curve(p)) return false;
  static const Fp beta = Fp::from_u64(2).pow(limbs::div_small(limbs::sub_small(FpConfig::kModulus, 1), 3));
  const unsigned __int128 x2 = static_cast<unsigned __int128>(kCurveParamAbs) * kCurveParamAbs;
  const Limbs<2> k = {static_cast<std::uint64_t>(x2), static_cast<std::uint64_t>(x2 >> 64)};
  G1Affine phi{p.x * beta, p.y, false};
  return phi == g1_neg(g1_mul(p, k));
}

bool g2_in_subgroup(const G2Affine& q) {
  if (q.infinity) return true;
  if (!on_curve(q)) return false;
  struct Psi {
    Fp2 cx, cy;
  };
  static const Psi psi = [] {
    const Fp2 xi{Fp::one(), Fp::one()};
    const Fp2 g = xi.pow(limbs::div_small(limbs::sub_small(FpConfig::kModulus, 1), 6));
    return Psi{(g * g).inverse(), (g * g * g).inverse()};
  }();
  G2Affine image{q.x.conjugate() * psi.cx, q.y.conjugate() * psi.cy, false};
  return image == g2_neg(g2_mul(q, Limbs<1>{kCurveParamAbs}));
}

namespace {

constexpr std::uint8_t kFlagCompressed = 0x80;
constexpr std::uint8_t kFlagInfinity = 0x40;
constexpr std::uint8_t kFlagSign = 0x20;

// Validates the flag byte and, for infinity, that every other bit is zero.
// Returns true when the encoding is the point at infinity.
std::optional<bool> check_flags(std::span<const std::uint8_t> in) {
  std::uint8_t flags = in[0];
  if ((flags & kFlagCompressed) == 0) return std::nullopt;
  if (flags & kFlagInfinity) {
    if (flags & kFlagSign) return std::nullopt;
    if ((flags & 0x1f) != 0) return std::nullopt;
    for (std::size_t i = 1; i < in.size(); ++i) {
      if (in[i] != 0) return std::nullopt;
    }
    return true;
  }
  return false;
}

}  // namespace

void g1_compress(const G1Affine& p, std::span<std::uint8_t> out) {
  std::fill(out.begin(), out.end(), 0);
  if (p.infinity) {
    out[0] = kFlagCompressed | kFlagInfinity;
    return;
  }
  p.x.to_bytes(out.subspan(0, 48));
  out[0] |= kFlagCompressed;
  if (p.y.is_lexicographically_largest()) out[0] |= kFlagSign;
}

void g2_compress(const G2Affine& p, std::span<std::uint8_t> out) {
  std::fill(out.begin(), out.end(), 0);
  if (p.infinity) {
    out[0] = kFlagCompressed | kFlagInfinity;
    return;
  }
  p.x.c1.to_bytes(out.subspan(0, 48));
  p.x.c0.to_bytes(out.subspan(48, 48));
  out[0] |= kFlagCompressed;
  if (p.y.is_lexicographically_largest()) out[0] |= kFlagSign;
}

G1Decoded g1_decompress(std::span<const std::uint8_t> in) {
  if (in.size() != kG1CompressedSize) return {{}, PointDecodeError::malformed};
  auto inf = check_flags(in);
  if (!inf) return {{}, PointDecodeError::malformed};
  if (*inf) return {G1Affine{}, std::nullopt};
  bool sign = in[0] & kFlagSign;
  std::array<std::uint8_t, 48> xb;
  std::copy(in.begin(), in.end(), xb.begin());
  xb[0] &= 0x1f;
  auto x = Fp::from_bytes(xb);
  if (!x) return {{}, PointDecodeError::malformed};
  auto y = sqrt(x->square() * *x + curve_b_g1());
  if (!y) return {{}, PointDecodeError::off_curve};
  if (y->is_lexicographically_largest() != sign) *y = -*y;
  G1Affine p{*x, *y, false};
  if (!g1_in_subgroup(p)) return {p, PointDecodeError::not_in_subgroup};
  return {p, std::nullopt};
}

G2Decoded g2_decompress(std::span<const std::uint8_t> in) {
  if (in.size() != kG2CompressedSize) return {{}, PointDecodeError::malformed};
  auto inf = check_flags(in);
  if (!inf) return {{}, PointDecodeError::malformed};
  if (*inf) return {G2Affine{}, std::nullopt};
  bool sign = in[0] & kFlagSign;
  std::array<std::uint8_t, 48> c1b, c0b;
  std::copy(in.begin(), in.begin() + 48, c1b.begin());
  std::copy(in.begin() + 48, in.end(), c0b.begin());
  c1b[0] &= 0x1f;
  auto c1 = Fp::from_bytes(c1b);
  auto c0 = Fp::from_bytes(c0b);
  if (!c0 || !c1) return {{}, PointDecodeError::malformed};
  Fp2 x{*c0, *c1};
  auto y = sqrt(x.square() * x + curve_b_g2());
  if (!y) return {{}, PointDecodeError::off_curve};
  if (y->is_lexicographically_largest() != sign) *y = -*y;
  G2Affine p{x, *y, false};
  if (!g2_in_subgroup(p)) return {p, PointDecodeError::not_in_subgroup};
  return {p, std::nullopt};
}

}  // namespace syncagg::bls12_381
