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

#include "syncagg/groups.hpp"

#include <atomic>
#include <bit>
#include <vector>

namespace syncagg {

namespace bls = bls12_381;

namespace {

using u128 = unsigned __int128;

std::atomic<std::uint64_t> g_pairings{0};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t s = a + b;
  if (s < a || s >= m) s -= m;
  return s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + (m - b);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  while (e) {
    if (e & 1) acc = mulmod(acc, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return acc;
}

[[noreturn]] void mismatch() { throw Error(ErrorCode::backend_mismatch); }

void same(std::uint64_t a, std::uint64_t b) {
  if (a != b) mismatch();
}

std::uint64_t require_toy(std::uint64_t modulus) {
  if (modulus == 0) throw Error(ErrorCode::backend_mismatch, "toy accessor on a production value");
  return modulus;
}

bool coherent(const bls::G1Affine& p, const bls::G2Affine& q) {
  // e(P, g2) == e(g1, Q)  <=>  e(P, g2) * e(-g1, Q) == 1
  bls::G1Affine ps[2] = {p, bls::g1_neg(bls::g1_generator())};
  bls::G2Affine qs[2] = {bls::g2_generator(), q};
  return bls::final_exponentiation(bls::miller_loop(ps, qs)).is_one();
}

bool is_canonical_generator(const GroupElement& e) {
  return e.g1() == bls::g1_generator() && e.g2() == bls::g2_generator();
}

}  // namespace

std::string_view backend_name(Backend b) { return b == Backend::toy ? "toy" : "production"; }

std::optional<Backend> parse_backend(std::string_view name) {
  if (name == "production") return Backend::production;
  if (name == "toy") return Backend::toy;
  return std::nullopt;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for every 64-bit n.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---------------------------------------------------------------- description

GroupDescription GroupDescription::production(std::uint16_t security_level) {
  if (security_level == 0 || security_level > 128) {
    throw Error(ErrorCode::invalid_parameter, "production backend supports security levels 1..128");
  }
  GroupDescription d;
  d.backend_ = Backend::production;
  d.level_ = security_level;
  return d;
}

GroupDescription GroupDescription::toy(std::uint64_t modulus) {
  if (!is_prime_u64(modulus)) {
    throw Error(ErrorCode::invalid_group_order, "toy modulus " + std::to_string(modulus) + " is not prime");
  }
  GroupDescription d;
  d.backend_ = Backend::toy;
  d.modulus_ = modulus;
  return d;
}

GroupDescription GroupDescription::from_params(const GroupParams& params) {
  return params.backend == Backend::toy ? toy(params.toy_modulus) : production(params.security_level);
}

Bytes GroupDescription::order_be() const {
  Bytes full;
  if (backend_ == Backend::toy) {
    append_be64(full, modulus_);
  } else {
    full.resize(32);
    bls::limbs::to_be_bytes(bls::FrConfig::kModulus, full);
  }
  std::size_t lead = 0;
  while (lead + 1 < full.size() && full[lead] == 0) ++lead;
  return Bytes(full.begin() + static_cast<std::ptrdiff_t>(lead), full.end());
}

std::size_t GroupDescription::order_bits() const {
  if (backend_ == Backend::toy) return static_cast<std::size_t>(std::bit_width(modulus_));
  return bls::limbs::bit_length(std::span<const std::uint64_t>(bls::FrConfig::kModulus));
}

Bytes GroupDescription::serialize() const {
  Bytes out{static_cast<std::uint8_t>(backend_)};
  if (backend_ == Backend::toy) {
    append_be64(out, modulus_);
  } else {
    append_be16(out, level_);
  }
  return out;
}

GroupDescription GroupDescription::deserialize(ByteView bytes) {
  ByteReader r(bytes);
  std::uint8_t id = r.u8();
  GroupDescription d;
  if (id == static_cast<std::uint8_t>(Backend::toy)) {
    std::uint64_t p = r.be64();
    r.expect_done();
    return toy(p);
  }
  if (id == static_cast<std::uint8_t>(Backend::production)) {
    std::uint16_t level = r.be16();
    r.expect_done();
    try {
      return production(level);
    } catch (const Error&) {
      throw Error(ErrorCode::malformed_encoding, "unsupported security level");
    }
  }
  throw Error(ErrorCode::malformed_encoding, "unknown backend id");
}

// ---------------------------------------------------------------- scalars

bool Scalar::is_zero() const { return modulus_ ? toy_ == 0 : fr_.is_zero(); }

std::uint64_t Scalar::toy_value() const {
  require_toy(modulus_);
  return toy_;
}

bls::Limbs<4> Scalar::canonical() const { return fr_.to_canonical(); }

Scalar operator+(const Scalar& a, const Scalar& b) {
  same(a.modulus_, b.modulus_);
  Scalar out = a;
  if (a.modulus_) {
    out.toy_ = addmod(a.toy_, b.toy_, a.modulus_);
  } else {
    out.fr_ = a.fr_ + b.fr_;
  }
  return out;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  same(a.modulus_, b.modulus_);
  Scalar out = a;
  if (a.modulus_) {
    out.toy_ = submod(a.toy_, b.toy_, a.modulus_);
  } else {
    out.fr_ = a.fr_ - b.fr_;
  }
  return out;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  same(a.modulus_, b.modulus_);
  Scalar out = a;
  if (a.modulus_) {
    out.toy_ = mulmod(a.toy_, b.toy_, a.modulus_);
  } else {
    out.fr_ = a.fr_ * b.fr_;
  }
  return out;
}

Scalar Scalar::operator-() const {
  Scalar zero;
  zero.modulus_ = modulus_;
  return zero - *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::non_invertible_scalar);
  Scalar out = *this;
  if (modulus_) {
    out.toy_ = powmod(toy_, modulus_ - 2, modulus_);
  } else {
    out.fr_ = fr_.inverse();
  }
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  same(a.modulus_, b.modulus_);
  return a.modulus_ ? a.toy_ == b.toy_ : a.fr_ == b.fr_;
}

// ---------------------------------------------------------------- elements

bool GroupElement::is_identity() const { return modulus_ ? toy_ == 0 : p_.infinity; }

std::uint64_t GroupElement::toy_value() const {
  require_toy(modulus_);
  return toy_;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  same(a.modulus_, b.modulus_);
  GroupElement out = a;
  if (a.modulus_) {
    out.toy_ = addmod(a.toy_, b.toy_, a.modulus_);
  } else {
    out.p_ = bls::g1_add(a.p_, b.p_);
    out.q_ = bls::g2_add(a.q_, b.q_);
  }
  return out;
}

GroupElement GroupElement::inverse() const {
  GroupElement out = *this;
  if (modulus_) {
    out.toy_ = submod(0, toy_, modulus_);
  } else {
    out.p_ = bls::g1_neg(p_);
    out.q_ = bls::g2_neg(q_);
  }
  return out;
}

GroupElement GroupElement::pow(const Scalar& e) const {
  same(modulus_, e.modulus_);
  GroupElement out = *this;
  if (modulus_) {
    out.toy_ = mulmod(toy_, e.toy_, modulus_);
    return out;
  }
  auto k = e.canonical();
  if (is_canonical_generator(*this)) {
    out.p_ = bls::g1_mul_generator(k);
    out.q_ = bls::g2_mul_generator(k);
  } else {
    out.p_ = bls::g1_mul(p_, k);
    out.q_ = bls::g2_mul(q_, k);
  }
  return out;
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  same(a.modulus_, b.modulus_);
  return a.modulus_ ? a.toy_ == b.toy_ : (a.p_ == b.p_ && a.q_ == b.q_);
}

bool TargetElement::is_identity() const { return modulus_ ? toy_ == 0 : f_.is_one(); }

std::uint64_t TargetElement::toy_value() const {
  require_toy(modulus_);
  return toy_;
}

TargetElement operator*(const TargetElement& a, const TargetElement& b) {
  same(a.modulus_, b.modulus_);
  TargetElement out = a;
  if (a.modulus_) {
    out.toy_ = addmod(a.toy_, b.toy_, a.modulus_);
  } else {
    out.f_ = a.f_ * b.f_;
  }
  return out;
}

TargetElement TargetElement::inverse() const {
  TargetElement out = *this;
  if (modulus_) {
    out.toy_ = submod(0, toy_, modulus_);
  } else {
    out.f_ = f_.conjugate();  // unitary
  }
  return out;
}

TargetElement TargetElement::pow(const Scalar& e) const {
  same(modulus_, e.modulus_);
  TargetElement out = *this;
  if (modulus_) {
    out.toy_ = mulmod(toy_, e.toy_, modulus_);
  } else {
    out.f_ = bls::cyclotomic_pow(f_, e.canonical());
  }
  return out;
}

bool operator==(const TargetElement& a, const TargetElement& b) {
  same(a.modulus_, b.modulus_);
  return a.modulus_ ? a.toy_ == b.toy_ : a.f_ == b.f_;
}

// ---------------------------------------------------------------- group

Group::Group(const GroupDescription& desc) : desc_(desc) {}

Group Group::generate(const GroupParams& params, Rng&) { return Group(GroupDescription::from_params(params)); }

GroupElement Group::generator() const {
  GroupElement g;
  g.modulus_ = tag();
  if (g.modulus_) {
    g.toy_ = 1;
  } else {
    g.p_ = bls::g1_generator();
    g.q_ = bls::g2_generator();
  }
  return g;
}

GroupElement Group::identity() const {
  GroupElement e;
  e.modulus_ = tag();
  return e;
}

TargetElement Group::target_identity() const {
  TargetElement t;
  t.modulus_ = tag();
  return t;
}

Scalar Group::scalar(std::uint64_t v) const {
  Scalar s;
  s.modulus_ = tag();
  if (s.modulus_) {
    s.toy_ = v % s.modulus_;
  } else {
    s.fr_ = bls::Fr::from_u64(v);
  }
  return s;
}

Scalar Group::random_scalar(Rng& rng) const {
  Scalar s;
  s.modulus_ = tag();
  if (s.modulus_) {
    s.toy_ = rng.uniform(s.modulus_);
    return s;
  }
  // r < 2^255: sample 255 bits and reject values >= r.
  std::array<std::uint8_t, 32> buf{};
  for (;;) {
    rng.fill(buf);
    buf[0] &= 0x7f;
    if (auto v = bls::Fr::from_bytes(buf)) {
      s.fr_ = *v;
      return s;
    }
  }
}

Scalar Group::random_nonzero_scalar(Rng& rng) const {
  for (;;) {
    Scalar s = random_scalar(rng);
    if (!s.is_zero()) return s;
  }
}

GroupElement Group::random_nonidentity(Rng& rng) const { return exp_generator(random_nonzero_scalar(rng)); }

GroupElement Group::exp_generator(const Scalar& e) const {
  check(e);
  return generator().pow(e);
}

GroupElement Group::toy_element(std::uint64_t v) const {
  if (backend() != Backend::toy) throw Error(ErrorCode::backend_mismatch, "toy_element on production group");
  GroupElement g = identity();
  g.toy_ = v % g.modulus_;
  return g;
}

Scalar Group::hash_to_scalar(ByteView data) const {
  const std::uint8_t d0 = 0x00, d1 = 0x01;
  Digest h0 = sha256({ByteView(&d0, 1), data});
  Digest h1 = sha256({ByteView(&d1, 1), data});
  std::array<std::uint8_t, 64> wide{};
  std::copy(h0.begin(), h0.end(), wide.begin());
  std::copy(h1.begin(), h1.end(), wide.begin() + 32);
  Scalar s;
  s.modulus_ = tag();
  if (s.modulus_) {
    std::uint64_t acc = 0;
    for (std::uint8_t b : wide) acc = static_cast<std::uint64_t>((static_cast<u128>(acc) << 8 | b) % s.modulus_);
    s.toy_ = acc;
  } else {
    s.fr_ = bls::Fr::from_wide_bytes(wide);
  }
  return s;
}

std::size_t Group::scalar_size() const { return backend() == Backend::toy ? 8 : 32; }
std::size_t Group::element_size() const {
  return backend() == Backend::toy ? 8 : bls::kG1CompressedSize + bls::kG2CompressedSize;
}
std::size_t Group::target_size() const { return backend() == Backend::toy ? 8 : 12 * bls::Fp::kBytes; }

void Group::check(const Scalar& s) const { same(s.modulus_, tag()); }
void Group::check(const GroupElement& e) const { same(e.modulus_, tag()); }
void Group::check(const TargetElement& t) const { same(t.modulus_, tag()); }

namespace {

[[noreturn]] void malformed(const char* what) { throw Error(ErrorCode::malformed_encoding, what); }

std::uint64_t read_toy(ByteView bytes, std::uint64_t modulus) {
  if (bytes.size() != 8) malformed("toy encodings are 8 bytes");
  std::uint64_t v = read_be(bytes, 8);
  if (v >= modulus) malformed("toy value not below the modulus");
  return v;
}

void raise_point_error(bls::PointDecodeError e) {
  switch (e) {
    case bls::PointDecodeError::malformed: malformed("malformed point");
    case bls::PointDecodeError::off_curve: throw Error(ErrorCode::off_curve);
    case bls::PointDecodeError::not_in_subgroup: throw Error(ErrorCode::not_in_subgroup);
  }
}

}  // namespace

Scalar Group::deserialize_scalar(ByteView bytes) const {
  Scalar s;
  s.modulus_ = tag();
  if (s.modulus_) {
    s.toy_ = read_toy(bytes, s.modulus_);
    return s;
  }
  if (bytes.size() != 32) malformed("scalar encodings are 32 bytes");
  auto v = bls::Fr::from_bytes(bytes);
  if (!v) malformed("scalar not below the group order");
  s.fr_ = *v;
  return s;
}

GroupElement Group::deserialize_element(ByteView bytes) const {
  GroupElement e;
  e.modulus_ = tag();
  if (e.modulus_) {
    e.toy_ = read_toy(bytes, e.modulus_);
    return e;
  }
  if (bytes.size() != element_size()) malformed("group elements are 144 bytes");
  auto p = bls::g1_decompress(bytes.first(bls::kG1CompressedSize));
  if (p.error) raise_point_error(*p.error);
  auto q = bls::g2_decompress(bytes.subspan(bls::kG1CompressedSize));
  if (q.error) raise_point_error(*q.error);
  if (!coherent(p.point, q.point)) throw Error(ErrorCode::incoherent_element);
  e.p_ = p.point;
  e.q_ = q.point;
  return e;
}

TargetElement Group::deserialize_target(ByteView bytes) const {
  TargetElement t;
  t.modulus_ = tag();
  if (t.modulus_) {
    t.toy_ = read_toy(bytes, t.modulus_);
    return t;
  }
  if (bytes.size() != target_size()) malformed("target elements are 576 bytes");
  for (std::size_t i = 0; i < 12; ++i) {
    auto v = bls::Fp::from_bytes(bytes.subspan(48 * i, 48));
    if (!v) malformed("field element not below p");
    (i % 2 == 0 ? t.f_.c[i / 2].c0 : t.f_.c[i / 2].c1) = *v;
  }
  if (!bls::gt_in_subgroup(t.f_)) throw Error(ErrorCode::not_in_subgroup, "not an element of G_T");
  return t;
}

// ---------------------------------------------------------------- free functions

Bytes serialize(const Scalar& s) {
  Bytes out;
  if (s.modulus_) {
    append_be64(out, s.toy_);
  } else {
    out.resize(32);
    s.fr_.to_bytes(out);
  }
  return out;
}

Bytes serialize(const GroupElement& e) {
  Bytes out;
  if (e.modulus_) {
    append_be64(out, e.toy_);
    return out;
  }
  out.resize(bls::kG1CompressedSize + bls::kG2CompressedSize);
  bls::g1_compress(e.p_, std::span(out).first(bls::kG1CompressedSize));
  bls::g2_compress(e.q_, std::span(out).subspan(bls::kG1CompressedSize));
  return out;
}

Bytes serialize(const TargetElement& t) {
  Bytes out;
  if (t.modulus_) {
    append_be64(out, t.toy_);
    return out;
  }
  out.resize(12 * 48);
  for (std::size_t i = 0; i < 12; ++i) {
    const bls::Fp& v = i % 2 == 0 ? t.f_.c[i / 2].c0 : t.f_.c[i / 2].c1;
    v.to_bytes(std::span(out).subspan(48 * i, 48));
  }
  return out;
}

TargetElement pairing(const GroupElement& a, const GroupElement& b) {
  return pairing_product(std::span(&a, 1), std::span(&b, 1));
}

TargetElement pairing_product(std::span<const GroupElement> as, std::span<const GroupElement> bs) {
  if (as.size() != bs.size()) throw Error(ErrorCode::length_mismatch, "pairing_product arity");
  if (as.empty()) throw Error(ErrorCode::empty_input, "pairing_product of nothing");
  const std::uint64_t tag = as[0].modulus_;
  for (std::size_t i = 0; i < as.size(); ++i) {
    same(as[i].modulus_, tag);
    same(bs[i].modulus_, tag);
  }
  g_pairings.fetch_add(as.size(), std::memory_order_relaxed);
  TargetElement out;
  out.modulus_ = tag;
  if (tag) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < as.size(); ++i) acc = addmod(acc, mulmod(as[i].toy_, bs[i].toy_, tag), tag);
    out.toy_ = acc;
    return out;
  }
  std::vector<bls::G1Affine> ps(as.size());
  std::vector<bls::G2Affine> qs(as.size());
  for (std::size_t i = 0; i < as.size(); ++i) {
    ps[i] = as[i].p_;
    qs[i] = bs[i].q_;
  }
  out.f_ = bls::final_exponentiation(bls::miller_loop(ps, qs));
  return out;
}

GroupElement multi_exp(std::span<const GroupElement> bases, std::span<const Scalar> exps) {
  if (bases.size() != exps.size()) throw Error(ErrorCode::length_mismatch, "multi_exp arity");
  if (bases.empty()) throw Error(ErrorCode::empty_input, "multi_exp of nothing");
  const std::uint64_t tag = bases[0].modulus_;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    same(bases[i].modulus_, tag);
    same(exps[i].modulus_, tag);
  }
  GroupElement out;
  out.modulus_ = tag;
  if (tag) {
    for (std::size_t i = 0; i < bases.size(); ++i) {
      out.toy_ = addmod(out.toy_, mulmod(bases[i].toy_, exps[i].toy_, tag), tag);
    }
    return out;
  }
  if (bases.size() == 1) return bases[0].pow(exps[0]);
  std::vector<bls::G1Affine> ps(bases.size());
  std::vector<bls::G2Affine> qs(bases.size());
  std::vector<bls::Limbs<4>> ks(bases.size());
  for (std::size_t i = 0; i < bases.size(); ++i) {
    ps[i] = bases[i].p_;
    qs[i] = bases[i].q_;
    ks[i] = exps[i].canonical();
  }
  out.p_ = bls::g1_multi_mul(ps, ks);
  out.q_ = bls::g2_multi_mul(qs, ks);
  return out;
}

std::uint64_t pairing_count() { return g_pairings.load(std::memory_order_relaxed); }

}  // namespace syncagg
