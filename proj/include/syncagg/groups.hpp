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

// Symmetric bilinear group interface with two backends.
//
// production: BLS12-381. A group element is a pair (P in G1, Q in G2) with
//   equal discrete logarithm; pairing(A, B) = e(A.P, B.Q), which is symmetric
//   on such pairs. Elements are 144 bytes on the wire.
// toy: G = G_T = (Z_p, +) with pairing(a, b) = a * b mod p. Discrete logs are
//   the values themselves, which makes it an exact oracle for tests. It has
//   no security whatsoever.
//
// Nothing in this library is constant time.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "syncagg/bls12_381/fields.hpp"
#include "syncagg/bytes.hpp"
#include "syncagg/crypto.hpp"
#include "syncagg/error.hpp"

namespace syncagg {

enum class Backend : std::uint8_t { production = 0x01, toy = 0x02 };

std::string_view backend_name(Backend b);
std::optional<Backend> parse_backend(std::string_view name);

struct GroupParams {
  Backend backend = Backend::production;
  std::uint16_t security_level = 128;  // production only
  std::uint64_t toy_modulus = 101;     // toy only
};

bool is_prime_u64(std::uint64_t n);

class GroupDescription {
 public:
  // Levels 1..128 are served by BLS12-381.
  static GroupDescription production(std::uint16_t security_level = 128);
  // Throws invalid_group_order unless the modulus is prime.
  static GroupDescription toy(std::uint64_t modulus);
  static GroupDescription from_params(const GroupParams& params);

  Backend backend() const { return backend_; }
  std::uint16_t security_level() const { return level_; }
  std::uint64_t toy_modulus() const { return modulus_; }

  // Group order p, big-endian without leading zeros.
  Bytes order_be() const;
  std::size_t order_bits() const;

  // backend byte || 2-byte level (production) or 8-byte p (toy)
  Bytes serialize() const;
  static GroupDescription deserialize(ByteView bytes);

  friend bool operator==(const GroupDescription&, const GroupDescription&) = default;

 private:
  GroupDescription() = default;

  Backend backend_ = Backend::production;
  std::uint16_t level_ = 0;
  std::uint64_t modulus_ = 0;
};

class Group;
class GroupElement;
class TargetElement;

// Element of Z_p. Default-constructed values are production zeros.
class Scalar {
 public:
  Scalar() = default;

  bool is_zero() const;
  bool is_production() const { return modulus_ == 0; }
  // Toy backend only.
  std::uint64_t toy_value() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  // Throws non_invertible_scalar for zero.
  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  friend class Group;
  friend class GroupElement;
  friend class TargetElement;
  friend Bytes serialize(const Scalar&);
  friend GroupElement multi_exp(std::span<const GroupElement>, std::span<const Scalar>);

  bls12_381::Limbs<4> canonical() const;

  std::uint64_t modulus_ = 0;  // 0 selects production
  std::uint64_t toy_ = 0;
  bls12_381::Fr fr_{};
};

class GroupElement {
 public:
  GroupElement() = default;  // production identity

  bool is_identity() const;
  bool is_production() const { return modulus_ == 0; }
  // Toy backend only: the discrete log relative to 1.
  std::uint64_t toy_value() const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  GroupElement& operator*=(const GroupElement& o) { return *this = *this * o; }
  GroupElement inverse() const;
  GroupElement pow(const Scalar& e) const;

  friend bool operator==(const GroupElement& a, const GroupElement& b);

  // Production components.
  const bls12_381::G1Affine& g1() const { return p_; }
  const bls12_381::G2Affine& g2() const { return q_; }

 private:
  friend class Group;
  friend TargetElement pairing(const GroupElement&, const GroupElement&);
  friend TargetElement pairing_product(std::span<const GroupElement>, std::span<const GroupElement>);
  friend GroupElement multi_exp(std::span<const GroupElement>, std::span<const Scalar>);
  friend Bytes serialize(const GroupElement&);

  std::uint64_t modulus_ = 0;
  std::uint64_t toy_ = 0;
  bls12_381::G1Affine p_{};
  bls12_381::G2Affine q_{};
};

class TargetElement {
 public:
  TargetElement() : f_(bls12_381::Fp12::one()) {}  // production identity

  bool is_identity() const;
  // Toy backend only.
  std::uint64_t toy_value() const;

  friend TargetElement operator*(const TargetElement& a, const TargetElement& b);
  TargetElement& operator*=(const TargetElement& o) { return *this = *this * o; }
  TargetElement inverse() const;
  TargetElement pow(const Scalar& e) const;

  friend bool operator==(const TargetElement& a, const TargetElement& b);

 private:
  friend class Group;
  friend TargetElement pairing(const GroupElement&, const GroupElement&);
  friend TargetElement pairing_product(std::span<const GroupElement>, std::span<const GroupElement>);
  friend Bytes serialize(const TargetElement&);

  std::uint64_t modulus_ = 0;
  std::uint64_t toy_ = 0;
  bls12_381::Fp12 f_;
};

class Group {
 public:
  explicit Group(const GroupDescription& desc);
  // The rng is accepted for interface fidelity; both backends have fixed
  // parameters, so equal params always give equal groups.
  static Group generate(const GroupParams& params, Rng& rng);

  const GroupDescription& description() const { return desc_; }
  Backend backend() const { return desc_.backend(); }

  // Canonical generator: the standard BLS12-381 pair, or 1 for toy.
  GroupElement generator() const;
  GroupElement identity() const;
  TargetElement target_identity() const;

  // v mod p
  Scalar scalar(std::uint64_t v) const;
  Scalar random_scalar(Rng& rng) const;
  Scalar random_nonzero_scalar(Rng& rng) const;
  GroupElement random_nonidentity(Rng& rng) const;
  // generator()^e, through precomputed tables on production.
  GroupElement exp_generator(const Scalar& e) const;
  // Toy only: the element v * 1.
  GroupElement toy_element(std::uint64_t v) const;

  // SHA-256(0x00 || data) || SHA-256(0x01 || data), reduced mod p.
  Scalar hash_to_scalar(ByteView data) const;

  std::size_t scalar_size() const;
  std::size_t element_size() const;
  std::size_t target_size() const;

  // All throw Error with malformed_encoding, off_curve, not_in_subgroup or
  // incoherent_element.
  Scalar deserialize_scalar(ByteView bytes) const;
  GroupElement deserialize_element(ByteView bytes) const;
  TargetElement deserialize_target(ByteView bytes) const;

  // Throws backend_mismatch when the value belongs to another group.
  void check(const Scalar& s) const;
  void check(const GroupElement& e) const;
  void check(const TargetElement& t) const;

  friend bool operator==(const Group& a, const Group& b) { return a.desc_ == b.desc_; }

 private:
  std::uint64_t tag() const { return desc_.backend() == Backend::toy ? desc_.toy_modulus() : 0; }

  GroupDescription desc_;
};

// Fixed-width encodings: 32/144/576 bytes production, 8/8/8 bytes toy.
Bytes serialize(const Scalar& s);
Bytes serialize(const GroupElement& e);
Bytes serialize(const TargetElement& t);

TargetElement pairing(const GroupElement& a, const GroupElement& b);
// prod_i pairing(as[i], bs[i]) with one shared final exponentiation.
TargetElement pairing_product(std::span<const GroupElement> as, std::span<const GroupElement> bs);
// prod_i bases[i]^exps[i]; empty input is not allowed.
GroupElement multi_exp(std::span<const GroupElement> bases, std::span<const Scalar> exps);

// Number of pairings (one per Miller loop, or per toy product) evaluated by
// this process through pairing() and pairing_product(). Internal validity
// checks in deserialization are not counted.
std::uint64_t pairing_count();

}  // namespace syncagg
