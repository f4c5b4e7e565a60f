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

// Synchronized aggregate signatures over periods 1..T.
//
//   Sign:      m' = H3(t, m), E = H1(t)^sk H2(t)^(m' sk), sigma = (E, t)
//   Verify:    e(E, g) = e(H1(t) H2(t)^m', vk)
//   Aggregate: E' = prod E_i over same-period, distinct-key, valid inputs
//   AggVerify: e(E', g) = e(H1(t), prod vk_i) e(H2(t), prod vk_i^m'_i)

#pragma once

#include <string>
#include <vector>

#include "syncagg/groups.hpp"

namespace syncagg {

struct HashConfig {
  std::uint8_t suite_id = 0x01;  // SHA-256 to scalar, then generator exponent
  std::string tag1 = "SYNCAGG-LLY-H1";
  std::string tag2 = "SYNCAGG-LLY-H2";
  std::string tag3 = "SYNCAGG-LLY-H3";

  friend bool operator==(const HashConfig&, const HashConfig&) = default;
};

struct SasParams {
  Group group;
  GroupElement g;
  std::uint64_t periods = 0;  // T
  HashConfig hash;

  // SHA-256(group description || g || T as 8 bytes BE)
  Digest id() const;
  bool period_in_range(std::uint64_t t) const { return t >= 1 && t <= periods; }
};

bool operator==(const SasParams& a, const SasParams& b);

struct SasKeyPair {
  GroupElement vk;
  Scalar sk;
};

struct SasSignature {
  GroupElement E;
  std::uint64_t t = 0;
};

struct AggregateSignature {
  GroupElement E;
  std::uint64_t t = 0;
};

// H1: [T] -> G, H2: [T] -> G*, H3: [T] x bytes -> Z_p. Implementations must
// answer repeated queries identically. Methods are non-const so that
// lazily sampled tables can implement the interface.
class HashSuite {
 public:
  virtual ~HashSuite() = default;
  virtual GroupElement h1(std::uint64_t t) = 0;
  virtual GroupElement h2(std::uint64_t t) = 0;
  virtual Scalar h3(std::uint64_t t, ByteView m) = 0;
};

// Deterministic domain-separated instantiation. H1 and H2 are generator
// powers by hashed exponents, so their discrete logs are public; the games
// module swaps in programmable tables instead. Stateless and thread-safe.
class DomainHashSuite final : public HashSuite {
 public:
  explicit DomainHashSuite(const SasParams& pp);

  GroupElement h1(std::uint64_t t) override;
  GroupElement h2(std::uint64_t t) override;
  Scalar h3(std::uint64_t t, ByteView m) override;

 private:
  Bytes prefix(const std::string& tag, std::uint64_t t) const;

  Group group_;
  Digest pp_id_;
  HashConfig config_;
};

GroupElement hash_h1(const SasParams& pp, std::uint64_t t);
GroupElement hash_h2(const SasParams& pp, std::uint64_t t);
Scalar hash_h3(const SasParams& pp, std::uint64_t t, ByteView m);

// g is the canonical generator raised to a random nonzero scalar. Throws
// invalid_parameter for T = 0.
SasParams sas_setup(const GroupParams& params, std::uint64_t periods, Rng& rng, HashConfig hash = {});

SasKeyPair sas_keygen(const SasParams& pp, Rng& rng);
// Throws invalid_parameter for x = 0.
SasKeyPair sas_keygen_from(const SasParams& pp, const Scalar& x);

// Throws period_out_of_bounds unless 1 <= t <= T.
SasSignature sas_sign(const SasParams& pp, HashSuite& h, const Scalar& sk, std::uint64_t t, ByteView m);
// Two pairings. Periods outside [1, T] are rejected.
bool sas_verify(const SasParams& pp, HashSuite& h, const GroupElement& vk, ByteView m, const SasSignature& sig);

struct AggregateOptions {
  // Benchmarking only: trust the inputs and just multiply.
  bool skip_validation = false;
  // Validate constituents with the OpenMP kernel. Honoured only for the
  // stateless DomainHashSuite.
  bool parallel_validation = false;
};

// Errors, checked in this order: empty_input, length_mismatch,
// mixed_periods, duplicate_key, then InvalidConstituent for the first
// signature that fails to verify.
AggregateSignature sas_aggregate(const SasParams& pp, HashSuite& h, std::span<const GroupElement> vks,
                                 std::span<const Bytes> msgs, std::span<const SasSignature> sigs,
                                 AggregateOptions options = {});

// Three pairings. Duplicate keys or an out-of-range period give false;
// empty or unequal lists throw.
bool sas_agg_verify(const SasParams& pp, HashSuite& h, std::span<const GroupElement> vks,
                    std::span<const Bytes> msgs, const AggregateSignature& agg);

// Overloads using DomainHashSuite.
SasSignature sas_sign(const SasParams& pp, const Scalar& sk, std::uint64_t t, ByteView m);
bool sas_verify(const SasParams& pp, const GroupElement& vk, ByteView m, const SasSignature& sig);
AggregateSignature sas_aggregate(const SasParams& pp, std::span<const GroupElement> vks,
                                 std::span<const Bytes> msgs, std::span<const SasSignature> sigs,
                                 AggregateOptions options = {});
bool sas_agg_verify(const SasParams& pp, std::span<const GroupElement> vks, std::span<const Bytes> msgs,
                    const AggregateSignature& agg);

// Wire formats.
//   signature:  0x01 || t (8 bytes BE) || E
//   aggregate:  0x02 || t (8 bytes BE) || E'
//   records:    kind || payload length (4 bytes BE) || payload, with kinds
//               0x10 params, 0x11 verification key, 0x12 secret key
//   params payload: len(desc) (1 byte) || desc || g || T (8 bytes BE) ||
//               suite id || three tags, each 2-byte length || bytes
enum class WireKind : std::uint8_t {
  signature = 0x01,
  aggregate = 0x02,
  params = 0x10,
  verification_key = 0x11,
  secret_key = 0x12,
  key_record = 0x13,
  pok_proof = 0x14,
};

Bytes encode_signature(const SasSignature& sig);
SasSignature decode_signature(const SasParams& pp, ByteView bytes);
Bytes encode_aggregate(const AggregateSignature& agg);
AggregateSignature decode_aggregate(const SasParams& pp, ByteView bytes);

Bytes encode_params(const SasParams& pp);
SasParams decode_params(ByteView bytes);
Bytes encode_verification_key(const GroupElement& vk);
GroupElement decode_verification_key(const SasParams& pp, ByteView bytes);
Bytes encode_secret_key(const Scalar& sk);
Scalar decode_secret_key(const SasParams& pp, ByteView bytes);

// kind || length || payload framing shared with the registry.
Bytes frame_record(WireKind kind, ByteView payload);
// Returns the payload; throws malformed_encoding on a kind or length mismatch.
ByteView unframe_record(WireKind kind, ByteView bytes);

}  // namespace syncagg
