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

// Certified-key registry. A key becomes usable once its holder shows a
// matching signing key, either in the clear (direct) or through a
// Fiat-Shamir Schnorr proof of knowledge.

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <variant>
#include <vector>

#include "syncagg/sas.hpp"

namespace syncagg {

struct SchnorrProof {
  GroupElement commitment;  // R = g^k
  Scalar challenge;         // c = H(tag || pp_id || vk || R)
  Scalar response;          // s = k + c sk

  friend bool operator==(const SchnorrProof&, const SchnorrProof&) = default;
};

struct DirectEvidence {
  Scalar sk;

  friend bool operator==(const DirectEvidence&, const DirectEvidence&) = default;
};

using KeyEvidence = std::variant<DirectEvidence, SchnorrProof>;

struct KeyRecord {
  GroupElement vk;
  KeyEvidence evidence;
  std::uint64_t certified_at = 0;  // registry-local sequence number, from 1
};

SchnorrProof prove_key(const SasParams& pp, const Scalar& sk, Rng& rng);
// Checks c against the recomputed challenge and g^s = R vk^c.
bool verify_key_proof(const SasParams& pp, const GroupElement& vk, const SchnorrProof& proof);

// kind 0x14 record: R || c || s
Bytes encode_proof(const SchnorrProof& proof);
SchnorrProof decode_proof(const SasParams& pp, ByteView bytes);  // throws malformed_proof

// kind 0x13 record: vk_len (2 bytes) || vk || evidence tag (0x01 direct,
// 0x02 pok) || evidence_len (2 bytes) || evidence || certified_at (8 bytes)
Bytes encode_key_record(const KeyRecord& rec);
KeyRecord decode_key_record(const SasParams& pp, ByteView bytes);

// Single-writer, multi-reader store: mutations take an exclusive lock,
// lookups a shared one.
class Registry {
 public:
  // game_mode enables lookup_sk, which exists for the security games only.
  explicit Registry(SasParams pp, bool game_mode = false);

  const SasParams& params() const { return pp_; }
  bool game_mode() const { return game_mode_; }

  // Accept iff sk != 0 and vk = g^sk. Re-certifying with the same evidence is
  // accepted without a new record; conflicting evidence is rejected.
  bool certify_direct(const GroupElement& vk, const Scalar& sk);
  bool certify_pok(const GroupElement& vk, const SchnorrProof& proof);

  bool is_certified(const GroupElement& vk) const;
  // Throws sk_retrieval_disabled outside game mode. Empty for unknown or
  // proof-certified keys.
  std::optional<Scalar> lookup_sk(const GroupElement& vk) const;

  std::optional<KeyRecord> record(const GroupElement& vk) const;
  // Records in certification order.
  std::vector<KeyRecord> records() const;
  std::size_t size() const;

  // Append-only persistence as a sequence of framed key records. attach()
  // loads an existing file (re-validating every record) and appends each
  // later certification to it.
  void attach(const std::filesystem::path& file);
  void save(const std::filesystem::path& file) const;

  // JSON mirror: {"pp_id": hex, "records": [{"vk": b64, "kind": "direct" |
  // "pok", "evidence": b64, "certified_at": n}]}
  std::string export_json() const;
  // Validates and certifies every entry; returns the count newly added.
  // Throws malformed_encoding on bad JSON or a pp_id mismatch.
  std::size_t import_json(const std::string& text);

 private:
  bool insert(const GroupElement& vk, KeyEvidence evidence);
  bool validate(const GroupElement& vk, const KeyEvidence& evidence) const;

  SasParams pp_;
  bool game_mode_;
  mutable std::shared_mutex mu_;
  std::map<Bytes, KeyRecord> by_vk_;
  std::vector<Bytes> order_;
  std::optional<std::filesystem::path> file_;
};

}  // namespace syncagg
