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

#include "syncagg/registry.hpp"

#include <fstream>
#include <iterator>
#include <mutex>

#include <nlohmann/json.hpp>

namespace syncagg {

namespace {

constexpr std::string_view kProofTag = "SYNCAGG-LLY-POK";
constexpr std::uint8_t kDirect = 0x01;
constexpr std::uint8_t kPok = 0x02;

Scalar challenge(const SasParams& pp, const GroupElement& vk, const GroupElement& R) {
  Bytes data{static_cast<std::uint8_t>(kProofTag.size())};
  append(data, as_bytes(kProofTag));
  append(data, pp.id());
  append(data, serialize(vk));
  append(data, serialize(R));
  return pp.group.hash_to_scalar(data);
}

Bytes evidence_bytes(const KeyEvidence& ev) {
  if (const auto* d = std::get_if<DirectEvidence>(&ev)) return serialize(d->sk);
  return encode_proof(std::get<SchnorrProof>(ev));
}

std::uint8_t evidence_tag(const KeyEvidence& ev) { return std::holds_alternative<DirectEvidence>(ev) ? kDirect : kPok; }

KeyEvidence parse_evidence(const SasParams& pp, std::uint8_t tag, ByteView bytes) {
  if (tag == kDirect) return DirectEvidence{pp.group.deserialize_scalar(bytes)};
  if (tag == kPok) return decode_proof(pp, bytes);
  throw Error(ErrorCode::malformed_encoding, "unknown evidence kind");
}

bool same_evidence(const KeyEvidence& a, const KeyEvidence& b) {
  return a.index() == b.index() && evidence_bytes(a) == evidence_bytes(b);
}

Bytes read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_failure, "cannot open " + file.string());
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::io_failure, "cannot read " + file.string());
  return data;
}

void append_file(const std::filesystem::path& file, ByteView data, bool truncate) {
  std::ofstream out(file, std::ios::binary | (truncate ? std::ios::trunc : std::ios::app));
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  out.flush();
  if (!out) throw Error(ErrorCode::io_failure, "cannot write " + file.string());
}

}  // namespace

// ---------------------------------------------------------------- proofs

SchnorrProof prove_key(const SasParams& pp, const Scalar& sk, Rng& rng) {
  pp.group.check(sk);
  const GroupElement vk = pp.g.pow(sk);
  const Scalar k = pp.group.random_scalar(rng);
  SchnorrProof proof;
  proof.commitment = pp.g.pow(k);
  proof.challenge = challenge(pp, vk, proof.commitment);
  proof.response = k + proof.challenge * sk;
  return proof;
}

bool verify_key_proof(const SasParams& pp, const GroupElement& vk, const SchnorrProof& proof) {
  const Group& G = pp.group;
  G.check(vk);
  G.check(proof.commitment);
  G.check(proof.challenge);
  G.check(proof.response);
  if (vk.is_identity()) return false;
  if (!(proof.challenge == challenge(pp, vk, proof.commitment))) return false;
  return pp.g.pow(proof.response) == proof.commitment * vk.pow(proof.challenge);
}

Bytes encode_proof(const SchnorrProof& proof) {
  Bytes payload = serialize(proof.commitment);
  append(payload, serialize(proof.challenge));
  append(payload, serialize(proof.response));
  return frame_record(WireKind::pok_proof, payload);
}

SchnorrProof decode_proof(const SasParams& pp, ByteView bytes) {
  const Group& G = pp.group;
  try {
    ByteReader r(unframe_record(WireKind::pok_proof, bytes));
    SchnorrProof proof;
    proof.commitment = G.deserialize_element(r.take(G.element_size()));
    proof.challenge = G.deserialize_scalar(r.take(G.scalar_size()));
    proof.response = G.deserialize_scalar(r.take(G.scalar_size()));
    r.expect_done();
    return proof;
  } catch (const Error& e) {
    throw Error(ErrorCode::malformed_proof, e.what());
  }
}

Bytes encode_key_record(const KeyRecord& rec) {
  Bytes payload;
  Bytes vk = serialize(rec.vk);
  Bytes ev = evidence_bytes(rec.evidence);
  append_be16(payload, static_cast<std::uint16_t>(vk.size()));
  append(payload, vk);
  payload.push_back(evidence_tag(rec.evidence));
  append_be16(payload, static_cast<std::uint16_t>(ev.size()));
  append(payload, ev);
  append_be64(payload, rec.certified_at);
  return frame_record(WireKind::key_record, payload);
}

KeyRecord decode_key_record(const SasParams& pp, ByteView bytes) {
  ByteReader r(unframe_record(WireKind::key_record, bytes));
  KeyRecord rec;
  rec.vk = pp.group.deserialize_element(r.take(r.be16()));
  std::uint8_t tag = r.u8();
  rec.evidence = parse_evidence(pp, tag, r.take(r.be16()));
  rec.certified_at = r.be64();
  r.expect_done();
  return rec;
}

// ---------------------------------------------------------------- registry

Registry::Registry(SasParams pp, bool game_mode) : pp_(std::move(pp)), game_mode_(game_mode) {}

bool Registry::validate(const GroupElement& vk, const KeyEvidence& evidence) const {
  pp_.group.check(vk);
  if (const auto* d = std::get_if<DirectEvidence>(&evidence)) {
    pp_.group.check(d->sk);
    return !d->sk.is_zero() && pp_.g.pow(d->sk) == vk;
  }
  return verify_key_proof(pp_, vk, std::get<SchnorrProof>(evidence));
}

bool Registry::insert(const GroupElement& vk, KeyEvidence evidence) {
  if (!validate(vk, evidence)) return false;
  Bytes key = serialize(vk);
  std::unique_lock lock(mu_);
  if (auto it = by_vk_.find(key); it != by_vk_.end()) return same_evidence(it->second.evidence, evidence);
  KeyRecord rec{vk, std::move(evidence), order_.size() + 1};
  if (file_) append_file(*file_, encode_key_record(rec), false);
  by_vk_.emplace(key, std::move(rec));
  order_.push_back(std::move(key));
  return true;
}

bool Registry::certify_direct(const GroupElement& vk, const Scalar& sk) { return insert(vk, DirectEvidence{sk}); }

bool Registry::certify_pok(const GroupElement& vk, const SchnorrProof& proof) { return insert(vk, proof); }

bool Registry::is_certified(const GroupElement& vk) const {
  pp_.group.check(vk);
  std::shared_lock lock(mu_);
  return by_vk_.contains(serialize(vk));
}

std::optional<Scalar> Registry::lookup_sk(const GroupElement& vk) const {
  if (!game_mode_) throw Error(ErrorCode::sk_retrieval_disabled, "sk lookup is only available in game mode");
  std::shared_lock lock(mu_);
  auto it = by_vk_.find(serialize(vk));
  if (it == by_vk_.end()) return std::nullopt;
  if (const auto* d = std::get_if<DirectEvidence>(&it->second.evidence)) return d->sk;
  return std::nullopt;
}

std::optional<KeyRecord> Registry::record(const GroupElement& vk) const {
  std::shared_lock lock(mu_);
  auto it = by_vk_.find(serialize(vk));
  if (it == by_vk_.end()) return std::nullopt;
  return it->second;
}

std::vector<KeyRecord> Registry::records() const {
  std::shared_lock lock(mu_);
  std::vector<KeyRecord> out;
  out.reserve(order_.size());
  for (const auto& k : order_) out.push_back(by_vk_.at(k));
  return out;
}

std::size_t Registry::size() const {
  std::shared_lock lock(mu_);
  return order_.size();
}

void Registry::attach(const std::filesystem::path& file) {
  if (std::filesystem::exists(file)) {
    Bytes data = read_file(file);
    ByteReader r(data);
    while (!r.done()) {
      const std::size_t start = data.size() - r.remaining();
      r.u8();
      const std::uint32_t len = r.be32();
      r.take(len);
      KeyRecord rec = decode_key_record(pp_, ByteView(data).subspan(start, 5 + len));
      if (!insert(rec.vk, rec.evidence)) {
        throw Error(ErrorCode::malformed_encoding, "registry file holds an invalid or conflicting record");
      }
    }
  } else {
    append_file(file, {}, true);
  }
  std::unique_lock lock(mu_);
  file_ = file;
}

void Registry::save(const std::filesystem::path& file) const {
  Bytes out;
  for (const auto& rec : records()) append(out, encode_key_record(rec));
  append_file(file, out, true);
}

std::string Registry::export_json() const {
  nlohmann::json j;
  j["pp_id"] = to_hex(pp_.id());
  j["records"] = nlohmann::json::array();
  for (const auto& rec : records()) {
    j["records"].push_back({{"vk", base64_encode(serialize(rec.vk))},
                            {"kind", evidence_tag(rec.evidence) == kDirect ? "direct" : "pok"},
                            {"evidence", base64_encode(evidence_bytes(rec.evidence))},
                            {"certified_at", rec.certified_at}});
  }
  return j.dump(2);
}

std::size_t Registry::import_json(const std::string& text) {
  std::vector<std::pair<GroupElement, KeyEvidence>> entries;
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.at("pp_id").get<std::string>() != to_hex(pp_.id())) {
      throw Error(ErrorCode::malformed_encoding, "registry belongs to different public parameters");
    }
    for (const auto& e : j.at("records")) {
      GroupElement vk = pp_.group.deserialize_element(base64_decode(e.at("vk").get<std::string>()));
      const std::string kind = e.at("kind").get<std::string>();
      if (kind != "direct" && kind != "pok") throw Error(ErrorCode::malformed_encoding, "unknown evidence kind");
      Bytes ev = base64_decode(e.at("evidence").get<std::string>());
      entries.emplace_back(vk, parse_evidence(pp_, kind == "direct" ? kDirect : kPok, ev));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::malformed_encoding, e.what());
  }
  std::size_t added = 0;
  for (auto& [vk, ev] : entries) {
    const bool known = is_certified(vk);
    if (!insert(vk, std::move(ev))) throw Error(ErrorCode::malformed_encoding, "invalid or conflicting record");
    added += !known;
  }
  return added;
}

}  // namespace syncagg
