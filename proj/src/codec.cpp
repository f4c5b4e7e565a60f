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

#include "syncagg/codec.hpp"

#include <nlohmann/json.hpp>

namespace syncagg {

namespace {

using nlohmann::json;

const SasParams& need(const SasParams* pp) {
  if (pp == nullptr) throw Error(ErrorCode::invalid_parameter, "public parameters are required for this record");
  return *pp;
}

std::string b64(ByteView b) { return base64_encode(b); }
Bytes unb64(const json& j, const char* key) { return base64_decode(j.at(key).get<std::string>()); }

json group_json(const GroupDescription& d) {
  if (d.backend() == Backend::toy) return {{"backend", "toy"}, {"toy_modulus", d.toy_modulus()}};
  return {{"backend", "production"}, {"security_level", d.security_level()}};
}

GroupDescription group_from_json(const json& j) {
  auto b = parse_backend(j.at("backend").get<std::string>());
  if (!b) throw Error(ErrorCode::malformed_encoding, "unknown backend");
  if (*b == Backend::toy) return GroupDescription::toy(j.at("toy_modulus").get<std::uint64_t>());
  return GroupDescription::production(j.at("security_level").get<std::uint16_t>());
}

json proof_json(const SchnorrProof& p) {
  return {{"commitment", b64(serialize(p.commitment))},
          {"challenge", b64(serialize(p.challenge))},
          {"response", b64(serialize(p.response))}};
}

SchnorrProof proof_from_json(const SasParams& pp, const json& j) {
  const Group& G = pp.group;
  try {
    return SchnorrProof{G.deserialize_element(unb64(j, "commitment")), G.deserialize_scalar(unb64(j, "challenge")),
                        G.deserialize_scalar(unb64(j, "response"))};
  } catch (const Error& e) {
    throw Error(ErrorCode::malformed_proof, e.what());
  }
}

}  // namespace

WireKind detect_kind(ByteView binary) {
  if (binary.empty()) throw Error(ErrorCode::malformed_encoding, "empty record");
  switch (binary[0]) {
    case 0x01: return WireKind::signature;
    case 0x02: return WireKind::aggregate;
    case 0x10: return WireKind::params;
    case 0x11: return WireKind::verification_key;
    case 0x12: return WireKind::secret_key;
    case 0x13: return WireKind::key_record;
    case 0x14: return WireKind::pok_proof;
    default: throw Error(ErrorCode::malformed_encoding, "unknown record kind");
  }
}

std::string_view wire_kind_name(WireKind kind) {
  switch (kind) {
    case WireKind::signature: return "signature";
    case WireKind::aggregate: return "aggregate";
    case WireKind::params: return "params";
    case WireKind::verification_key: return "verification_key";
    case WireKind::secret_key: return "secret_key";
    case WireKind::key_record: return "key_record";
    case WireKind::pok_proof: return "pok_proof";
  }
  return "unknown";
}

std::string binary_to_json(const SasParams* pp, ByteView binary) {
  const WireKind kind = detect_kind(binary);
  json j = {{"type", wire_kind_name(kind)}};
  switch (kind) {
    case WireKind::signature: {
      SasSignature s = decode_signature(need(pp), binary);
      j["t"] = s.t;
      j["E"] = b64(serialize(s.E));
      break;
    }
    case WireKind::aggregate: {
      AggregateSignature a = decode_aggregate(need(pp), binary);
      j["t"] = a.t;
      j["E"] = b64(serialize(a.E));
      break;
    }
    case WireKind::params: {
      SasParams p = decode_params(binary);
      j["group"] = group_json(p.group.description());
      j["g"] = b64(serialize(p.g));
      j["periods"] = p.periods;
      j["hash"] = {{"suite_id", p.hash.suite_id}, {"tags", {p.hash.tag1, p.hash.tag2, p.hash.tag3}}};
      j["pp_id"] = to_hex(p.id());
      break;
    }
    case WireKind::verification_key:
      j["vk"] = b64(serialize(decode_verification_key(need(pp), binary)));
      break;
    case WireKind::secret_key:
      j["sk"] = b64(serialize(decode_secret_key(need(pp), binary)));
      break;
    case WireKind::key_record: {
      KeyRecord rec = decode_key_record(need(pp), binary);
      j["vk"] = b64(serialize(rec.vk));
      j["certified_at"] = rec.certified_at;
      if (const auto* d = std::get_if<DirectEvidence>(&rec.evidence)) {
        j["evidence"] = {{"kind", "direct"}, {"sk", b64(serialize(d->sk))}};
      } else {
        j["evidence"] = proof_json(std::get<SchnorrProof>(rec.evidence));
        j["evidence"]["kind"] = "pok";
      }
      break;
    }
    case WireKind::pok_proof: {
      json p = proof_json(decode_proof(need(pp), binary));
      j.update(p);
      break;
    }
  }
  return j.dump(2);
}

Bytes json_to_binary(const SasParams* pp, const std::string& text) {
  try {
    json j = json::parse(text);
    const std::string type = j.at("type").get<std::string>();
    if (type == "params") {
      Group G(group_from_json(j.at("group")));
      HashConfig hash;
      hash.suite_id = j.at("hash").at("suite_id").get<std::uint8_t>();
      const auto& tags = j.at("hash").at("tags");
      if (tags.size() != 3) throw Error(ErrorCode::malformed_encoding, "three hash tags expected");
      hash.tag1 = tags[0].get<std::string>();
      hash.tag2 = tags[1].get<std::string>();
      hash.tag3 = tags[2].get<std::string>();
      SasParams p{G, G.deserialize_element(unb64(j, "g")), j.at("periods").get<std::uint64_t>(), hash};
      // Round-trip through the binary decoder for its validity checks.
      return encode_params(decode_params(encode_params(p)));
    }
    const SasParams& P = need(pp);
    const Group& G = P.group;
    if (type == "signature") return encode_signature({G.deserialize_element(unb64(j, "E")), j.at("t").get<std::uint64_t>()});
    if (type == "aggregate") return encode_aggregate({G.deserialize_element(unb64(j, "E")), j.at("t").get<std::uint64_t>()});
    if (type == "verification_key") return encode_verification_key(G.deserialize_element(unb64(j, "vk")));
    if (type == "secret_key") return encode_secret_key(G.deserialize_scalar(unb64(j, "sk")));
    if (type == "pok_proof") return encode_proof(proof_from_json(P, j));
    if (type == "key_record") {
      KeyRecord rec;
      rec.vk = G.deserialize_element(unb64(j, "vk"));
      rec.certified_at = j.at("certified_at").get<std::uint64_t>();
      const json& ev = j.at("evidence");
      const std::string kind = ev.at("kind").get<std::string>();
      if (kind == "direct") {
        rec.evidence = DirectEvidence{G.deserialize_scalar(unb64(ev, "sk"))};
      } else if (kind == "pok") {
        rec.evidence = proof_from_json(P, ev);
      } else {
        throw Error(ErrorCode::malformed_encoding, "unknown evidence kind");
      }
      return encode_key_record(rec);
    }
    throw Error(ErrorCode::malformed_encoding, "unknown record type " + type);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::malformed_encoding, e.what());
  }
}

}  // namespace syncagg
