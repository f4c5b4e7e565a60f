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

#include "syncagg/sas.hpp"

#include <set>

#include "syncagg/parallel.hpp"

namespace syncagg {

namespace {

constexpr int kMaxH2Counter = 255;

void append_tag(Bytes& out, const std::string& tag) {
  out.push_back(static_cast<std::uint8_t>(tag.size()));
  append(out, as_bytes(tag));
}

void check_period(const SasParams& pp, std::uint64_t t) {
  if (!pp.period_in_range(t)) {
    throw Error(ErrorCode::period_out_of_bounds,
                "period " + std::to_string(t) + " outside [1, " + std::to_string(pp.periods) + "]");
  }
}

bool has_duplicates(std::span<const GroupElement> vks) {
  std::set<Bytes> seen;
  for (const auto& vk : vks) {
    if (!seen.insert(serialize(vk)).second) return true;
  }
  return false;
}

}  // namespace

Digest SasParams::id() const {
  Bytes t;
  append_be64(t, periods);
  return sha256({group.description().serialize(), serialize(g), t});
}

bool operator==(const SasParams& a, const SasParams& b) {
  return a.group == b.group && a.g == b.g && a.periods == b.periods && a.hash == b.hash;
}

// ---------------------------------------------------------------- hashing

DomainHashSuite::DomainHashSuite(const SasParams& pp) : group_(pp.group), pp_id_(pp.id()), config_(pp.hash) {
  if (config_.suite_id != 0x01) throw Error(ErrorCode::invalid_parameter, "unknown hash suite id");
}

// len(tag) || tag || pp_id || t (8 bytes BE)
Bytes DomainHashSuite::prefix(const std::string& tag, std::uint64_t t) const {
  Bytes out;
  append_tag(out, tag);
  append(out, pp_id_);
  append_be64(out, t);
  return out;
}

GroupElement DomainHashSuite::h1(std::uint64_t t) {
  return group_.exp_generator(group_.hash_to_scalar(prefix(config_.tag1, t)));
}

GroupElement DomainHashSuite::h2(std::uint64_t t) {
  Bytes data = prefix(config_.tag2, t);
  data.push_back(0);
  for (int ctr = 0; ctr <= kMaxH2Counter; ++ctr) {
    data.back() = static_cast<std::uint8_t>(ctr);
    Scalar s = group_.hash_to_scalar(data);
    if (!s.is_zero()) return group_.exp_generator(s);
  }
  throw Error(ErrorCode::internal, "H2 retry counter exhausted");
}

Scalar DomainHashSuite::h3(std::uint64_t t, ByteView m) {
  Bytes data = prefix(config_.tag3, t);
  append(data, m);
  return group_.hash_to_scalar(data);
}

GroupElement hash_h1(const SasParams& pp, std::uint64_t t) { return DomainHashSuite(pp).h1(t); }
GroupElement hash_h2(const SasParams& pp, std::uint64_t t) { return DomainHashSuite(pp).h2(t); }
Scalar hash_h3(const SasParams& pp, std::uint64_t t, ByteView m) { return DomainHashSuite(pp).h3(t, m); }

// ---------------------------------------------------------------- scheme

SasParams sas_setup(const GroupParams& params, std::uint64_t periods, Rng& rng, HashConfig hash) {
  if (periods == 0) throw Error(ErrorCode::invalid_parameter, "the period bound T must be at least 1");
  Group group = Group::generate(params, rng);
  GroupElement g = group.exp_generator(group.random_nonzero_scalar(rng));
  SasParams pp{group, g, periods, std::move(hash)};
  DomainHashSuite check(pp);  // rejects unknown suite ids early
  return pp;
}

SasKeyPair sas_keygen(const SasParams& pp, Rng& rng) {
  return sas_keygen_from(pp, pp.group.random_nonzero_scalar(rng));
}

SasKeyPair sas_keygen_from(const SasParams& pp, const Scalar& x) {
  pp.group.check(x);
  if (x.is_zero()) throw Error(ErrorCode::invalid_parameter, "secret key must be nonzero");
  return SasKeyPair{pp.g.pow(x), x};
}

SasSignature sas_sign(const SasParams& pp, HashSuite& h, const Scalar& sk, std::uint64_t t, ByteView m) {
  check_period(pp, t);
  pp.group.check(sk);
  Scalar mp = h.h3(t, m);
  const GroupElement bases[2] = {h.h1(t), h.h2(t)};
  const Scalar exps[2] = {sk, mp * sk};
  return SasSignature{multi_exp(bases, exps), t};
}

bool sas_verify(const SasParams& pp, HashSuite& h, const GroupElement& vk, ByteView m, const SasSignature& sig) {
  pp.group.check(vk);
  pp.group.check(sig.E);
  if (!pp.period_in_range(sig.t)) return false;
  Scalar mp = h.h3(sig.t, m);
  const GroupElement bases[2] = {h.h1(sig.t), h.h2(sig.t)};
  const Scalar exps[2] = {pp.group.scalar(1), mp};
  // e(E, g) e(H1 H2^m', vk)^-1 == 1
  const GroupElement lhs[2] = {sig.E, multi_exp(bases, exps).inverse()};
  const GroupElement rhs[2] = {pp.g, vk};
  return pairing_product(lhs, rhs).is_identity();
}

AggregateSignature sas_aggregate(const SasParams& pp, HashSuite& h, std::span<const GroupElement> vks,
                                 std::span<const Bytes> msgs, std::span<const SasSignature> sigs,
                                 AggregateOptions options) {
  if (vks.empty() && msgs.empty() && sigs.empty()) throw Error(ErrorCode::empty_input, "nothing to aggregate");
  if (vks.size() != msgs.size() || vks.size() != sigs.size()) {
    throw Error(ErrorCode::length_mismatch, "vks, messages and signatures differ in length");
  }
  if (vks.empty()) throw Error(ErrorCode::empty_input, "nothing to aggregate");
  const std::uint64_t t = sigs[0].t;
  for (const auto& s : sigs) {
    if (s.t != t) throw Error(ErrorCode::mixed_periods);
  }
  if (has_duplicates(vks)) throw Error(ErrorCode::duplicate_key);

  if (!options.skip_validation) {
    if (options.parallel_validation && dynamic_cast<DomainHashSuite*>(&h) != nullptr) {
      auto ok = verify_batch(pp, vks, msgs, sigs, Execution::parallel);
      for (std::size_t i = 0; i < ok.size(); ++i) {
        if (!ok[i]) throw InvalidConstituent(i);
      }
    } else {
      for (std::size_t i = 0; i < sigs.size(); ++i) {
        if (!sas_verify(pp, h, vks[i], msgs[i], sigs[i])) throw InvalidConstituent(i);
      }
    }
  } else {
    check_period(pp, t);
  }

  GroupElement prod = sigs[0].E;
  for (std::size_t i = 1; i < sigs.size(); ++i) prod *= sigs[i].E;
  return AggregateSignature{prod, t};
}

bool sas_agg_verify(const SasParams& pp, HashSuite& h, std::span<const GroupElement> vks,
                    std::span<const Bytes> msgs, const AggregateSignature& agg) {
  if (vks.size() != msgs.size()) throw Error(ErrorCode::length_mismatch, "vks and messages differ in length");
  if (vks.empty()) throw Error(ErrorCode::empty_input, "no signers");
  pp.group.check(agg.E);
  for (const auto& vk : vks) pp.group.check(vk);
  if (has_duplicates(vks)) return false;
  const std::uint64_t t = agg.t;
  if (!pp.period_in_range(t)) return false;

  std::vector<Scalar> mps;
  mps.reserve(msgs.size());
  for (const auto& m : msgs) mps.push_back(h.h3(t, m));
  GroupElement vk_prod = vks[0];
  for (std::size_t i = 1; i < vks.size(); ++i) vk_prod *= vks[i];
  GroupElement vk_weighted = multi_exp(vks, mps);

  // e(E', g)^-1 e(H1, prod vk) e(H2, prod vk^m') == 1
  const GroupElement lhs[3] = {agg.E.inverse(), h.h1(t), h.h2(t)};
  const GroupElement rhs[3] = {pp.g, vk_prod, vk_weighted};
  return pairing_product(lhs, rhs).is_identity();
}

SasSignature sas_sign(const SasParams& pp, const Scalar& sk, std::uint64_t t, ByteView m) {
  DomainHashSuite h(pp);
  return sas_sign(pp, h, sk, t, m);
}

bool sas_verify(const SasParams& pp, const GroupElement& vk, ByteView m, const SasSignature& sig) {
  DomainHashSuite h(pp);
  return sas_verify(pp, h, vk, m, sig);
}

AggregateSignature sas_aggregate(const SasParams& pp, std::span<const GroupElement> vks,
                                 std::span<const Bytes> msgs, std::span<const SasSignature> sigs,
                                 AggregateOptions options) {
  DomainHashSuite h(pp);
  return sas_aggregate(pp, h, vks, msgs, sigs, options);
}

bool sas_agg_verify(const SasParams& pp, std::span<const GroupElement> vks, std::span<const Bytes> msgs,
                    const AggregateSignature& agg) {
  DomainHashSuite h(pp);
  return sas_agg_verify(pp, h, vks, msgs, agg);
}

// ---------------------------------------------------------------- wire formats

namespace {

Bytes encode_period_element(WireKind kind, std::uint64_t t, const GroupElement& e) {
  Bytes out{static_cast<std::uint8_t>(kind)};
  append_be64(out, t);
  append(out, serialize(e));
  return out;
}

std::pair<std::uint64_t, GroupElement> decode_period_element(WireKind kind, const SasParams& pp, ByteView bytes) {
  ByteReader r(bytes);
  if (r.u8() != static_cast<std::uint8_t>(kind)) throw Error(ErrorCode::malformed_encoding, "wrong record type");
  std::uint64_t t = r.be64();
  GroupElement e = pp.group.deserialize_element(r.rest());
  return {t, e};
}

}  // namespace

Bytes encode_signature(const SasSignature& sig) { return encode_period_element(WireKind::signature, sig.t, sig.E); }

SasSignature decode_signature(const SasParams& pp, ByteView bytes) {
  auto [t, e] = decode_period_element(WireKind::signature, pp, bytes);
  return SasSignature{e, t};
}

Bytes encode_aggregate(const AggregateSignature& agg) {
  return encode_period_element(WireKind::aggregate, agg.t, agg.E);
}

AggregateSignature decode_aggregate(const SasParams& pp, ByteView bytes) {
  auto [t, e] = decode_period_element(WireKind::aggregate, pp, bytes);
  return AggregateSignature{e, t};
}

Bytes frame_record(WireKind kind, ByteView payload) {
  Bytes out{static_cast<std::uint8_t>(kind)};
  append_be32(out, static_cast<std::uint32_t>(payload.size()));
  append(out, payload);
  return out;
}

ByteView unframe_record(WireKind kind, ByteView bytes) {
  ByteReader r(bytes);
  if (r.u8() != static_cast<std::uint8_t>(kind)) throw Error(ErrorCode::malformed_encoding, "wrong record type");
  std::uint32_t len = r.be32();
  ByteView payload = r.take(len);
  r.expect_done();
  return payload;
}

Bytes encode_params(const SasParams& pp) {
  Bytes payload;
  Bytes desc = pp.group.description().serialize();
  payload.push_back(static_cast<std::uint8_t>(desc.size()));
  append(payload, desc);
  append(payload, serialize(pp.g));
  append_be64(payload, pp.periods);
  payload.push_back(pp.hash.suite_id);
  for (const std::string* tag : {&pp.hash.tag1, &pp.hash.tag2, &pp.hash.tag3}) {
    if (tag->size() > 255) throw Error(ErrorCode::invalid_parameter, "hash tags are at most 255 bytes");
    append_be16(payload, static_cast<std::uint16_t>(tag->size()));
    append(payload, as_bytes(*tag));
  }
  return frame_record(WireKind::params, payload);
}

SasParams decode_params(ByteView bytes) {
  ByteReader r(unframe_record(WireKind::params, bytes));
  std::uint8_t desc_len = r.u8();
  Group group(GroupDescription::deserialize(r.take(desc_len)));
  GroupElement g = group.deserialize_element(r.take(group.element_size()));
  std::uint64_t periods = r.be64();
  HashConfig hash;
  hash.suite_id = r.u8();
  for (std::string* tag : {&hash.tag1, &hash.tag2, &hash.tag3}) {
    std::uint16_t len = r.be16();
    if (len > 255) throw Error(ErrorCode::malformed_encoding, "hash tag too long");
    ByteView b = r.take(len);
    tag->assign(b.begin(), b.end());
  }
  r.expect_done();
  if (periods == 0) throw Error(ErrorCode::malformed_encoding, "period bound must be positive");
  if (g.is_identity()) throw Error(ErrorCode::malformed_encoding, "g must not be the identity");
  if (hash.suite_id != 0x01) throw Error(ErrorCode::malformed_encoding, "unknown hash suite id");
  return SasParams{group, g, periods, hash};
}

Bytes encode_verification_key(const GroupElement& vk) { return frame_record(WireKind::verification_key, serialize(vk)); }

GroupElement decode_verification_key(const SasParams& pp, ByteView bytes) {
  return pp.group.deserialize_element(unframe_record(WireKind::verification_key, bytes));
}

Bytes encode_secret_key(const Scalar& sk) { return frame_record(WireKind::secret_key, serialize(sk)); }

Scalar decode_secret_key(const SasParams& pp, ByteView bytes) {
  return pp.group.deserialize_scalar(unframe_record(WireKind::secret_key, bytes));
}

}  // namespace syncagg
