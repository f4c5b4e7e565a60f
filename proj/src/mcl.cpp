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

#include "syncagg/mcl.hpp"

namespace syncagg {

namespace {

// e(a, b) == e(c, d) as one product e(a, b) e(c^-1, d).
bool pairings_equal(const GroupElement& a, const GroupElement& b, const GroupElement& c,
                    const GroupElement& d) {
  const GroupElement lhs[2] = {a, c.inverse()};
  const GroupElement rhs[2] = {b, d};
  return pairing_product(lhs, rhs).is_identity();
}

}  // namespace

MclParams mcl_setup(const GroupParams& params, Rng& rng) { return MclParams{Group::generate(params, rng)}; }

MclKeyPair mcl_keygen(const MclParams& pp, Rng& rng) {
  const Group& G = pp.group;
  GroupElement g = G.random_nonidentity(rng);
  Scalar x = G.random_nonzero_scalar(rng);
  Scalar y = G.random_nonzero_scalar(rng);
  Scalar z = G.random_nonzero_scalar(rng);
  return mcl_keygen_from(pp, g, x, y, z);
}

MclKeyPair mcl_keygen_from(const MclParams& pp, const GroupElement& g, const Scalar& x, const Scalar& y,
                           const Scalar& z) {
  const Group& G = pp.group;
  G.check(g);
  for (const Scalar* s : {&x, &y, &z}) G.check(*s);
  if (g.is_identity()) throw Error(ErrorCode::invalid_parameter, "g must not be the identity");
  if (x.is_zero() || y.is_zero() || z.is_zero()) throw Error(ErrorCode::invalid_parameter, "secret key components must be nonzero");
  return MclKeyPair{{g, g.pow(x), g.pow(y), g.pow(z)}, {x, y, z}};
}

MclSignature mcl_sign(const MclParams& pp, const MclSecretKey& sk, const Scalar& m, Rng& rng) {
  Scalar w = pp.group.random_scalar(rng);
  GroupElement A = pp.group.random_nonidentity(rng);
  return mcl_sign_with(pp, sk, m, w, A);
}

MclSignature mcl_sign_with(const MclParams& pp, const MclSecretKey& sk, const Scalar& m, const Scalar& w,
                           const GroupElement& A) {
  const Group& G = pp.group;
  G.check(m);
  G.check(w);
  G.check(A);
  if (A.is_identity()) throw Error(ErrorCode::invalid_parameter, "A must not be the identity");
  MclSignature s;
  s.w = w;
  s.A = A;
  s.B = A.pow(sk.y);
  s.C = A.pow(sk.z);
  s.D = s.C.pow(sk.y);
  // E = A^x B^(m x) D^(w x)
  const GroupElement bases[3] = {s.A, s.B, s.D};
  const Scalar exps[3] = {sk.x, m * sk.x, w * sk.x};
  s.E = multi_exp(bases, exps);
  return s;
}

bool mcl_verify(const MclParams& pp, const MclVerificationKey& vk, const Scalar& m, const MclSignature& sig) {
  const Group& G = pp.group;
  G.check(m);
  G.check(sig.w);
  for (const GroupElement* e : {&vk.g, &vk.X, &vk.Y, &vk.Z, &sig.A, &sig.B, &sig.C, &sig.D, &sig.E}) G.check(*e);
  if (sig.A.is_identity()) return false;
  if (!pairings_equal(sig.A, vk.Y, sig.B, vk.g)) return false;
  if (!pairings_equal(sig.A, vk.Z, sig.C, vk.g)) return false;
  if (!pairings_equal(sig.C, vk.Y, sig.D, vk.g)) return false;
  const GroupElement bases[3] = {sig.A, sig.B, sig.D};
  const Scalar exps[3] = {G.scalar(1), m, sig.w};
  return pairings_equal(multi_exp(bases, exps), vk.X, sig.E, vk.g);
}

Bytes encode_mcl_signature(const MclSignature& sig) {
  Bytes out = serialize(sig.w);
  for (const GroupElement* e : {&sig.A, &sig.B, &sig.C, &sig.D, &sig.E}) append(out, serialize(*e));
  return out;
}

MclSignature decode_mcl_signature(const MclParams& pp, ByteView bytes) {
  const Group& G = pp.group;
  ByteReader r(bytes);
  MclSignature sig;
  sig.w = G.deserialize_scalar(r.take(G.scalar_size()));
  for (GroupElement* e : {&sig.A, &sig.B, &sig.C, &sig.D, &sig.E}) *e = G.deserialize_element(r.take(G.element_size()));
  r.expect_done();
  return sig;
}

}  // namespace syncagg
