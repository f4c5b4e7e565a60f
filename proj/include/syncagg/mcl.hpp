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

// Single-message modified Camenisch-Lysyanskaya signatures.
//
//   KeyGen: g in G*, x, y, z in Z_p*, vk = (g, g^x, g^y, g^z)
//   Sign:   w in Z_p, A in G*, B = A^y, C = A^z, D = C^y,
//           E = A^x B^(m x) D^(w x)
//   Verify: e(A, Y) = e(B, g), e(A, Z) = e(C, g), e(C, Y) = e(D, g),
//           e(A B^m D^w, X) = e(E, g), and A != 1

#pragma once

#include "syncagg/groups.hpp"

namespace syncagg {

struct MclParams {
  Group group;
};

struct MclVerificationKey {
  GroupElement g, X, Y, Z;
};

struct MclSecretKey {
  Scalar x, y, z;
};

struct MclKeyPair {
  MclVerificationKey vk;
  MclSecretKey sk;
};

struct MclSignature {
  Scalar w;
  GroupElement A, B, C, D, E;
};

MclParams mcl_setup(const GroupParams& params, Rng& rng);

MclKeyPair mcl_keygen(const MclParams& pp, Rng& rng);
// Deterministic key generation from explicit draws; throws invalid_parameter
// if g is the identity or any of x, y, z is zero.
MclKeyPair mcl_keygen_from(const MclParams& pp, const GroupElement& g, const Scalar& x, const Scalar& y,
                           const Scalar& z);

MclSignature mcl_sign(const MclParams& pp, const MclSecretKey& sk, const Scalar& m, Rng& rng);
// Signing with explicit randomness (w, A); A must not be the identity.
MclSignature mcl_sign_with(const MclParams& pp, const MclSecretKey& sk, const Scalar& m, const Scalar& w,
                           const GroupElement& A);

// Eight pairings, as four two-term products. Throws backend_mismatch for
// foreign values.
bool mcl_verify(const MclParams& pp, const MclVerificationKey& vk, const Scalar& m, const MclSignature& sig);

// w || A || B || C || D || E
Bytes encode_mcl_signature(const MclSignature& sig);
MclSignature decode_mcl_signature(const MclParams& pp, ByteView bytes);

}  // namespace syncagg
