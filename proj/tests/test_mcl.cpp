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

#include <gtest/gtest.h>

#include "syncagg/mcl.hpp"

namespace syncagg {
namespace {

constexpr std::uint64_t kP = 101;

MclParams toy_params() { return MclParams{Group(GroupDescription::toy(kP))}; }
MclParams production_params() { return MclParams{Group(GroupDescription::production())}; }

// Plain-integer evaluation of the four verification equations on the toy
// backend, where every element is its own discrete log.
bool toy_oracle_verify(std::uint64_t g, std::uint64_t x, std::uint64_t y, std::uint64_t z, std::uint64_t m,
                       std::uint64_t w, std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d,
                       std::uint64_t e) {
  const std::uint64_t X = g * x % kP, Y = g * y % kP, Z = g * z % kP;
  if (a == 0) return false;
  if (a * Y % kP != b * g % kP) return false;
  if (a * Z % kP != c * g % kP) return false;
  if (c * Y % kP != d * g % kP) return false;
  return (a + m * b + w * d) % kP * X % kP == e * g % kP;
}

TEST(MclToy, WorkedValues) {
  MclParams pp = toy_params();
  const Group& G = pp.group;
  MclKeyPair kp = mcl_keygen_from(pp, G.generator(), G.scalar(3), G.scalar(5), G.scalar(7));
  MclSignature s = mcl_sign_with(pp, kp.sk, G.scalar(2), G.scalar(4), G.toy_element(2));
  EXPECT_EQ(s.B.toy_value(), 10u);
  EXPECT_EQ(s.C.toy_value(), 14u);
  EXPECT_EQ(s.D.toy_value(), 70u);
  EXPECT_EQ(s.E.toy_value(), 98u);
  EXPECT_TRUE(mcl_verify(pp, kp.vk, G.scalar(2), s));
  EXPECT_FALSE(mcl_verify(pp, kp.vk, G.scalar(3), s));

  MclSignature bad = s;
  bad.B = s.B * G.generator();
  EXPECT_FALSE(mcl_verify(pp, kp.vk, G.scalar(2), bad));
}

TEST(MclToy, ExhaustiveMessagesAgreeWithOracle) {
  MclParams pp = toy_params();
  const Group& G = pp.group;
  Rng rng(11);
  MclKeyPair kp = mcl_keygen(pp, rng);
  const std::uint64_t g = kp.vk.g.toy_value();
  for (std::uint64_t m = 0; m < kP; ++m) {
    MclSignature s = mcl_sign(pp, kp.sk, G.scalar(m), rng);
    ASSERT_TRUE(mcl_verify(pp, kp.vk, G.scalar(m), s)) << m;
    for (std::uint64_t m2 = 0; m2 < kP; ++m2) {
      const bool expect = toy_oracle_verify(g, kp.sk.x.toy_value(), kp.sk.y.toy_value(), kp.sk.z.toy_value(), m2,
                                            s.w.toy_value(), s.A.toy_value(), s.B.toy_value(), s.C.toy_value(),
                                            s.D.toy_value(), s.E.toy_value());
      ASSERT_EQ(mcl_verify(pp, kp.vk, G.scalar(m2), s), expect) << m << " " << m2;
      ASSERT_EQ(expect, m2 == m);
    }
  }
}

TEST(MclToy, RandomTuplesAgreeWithOracle) {
  MclParams pp = toy_params();
  const Group& G = pp.group;
  Rng rng(12);
  int accepted = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    MclKeyPair kp = mcl_keygen(pp, rng);
    // Half the trials start from an honest signature and perturb one value so
    // that both verdicts are exercised.
    std::uint64_t m = rng.uniform(kP);
    MclSignature s = mcl_sign(pp, kp.sk, G.scalar(m), rng);
    std::uint64_t v[6] = {s.w.toy_value(), s.A.toy_value(), s.B.toy_value(),
                          s.C.toy_value(), s.D.toy_value(), s.E.toy_value()};
    if (trial % 2 == 1) v[rng.uniform(6)] = rng.uniform(kP);
    if (trial % 7 == 0) v[1] = 0;
    MclSignature t{G.scalar(v[0]), G.toy_element(v[1]), G.toy_element(v[2]),
                   G.toy_element(v[3]), G.toy_element(v[4]), G.toy_element(v[5])};
    const bool expect = toy_oracle_verify(kp.vk.g.toy_value(), kp.sk.x.toy_value(), kp.sk.y.toy_value(),
                                          kp.sk.z.toy_value(), m, v[0], v[1], v[2], v[3], v[4], v[5]);
    ASSERT_EQ(mcl_verify(pp, kp.vk, G.scalar(m), t), expect);
    accepted += expect;
  }
  EXPECT_GT(accepted, 5000);
}

// Each structural check rejects on its own: forge E so that the final
// equation holds while B, C or D is wrong.
TEST(MclToy, AuxiliaryChecksAreIndependent) {
  MclParams pp = toy_params();
  const Group& G = pp.group;
  MclKeyPair kp = mcl_keygen_from(pp, G.generator(), G.scalar(3), G.scalar(5), G.scalar(7));
  const Scalar m = G.scalar(2);
  MclSignature honest = mcl_sign_with(pp, kp.sk, m, G.scalar(4), G.toy_element(2));
  for (int which = 0; which < 3; ++which) {
    MclSignature s = honest;
    GroupElement* target = which == 0 ? &s.B : which == 1 ? &s.C : &s.D;
    *target = *target * G.generator();
    const GroupElement bases[3] = {s.A, s.B, s.D};
    const Scalar exps[3] = {kp.sk.x, m * kp.sk.x, s.w * kp.sk.x};
    s.E = multi_exp(bases, exps);
    EXPECT_FALSE(mcl_verify(pp, kp.vk, m, s)) << which;
  }
}

TEST(MclToy, IdentityAIsRejected) {
  MclParams pp = toy_params();
  const Group& G = pp.group;
  MclKeyPair kp = mcl_keygen_from(pp, G.generator(), G.scalar(3), G.scalar(5), G.scalar(7));
  // All-identity tuple satisfies every pairing equation.
  MclSignature s{G.scalar(0), G.identity(), G.identity(), G.identity(), G.identity(), G.identity()};
  EXPECT_FALSE(mcl_verify(pp, kp.vk, G.scalar(2), s));
  EXPECT_THROW(mcl_sign_with(pp, kp.sk, G.scalar(2), G.scalar(1), G.identity()), Error);
}

TEST(MclToy, KeygenRejectsDegenerateInputs) {
  MclParams pp = toy_params();
  const Group& G = pp.group;
  EXPECT_THROW(mcl_keygen_from(pp, G.identity(), G.scalar(1), G.scalar(1), G.scalar(1)), Error);
  EXPECT_THROW(mcl_keygen_from(pp, G.generator(), G.scalar(0), G.scalar(1), G.scalar(1)), Error);
  EXPECT_THROW(mcl_keygen_from(pp, G.generator(), G.scalar(1), G.scalar(101), G.scalar(1)), Error);
}

class MclBoth : public ::testing::TestWithParam<Backend> {
 protected:
  MclParams params() const { return GetParam() == Backend::toy ? toy_params() : production_params(); }
};

INSTANTIATE_TEST_SUITE_P(Backends, MclBoth, ::testing::Values(Backend::toy, Backend::production),
                         [](const auto& info) { return std::string(backend_name(info.param)); });

TEST_P(MclBoth, SignVerifyAndMutations) {
  MclParams pp = params();
  const Group& G = pp.group;
  Rng rng(21);
  for (int i = 0; i < 3; ++i) {
    MclKeyPair kp = mcl_keygen(pp, rng);
    Scalar m = G.random_scalar(rng);
    MclSignature s = mcl_sign(pp, kp.sk, m, rng);
    ASSERT_TRUE(mcl_verify(pp, kp.vk, m, s));
    EXPECT_FALSE(mcl_verify(pp, kp.vk, m + G.scalar(1), s));

    MclSignature mw = s;
    mw.w = s.w + G.scalar(1);
    EXPECT_FALSE(mcl_verify(pp, kp.vk, m, mw));
    for (int c = 0; c < 5; ++c) {
      MclSignature mut = s;
      GroupElement* e[5] = {&mut.A, &mut.B, &mut.C, &mut.D, &mut.E};
      *e[c] = *e[c] * G.generator();
      EXPECT_FALSE(mcl_verify(pp, kp.vk, m, mut)) << c;
    }
  }
}

TEST_P(MclBoth, VerifyUsesEightPairings) {
  MclParams pp = params();
  Rng rng(22);
  MclKeyPair kp = mcl_keygen(pp, rng);
  Scalar m = pp.group.random_scalar(rng);
  MclSignature s = mcl_sign(pp, kp.sk, m, rng);
  const std::uint64_t before = pairing_count();
  ASSERT_TRUE(mcl_verify(pp, kp.vk, m, s));
  EXPECT_EQ(pairing_count() - before, 8u);
}

TEST_P(MclBoth, EncodingRoundTrip) {
  MclParams pp = params();
  const Group& G = pp.group;
  Rng rng(23);
  MclKeyPair kp = mcl_keygen(pp, rng);
  MclSignature s = mcl_sign(pp, kp.sk, G.scalar(9), rng);
  Bytes enc = encode_mcl_signature(s);
  EXPECT_EQ(enc.size(), G.scalar_size() + 5 * G.element_size());
  MclSignature d = decode_mcl_signature(pp, enc);
  EXPECT_EQ(encode_mcl_signature(d), enc);
  EXPECT_TRUE(mcl_verify(pp, kp.vk, G.scalar(9), d));
  enc.pop_back();
  EXPECT_THROW(decode_mcl_signature(pp, enc), Error);
}

TEST(Mcl, ForeignValuesThrow) {
  MclParams toy = toy_params();
  MclParams prod = production_params();
  Rng rng(24);
  MclKeyPair kp = mcl_keygen(toy, rng);
  MclSignature s = mcl_sign(toy, kp.sk, toy.group.scalar(1), rng);
  EXPECT_THROW(mcl_verify(prod, kp.vk, prod.group.scalar(1), s), Error);
}

}  // namespace
}  // namespace syncagg
