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

#include <filesystem>
#include <thread>

#include <unistd.h>

#include "syncagg/registry.hpp"

namespace syncagg {
namespace {

constexpr std::uint64_t kP = 101;

SasParams toy_pp() {
  Group G(GroupDescription::toy(kP));
  return SasParams{G, G.generator(), 8, {}};
}

SasParams production_pp() {
  Rng rng(4);
  return sas_setup({}, 8, rng);
}

std::filesystem::path temp_file(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("syncagg_registry_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove(p);
  return p;
}

TEST(RegistryToy, DirectExamples) {
  SasParams pp = toy_pp();
  const Group& G = pp.group;
  Registry reg(pp, true);
  EXPECT_TRUE(reg.certify_direct(G.toy_element(3), G.scalar(3)));
  EXPECT_FALSE(reg.certify_direct(G.toy_element(4), G.scalar(5)));
  EXPECT_FALSE(reg.certify_direct(G.identity(), G.scalar(0)));
  EXPECT_TRUE(reg.is_certified(G.toy_element(3)));
  EXPECT_FALSE(reg.is_certified(G.toy_element(4)));
  EXPECT_EQ(reg.lookup_sk(G.toy_element(3)), G.scalar(3));
  EXPECT_EQ(reg.lookup_sk(G.toy_element(4)), std::nullopt);
}

// Soundness over the whole toy group: accept iff vk = g^sk with sk != 0.
TEST(RegistryToy, DirectSoundnessExhaustive) {
  SasParams pp = toy_pp();
  const Group& G = pp.group;
  Rng rng(5);
  pp.g = G.toy_element(17);
  Registry reg(pp, true);
  for (std::uint64_t vk = 0; vk < kP; ++vk) {
    for (std::uint64_t sk = 0; sk < kP; ++sk) {
      Registry fresh(pp, true);
      const bool expect = sk != 0 && (17 * sk) % kP == vk;
      ASSERT_EQ(fresh.certify_direct(G.toy_element(vk), G.scalar(sk)), expect) << vk << " " << sk;
      ASSERT_EQ(fresh.is_certified(G.toy_element(vk)), expect);
      reg.certify_direct(G.toy_element(vk), G.scalar(sk));
    }
  }
  // L and K: every stored key has a consistent sk.
  EXPECT_EQ(reg.size(), kP - 1);
  for (const auto& rec : reg.records()) {
    const auto& d = std::get<DirectEvidence>(rec.evidence);
    EXPECT_EQ(pp.g.pow(d.sk), rec.vk);
    EXPECT_EQ(reg.lookup_sk(rec.vk), d.sk);
  }
}

TEST(RegistryToy, IdempotentAndConflicting) {
  SasParams pp = toy_pp();
  const Group& G = pp.group;
  Rng rng(6);
  Registry reg(pp, true);
  EXPECT_TRUE(reg.certify_direct(G.toy_element(9), G.scalar(9)));
  EXPECT_TRUE(reg.certify_direct(G.toy_element(9), G.scalar(9)));
  EXPECT_EQ(reg.size(), 1u);
  SchnorrProof proof = prove_key(pp, G.scalar(9), rng);
  EXPECT_TRUE(verify_key_proof(pp, G.toy_element(9), proof));
  EXPECT_FALSE(reg.certify_pok(G.toy_element(9), proof));
  EXPECT_EQ(reg.record(G.toy_element(9))->certified_at, 1u);
}

TEST(RegistryToy, SkRetrievalGated) {
  SasParams pp = toy_pp();
  Registry reg(pp);
  reg.certify_direct(pp.group.toy_element(3), pp.group.scalar(3));
  try {
    reg.lookup_sk(pp.group.toy_element(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::sk_retrieval_disabled);
  }
}

class RegistryBoth : public ::testing::TestWithParam<Backend> {
 protected:
  SasParams pp() const { return GetParam() == Backend::toy ? toy_pp() : production_pp(); }
};

INSTANTIATE_TEST_SUITE_P(Backends, RegistryBoth, ::testing::Values(Backend::toy, Backend::production),
                         [](const auto& info) { return std::string(backend_name(info.param)); });

TEST_P(RegistryBoth, ProofOfKnowledge) {
  SasParams p = pp();
  const Group& G = p.group;
  Rng rng(7);
  SasKeyPair kp = sas_keygen(p, rng);
  SasKeyPair other = sas_keygen(p, rng);
  SchnorrProof proof = prove_key(p, kp.sk, rng);
  EXPECT_TRUE(verify_key_proof(p, kp.vk, proof));

  SchnorrProof bumped = proof;
  bumped.response = proof.response + G.scalar(1);
  EXPECT_FALSE(verify_key_proof(p, kp.vk, bumped));
  EXPECT_FALSE(verify_key_proof(p, other.vk, proof));

  Registry reg(p, true);
  EXPECT_TRUE(reg.certify_pok(kp.vk, proof));
  EXPECT_TRUE(reg.is_certified(kp.vk));
  EXPECT_EQ(reg.lookup_sk(kp.vk), std::nullopt);

  Bytes enc = encode_proof(proof);
  EXPECT_EQ(decode_proof(p, enc), proof);
  enc.pop_back();
  try {
    decode_proof(p, enc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::malformed_proof);
  }
}

TEST_P(RegistryBoth, FilePersistenceAndJson) {
  SasParams p = pp();
  Rng rng(8);
  auto file = temp_file(std::string(backend_name(GetParam())));
  std::vector<SasKeyPair> keys;
  {
    Registry reg(p, true);
    reg.attach(file);
    for (int i = 0; i < 3; ++i) {
      keys.push_back(sas_keygen(p, rng));
      if (i == 1) {
        reg.certify_pok(keys.back().vk, prove_key(p, keys.back().sk, rng));
      } else {
        reg.certify_direct(keys.back().vk, keys.back().sk);
      }
    }
  }
  Registry loaded(p, true);
  loaded.attach(file);
  ASSERT_EQ(loaded.size(), 3u);
  EXPECT_EQ(loaded.lookup_sk(keys[0].vk), keys[0].sk);
  EXPECT_EQ(loaded.lookup_sk(keys[1].vk), std::nullopt);
  EXPECT_TRUE(loaded.is_certified(keys[1].vk));
  SasKeyPair extra = sas_keygen(p, rng);
  loaded.certify_direct(extra.vk, extra.sk);

  Registry again(p, true);
  again.attach(file);
  EXPECT_EQ(again.size(), 4u);

  for (const auto& rec : again.records()) {
    EXPECT_EQ(decode_key_record(p, encode_key_record(rec)).vk, rec.vk);
  }

  Registry imported(p, true);
  EXPECT_EQ(imported.import_json(again.export_json()), 4u);
  EXPECT_EQ(imported.export_json(), again.export_json());
  EXPECT_EQ(imported.import_json(again.export_json()), 0u);

  Registry foreign(GetParam() == Backend::toy ? production_pp() : toy_pp());
  EXPECT_THROW(foreign.import_json(again.export_json()), Error);
  std::filesystem::remove(file);
}

TEST(Registry, ConcurrentReadersAndWriter) {
  SasParams pp = toy_pp();
  const Group& G = pp.group;
  Registry reg(pp, true);
  std::atomic<bool> bad{false};
  std::thread writer([&] {
    for (std::uint64_t v = 1; v < kP; ++v) reg.certify_direct(G.toy_element(v), G.scalar(v));
  });
  std::vector<std::thread> readers;
  for (int r = 0; r < 4; ++r) {
    readers.emplace_back([&] {
      for (int i = 0; i < 2000; ++i) {
        auto recs = reg.records();
        for (std::size_t k = 0; k < recs.size(); ++k) {
          if (recs[k].certified_at != k + 1) bad = true;
        }
      }
    });
  }
  writer.join();
  for (auto& t : readers) t.join();
  EXPECT_FALSE(bad);
  EXPECT_EQ(reg.size(), kP - 1);
}

}  // namespace
}  // namespace syncagg
