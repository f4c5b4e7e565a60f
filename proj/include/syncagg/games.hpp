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

// Executable security games.
//
//   run_ot_euf_cma_mcl  one-time EUF-CMA challenger for MCL
//   run_euf_cma_sas     EUF-CMA challenger for the aggregate scheme in the
//                       certified-key model, with random oracles H1..H3
//   ReductionB          turns an aggregate-scheme forger into a one-time MCL
//                       forger by programming the oracles at a guessed
//                       period t' and H3 query index k'
//   msdh2_*             1-MSDH-2 instances and a trapdoor solution checker
//
// Games are single threaded; independent instances may run concurrently.

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "syncagg/mcl.hpp"
#include "syncagg/registry.hpp"
#include "syncagg/sas.hpp"

namespace syncagg {

enum class Reason : std::uint8_t {
  none,
  no_forgery,
  malformed_forgery,
  forgery_invalid,             // the verification algorithm rejected
  message_already_signed,      // MCL game: m* in Q
  uncertified_key,             // a foreign key was never certified
  no_fresh_target_message,     // no entry with vk* and a fresh message
  h3_bound_exceeded,           // more distinct H3 queries than declared
  sign_at_target_wrong_index,  // B: signing at t' on a message other than the k'-th H3 query
  target_period_mismatch,      // B: t* != t'
  forged_hash_collision,       // B: H3(t*, m*) = m_MCL
  missing_sk,                  // B: a certified key without a known sk
};

std::string_view reason_name(Reason r);

struct OracleEvent {
  std::string kind;
  Digest input{};
  Digest output{};
  std::uint64_t t_ctr = 0;
};

struct GameTranscript {
  std::string game;
  std::optional<std::uint64_t> seed;  // set by the seeded entry points
  std::set<Bytes> Q;                  // signed messages (MCL: serialized scalars)
  std::set<Bytes> L;                  // certified keys, serialized
  std::uint64_t t_ctr = 1;
  bool win = false;
  Reason reason = Reason::none;
  std::uint64_t h3_queries = 0;     // distinct adversary queries
  std::uint64_t h3_collisions = 0;  // distinct same-period queries with equal answers
  std::vector<OracleEvent> events;

  void record(std::string_view kind, ByteView input, ByteView output);
  // One JSON object per line: a header line with game, seed, win and reason,
  // then one line per oracle event with hex SHA-256 hashes of its input and
  // output.
  std::string to_jsonl() const;
};

// Inverse of GameTranscript::to_jsonl for the event lines.
std::vector<OracleEvent> parse_transcript_events(const std::string& jsonl);

// ---------------------------------------------------------------- MCL game

class MclSignOracle {
 public:
  virtual ~MclSignOracle() = default;
  // Answers the first query only; later ones return nullopt.
  virtual std::optional<MclSignature> sign(const Scalar& m) = 0;
};

struct MclForgery {
  Scalar m;
  MclSignature sig;
};

class MclAdversary {
 public:
  virtual ~MclAdversary() = default;
  virtual std::optional<MclForgery> attack(const MclParams& pp, const MclVerificationKey& vk, MclSignOracle& oracle,
                                           Rng& rng) = 0;
};

struct MclGameResult {
  bool win = false;
  std::optional<MclForgery> forgery;
  std::size_t rejected_queries = 0;
  GameTranscript transcript;
};

// White-box hook: sees the challenger's key pair right after key generation.
using MclKeyObserver = std::function<void(const MclKeyPair&)>;

MclGameResult run_ot_euf_cma_mcl(MclAdversary& adversary, const GroupParams& params, Rng& rng,
                                 const MclKeyObserver& observer = {});
MclGameResult run_ot_euf_cma_mcl(MclAdversary& adversary, const GroupParams& params, std::uint64_t seed,
                                 const MclKeyObserver& observer = {});

// ---------------------------------------------------------------- SAS game

enum class SignInstruction { skip, sign };

class SasGameOracles {
 public:
  virtual ~SasGameOracles() = default;
  virtual bool cert(const GroupElement& vk, const Scalar& sk) = 0;
  virtual GroupElement h1(std::uint64_t t) = 0;
  virtual GroupElement h2(std::uint64_t t) = 0;
  virtual Scalar h3(std::uint64_t t, ByteView m) = 0;
  // Signs under vk* at the current period and advances it; skip only
  // advances. Returns nullopt for skip and once the period counter has
  // passed T.
  virtual std::optional<SasSignature> sign(SignInstruction inst, ByteView m) = 0;
  virtual std::uint64_t current_period() const = 0;
};

struct SasForgery {
  std::vector<GroupElement> vks;
  std::vector<Bytes> msgs;
  AggregateSignature agg;
};

class SasForger {
 public:
  virtual ~SasForger() = default;
  virtual std::optional<SasForgery> forge(const SasParams& pp, const GroupElement& vk_star, SasGameOracles& oracles,
                                          Rng& rng) = 0;
};

struct SasGameOptions {
  // Declared bound on distinct H3 queries; exceeding it loses the game.
  std::optional<std::uint64_t> h3_bound;
  // White-box hook on the challenger key pair.
  std::function<void(const SasKeyPair&)> observer;
};

struct SasGameResult {
  bool win = false;
  GameTranscript transcript;
};

SasGameResult run_euf_cma_sas(SasForger& forger, std::uint64_t T, const GroupParams& params, Rng& rng,
                              const SasGameOptions& options = {});
SasGameResult run_euf_cma_sas(SasForger& forger, std::uint64_t T, const GroupParams& params, std::uint64_t seed,
                              const SasGameOptions& options = {});

// Lazily sampled random oracles: H1 uniform in G, H2 uniform in G*, H3
// uniform in Z_p. Answers are fixed once drawn.
class RandomOracleSuite final : public HashSuite {
 public:
  RandomOracleSuite(Group group, Rng rng);
  GroupElement h1(std::uint64_t t) override;
  GroupElement h2(std::uint64_t t) override;
  Scalar h3(std::uint64_t t, ByteView m) override;
  bool has_h3(std::uint64_t t, ByteView m) const;

 private:
  Group group_;
  Rng rng_;
  std::map<std::uint64_t, GroupElement> t1_, t2_;
  std::map<std::pair<std::uint64_t, Bytes>, Scalar> t3_;
};

// ---------------------------------------------------------------- reduction

// Programmable oracle state of the reduction. r1/r2 are empty at t'.
struct OracleTables {
  struct Entry {
    std::optional<Scalar> r;
    GroupElement value;
  };
  std::map<std::uint64_t, Entry> T1, T2;
  std::map<std::pair<std::uint64_t, Bytes>, Scalar> T3;
  std::map<std::pair<std::uint64_t, Bytes>, std::uint64_t> h3_index;  // ordinal from 1
};

struct ReductionStats {
  Reason abort = Reason::none;  // none means B produced an MCL forgery
  std::uint64_t t_prime = 0;
  std::uint64_t k_prime = 0;
  std::size_t signatures_served = 0;
  // Served signatures that failed sas_verify under B's oracles; always 0
  // for a correct simulation.
  std::size_t invalid_simulated_signatures = 0;
};

// The reduction itself, as an adversary against the MCL game. It runs the
// wrapped forger once per attack() call.
class ReductionB final : public MclAdversary {
 public:
  ReductionB(SasForger& forger, std::uint64_t T, std::uint64_t q_h3);

  std::optional<MclForgery> attack(const MclParams& pp, const MclVerificationKey& vk, MclSignOracle& oracle,
                                   Rng& rng) override;

  const ReductionStats& stats() const { return stats_; }
  const OracleTables& tables() const { return tables_; }
  const GameTranscript& transcript() const { return transcript_; }

 private:
  class Simulator;

  SasForger& forger_;
  std::uint64_t T_;
  std::uint64_t q_h3_;
  ReductionStats stats_;
  OracleTables tables_;
  GameTranscript transcript_;
};

struct ReductionTrial {
  ReductionStats stats;
  MclGameResult mcl;
  // B did not abort and its output won the MCL game.
  bool success() const { return stats.abort == Reason::none && mcl.win; }
};

// One end-to-end run: the real MCL challenger plays against B, which plays
// the forger. observer receives the MCL key pair (white-box forgers).
ReductionTrial run_reduction_trial(SasForger& forger, std::uint64_t T, std::uint64_t q_h3, const GroupParams& params,
                                   Rng& rng, const MclKeyObserver& observer = {});

// White-box forger that wins the aggregate-scheme game with probability 1.
// It needs the challenger secret, delivered through set_secret() from a
// game observer. Strategy: pick t* in [T], query H3 at t* on q distinct
// random messages, skip to t*, obtain a signature on the k-th of them
// (k uniform), certify one key of its own and output an aggregate over
// (vk*, m_k2) and (own key, m_k) for a uniform k2 != k. Requires q >= 2.
class CooperativeForger final : public SasForger {
 public:
  CooperativeForger(std::uint64_t T, std::uint64_t q_h3);
  void set_secret(const Scalar& sk) { secret_ = sk; }

  std::optional<SasForgery> forge(const SasParams& pp, const GroupElement& vk_star, SasGameOracles& oracles,
                                  Rng& rng) override;

 private:
  std::uint64_t T_, q_;
  std::optional<Scalar> secret_;
};

// ---------------------------------------------------------------- 1-MSDH-2

struct Msdh2Instance {
  Group group;
  // g, g^x, g^(x^2), g^b, g^(bx), g^(bx^2), g^a, g^(abx)
  GroupElement g, gx, gx2, gb, gbx, gbx2, ga, gabx;
  // Trapdoor, kept by the generator.
  Scalar x, a, b;
};

// P(X) = p0 + p1 X
struct Msdh2Solution {
  Scalar w;
  Scalar p0, p1;
  GroupElement U, V;  // claimed h^(1 / (x + w)) and h^(a / (x P(x)))
};

Msdh2Instance msdh2_generate(const Group& group, Rng& rng);
// All eight elements agree with the trapdoor.
bool msdh2_consistent(const Msdh2Instance& inst);
// Rejects w = 0, P = 0 and P(-w) = 0; otherwise h = U^(x + w) and accepts iff
// h != 1 and V^(x P(x)) = h^a.
bool msdh2_check(const Msdh2Instance& inst, const Msdh2Solution& sol);
// Trapdoor construction of a valid answer for h = g^h_exp. Throws
// non_invertible_scalar if x + w = 0 or x P(x) = 0.
Msdh2Solution msdh2_forge(const Msdh2Instance& inst, const Scalar& h_exp, const Scalar& w, const Scalar& p0,
                          const Scalar& p1);

// count (1 byte, 1 or 2) || coefficients from p0 upwards; decoding throws
// malformed_polynomial.
Bytes encode_polynomial(const Scalar& p0, const Scalar& p1);
std::pair<Scalar, Scalar> decode_polynomial(const Group& group, ByteView bytes);

}  // namespace syncagg
