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

#include "syncagg/games.hpp"

#include <nlohmann/json.hpp>

namespace syncagg {

namespace {

Bytes be8(std::uint64_t v) {
  Bytes out;
  append_be64(out, v);
  return out;
}

Bytes concat(std::initializer_list<ByteView> parts) {
  Bytes out;
  for (ByteView p : parts) append(out, p);
  return out;
}

Bytes verdict_byte(bool v) { return Bytes{static_cast<std::uint8_t>(v ? 1 : 0)}; }

Bytes encode_forgery(const SasForgery& f) {
  Bytes out;
  for (std::size_t i = 0; i < f.vks.size(); ++i) {
    append(out, serialize(f.vks[i]));
    append_be32(out, static_cast<std::uint32_t>(i < f.msgs.size() ? f.msgs[i].size() : 0));
    if (i < f.msgs.size()) append(out, f.msgs[i]);
  }
  append(out, encode_aggregate(f.agg));
  return out;
}

// Independent stream for a sub-component, drawn from the parent.
Rng fork(Rng& rng) {
  std::array<std::uint8_t, 32> seed{};
  rng.fill(seed);
  return Rng(ByteView(seed));
}

// Counts distinct adversary H3 queries and same-period answer collisions.
class H3Accounting {
 public:
  void note(GameTranscript& tr, std::uint64_t t, const Scalar& answer) {
    ++tr.h3_queries;
    if (!answers_[t].insert(serialize(answer)).second) ++tr.h3_collisions;
  }

 private:
  std::map<std::uint64_t, std::set<Bytes>> answers_;
};

}  // namespace

std::string_view reason_name(Reason r) {
  switch (r) {
    case Reason::none: return "none";
    case Reason::no_forgery: return "no_forgery";
    case Reason::malformed_forgery: return "malformed_forgery";
    case Reason::forgery_invalid: return "forgery_invalid";
    case Reason::message_already_signed: return "message_already_signed";
    case Reason::uncertified_key: return "uncertified_key";
    case Reason::no_fresh_target_message: return "no_fresh_target_message";
    case Reason::h3_bound_exceeded: return "h3_bound_exceeded";
    case Reason::sign_at_target_wrong_index: return "sign_at_target_wrong_index";
    case Reason::target_period_mismatch: return "target_period_mismatch";
    case Reason::forged_hash_collision: return "forged_hash_collision";
    case Reason::missing_sk: return "missing_sk";
  }
  return "unknown";
}

// ---------------------------------------------------------------- transcript

void GameTranscript::record(std::string_view kind, ByteView input, ByteView output) {
  events.push_back(OracleEvent{std::string(kind), sha256(input), sha256(output), t_ctr});
}

std::string GameTranscript::to_jsonl() const {
  nlohmann::json header = {{"game", game},
                           {"seed", seed ? nlohmann::json(*seed) : nlohmann::json(nullptr)},
                           {"win", win},
                           {"reason", reason_name(reason)},
                           {"t_ctr", t_ctr},
                           {"signed", Q.size()},
                           {"certified", L.size()},
                           {"h3_queries", h3_queries},
                           {"h3_collisions", h3_collisions}};
  std::string out = header.dump() + "\n";
  for (const auto& e : events) {
    nlohmann::json line = {{"kind", e.kind}, {"input", to_hex(e.input)}, {"output", to_hex(e.output)}, {"t_ctr", e.t_ctr}};
    out += line.dump() + "\n";
  }
  return out;
}

std::vector<OracleEvent> parse_transcript_events(const std::string& jsonl) {
  std::vector<OracleEvent> out;
  std::size_t pos = 0;
  try {
    while (pos < jsonl.size()) {
      std::size_t end = jsonl.find('\n', pos);
      if (end == std::string::npos) end = jsonl.size();
      const std::string line = jsonl.substr(pos, end - pos);
      pos = end + 1;
      if (line.empty()) continue;
      nlohmann::json j = nlohmann::json::parse(line);
      if (!j.contains("kind")) continue;
      OracleEvent e;
      e.kind = j.at("kind").get<std::string>();
      Bytes in = from_hex(j.at("input").get<std::string>());
      Bytes outb = from_hex(j.at("output").get<std::string>());
      if (in.size() != 32 || outb.size() != 32) throw Error(ErrorCode::malformed_encoding, "bad digest length");
      std::copy(in.begin(), in.end(), e.input.begin());
      std::copy(outb.begin(), outb.end(), e.output.begin());
      e.t_ctr = j.at("t_ctr").get<std::uint64_t>();
      out.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::malformed_encoding, e.what());
  }
  return out;
}

// ---------------------------------------------------------------- MCL game

namespace {

class MclChallengerOracle final : public MclSignOracle {
 public:
  MclChallengerOracle(const MclParams& pp, const MclSecretKey& sk, Rng rng, MclGameResult& result)
      : pp_(pp), sk_(sk), rng_(std::move(rng)), result_(result) {}

  std::optional<MclSignature> sign(const Scalar& m) override {
    pp_.group.check(m);
    const Bytes mb = serialize(m);
    if (used_) {
      ++result_.rejected_queries;
      result_.transcript.record("sign_rejected", mb, {});
      return std::nullopt;
    }
    used_ = true;
    result_.transcript.Q.insert(mb);
    MclSignature sig = mcl_sign(pp_, sk_, m, rng_);
    result_.transcript.record("sign", mb, encode_mcl_signature(sig));
    return sig;
  }

 private:
  const MclParams& pp_;
  const MclSecretKey& sk_;
  Rng rng_;
  MclGameResult& result_;
  bool used_ = false;
};

}  // namespace

MclGameResult run_ot_euf_cma_mcl(MclAdversary& adversary, const GroupParams& params, Rng& rng,
                                 const MclKeyObserver& observer) {
  MclGameResult result;
  GameTranscript& tr = result.transcript;
  tr.game = "ot_euf_cma_mcl";
  MclParams pp = mcl_setup(params, rng);
  MclKeyPair kp = mcl_keygen(pp, rng);
  if (observer) observer(kp);
  MclChallengerOracle oracle(pp, kp.sk, fork(rng), result);
  Rng adversary_rng = fork(rng);

  result.forgery = adversary.attack(pp, kp.vk, oracle, adversary_rng);
  if (!result.forgery) {
    tr.reason = Reason::no_forgery;
    return result;
  }
  const MclForgery& f = *result.forgery;
  bool valid = false;
  try {
    valid = mcl_verify(pp, kp.vk, f.m, f.sig);
  } catch (const Error&) {
    tr.reason = Reason::malformed_forgery;
    tr.record("forgery", {}, verdict_byte(false));
    return result;
  }
  tr.record("forgery", concat({serialize(f.m), encode_mcl_signature(f.sig)}), verdict_byte(valid));
  if (!valid) {
    tr.reason = Reason::forgery_invalid;
  } else if (tr.Q.contains(serialize(f.m))) {
    tr.reason = Reason::message_already_signed;
  } else {
    tr.win = result.win = true;
  }
  return result;
}

MclGameResult run_ot_euf_cma_mcl(MclAdversary& adversary, const GroupParams& params, std::uint64_t seed,
                                 const MclKeyObserver& observer) {
  Rng rng(seed);
  MclGameResult r = run_ot_euf_cma_mcl(adversary, params, rng, observer);
  r.transcript.seed = seed;
  return r;
}

// ---------------------------------------------------------------- random oracles

RandomOracleSuite::RandomOracleSuite(Group group, Rng rng) : group_(std::move(group)), rng_(std::move(rng)) {}

GroupElement RandomOracleSuite::h1(std::uint64_t t) {
  auto it = t1_.find(t);
  if (it == t1_.end()) it = t1_.emplace(t, group_.exp_generator(group_.random_scalar(rng_))).first;
  return it->second;
}

GroupElement RandomOracleSuite::h2(std::uint64_t t) {
  auto it = t2_.find(t);
  if (it == t2_.end()) it = t2_.emplace(t, group_.random_nonidentity(rng_)).first;
  return it->second;
}

Scalar RandomOracleSuite::h3(std::uint64_t t, ByteView m) {
  auto key = std::make_pair(t, Bytes(m.begin(), m.end()));
  auto it = t3_.find(key);
  if (it == t3_.end()) it = t3_.emplace(std::move(key), group_.random_scalar(rng_)).first;
  return it->second;
}

bool RandomOracleSuite::has_h3(std::uint64_t t, ByteView m) const {
  return t3_.contains(std::make_pair(t, Bytes(m.begin(), m.end())));
}

// ---------------------------------------------------------------- SAS game

namespace {

class SasChallenger final : public SasGameOracles {
 public:
  SasChallenger(const SasParams& pp, const SasKeyPair& kp, Rng rng, GameTranscript& tr,
                std::optional<std::uint64_t> bound)
      : pp_(pp), kp_(kp), registry_(pp, true), ro_(pp.group, std::move(rng)), tr_(tr), bound_(bound) {}

  bool cert(const GroupElement& vk, const Scalar& sk) override {
    bool ok = false;
    try {
      ok = registry_.certify_direct(vk, sk);
    } catch (const Error&) {
      ok = false;
    }
    if (ok) tr_.L.insert(serialize(vk));
    tr_.record("cert", ok ? serialize(vk) : Bytes{}, verdict_byte(ok));
    return ok;
  }

  GroupElement h1(std::uint64_t t) override {
    GroupElement v = ro_.h1(t);
    tr_.record("h1", be8(t), serialize(v));
    return v;
  }

  GroupElement h2(std::uint64_t t) override {
    GroupElement v = ro_.h2(t);
    tr_.record("h2", be8(t), serialize(v));
    return v;
  }

  Scalar h3(std::uint64_t t, ByteView m) override {
    const bool fresh = !ro_.has_h3(t, m);
    Scalar v = ro_.h3(t, m);
    if (fresh) {
      h3_.note(tr_, t, v);
      if (bound_ && tr_.h3_queries > *bound_) bound_exceeded_ = true;
    }
    tr_.record("h3", concat({be8(t), m}), serialize(v));
    return v;
  }

  std::optional<SasSignature> sign(SignInstruction inst, ByteView m) override {
    if (!pp_.period_in_range(tr_.t_ctr)) {
      tr_.record("sign_bottom", m, {});
      return std::nullopt;
    }
    if (inst == SignInstruction::skip) {
      tr_.record("skip", {}, {});
      ++tr_.t_ctr;
      return std::nullopt;
    }
    tr_.Q.insert(Bytes(m.begin(), m.end()));
    SasSignature sig = sas_sign(pp_, ro_, kp_.sk, tr_.t_ctr, m);
    tr_.record("sign", m, encode_signature(sig));
    ++tr_.t_ctr;
    return sig;
  }

  std::uint64_t current_period() const override { return tr_.t_ctr; }

  RandomOracleSuite& suite() { return ro_; }
  const Registry& registry() const { return registry_; }
  bool bound_exceeded() const { return bound_exceeded_; }

 private:
  const SasParams& pp_;
  const SasKeyPair& kp_;
  Registry registry_;
  RandomOracleSuite ro_;
  GameTranscript& tr_;
  std::optional<std::uint64_t> bound_;
  H3Accounting h3_;
  bool bound_exceeded_ = false;
};

// Shared structural checks of the winning condition (second and third
// conjuncts). Returns the index j* or a failure reason.
std::variant<std::size_t, Reason> find_target(const SasForgery& f, const GroupElement& vk_star,
                                              const std::function<bool(const GroupElement&)>& certified,
                                              const std::set<Bytes>& Q) {
  for (const auto& vk : f.vks) {
    if (!(vk == vk_star) && !certified(vk)) return Reason::uncertified_key;
  }
  for (std::size_t j = 0; j < f.vks.size(); ++j) {
    if (f.vks[j] == vk_star && !Q.contains(f.msgs[j])) return j;
  }
  return Reason::no_fresh_target_message;
}

bool foreign_values(const SasParams& pp, const SasForgery& f) {
  try {
    pp.group.check(f.agg.E);
    for (const auto& vk : f.vks) pp.group.check(vk);
    return false;
  } catch (const Error&) {
    return true;
  }
}

}  // namespace

SasGameResult run_euf_cma_sas(SasForger& forger, std::uint64_t T, const GroupParams& params, Rng& rng,
                              const SasGameOptions& options) {
  SasGameResult result;
  GameTranscript& tr = result.transcript;
  tr.game = "euf_cma_sas";
  SasParams pp = sas_setup(params, T, rng);
  SasKeyPair kp = sas_keygen(pp, rng);
  if (options.observer) options.observer(kp);
  SasChallenger oracles(pp, kp, fork(rng), tr, options.h3_bound);
  Rng forger_rng = fork(rng);

  std::optional<SasForgery> forgery = forger.forge(pp, kp.vk, oracles, forger_rng);
  if (!forgery) {
    tr.reason = Reason::no_forgery;
    return result;
  }
  if (oracles.bound_exceeded()) {
    tr.reason = Reason::h3_bound_exceeded;
    return result;
  }
  const SasForgery& f = *forgery;
  if (foreign_values(pp, f) || f.vks.size() != f.msgs.size() || f.vks.empty()) {
    tr.reason = Reason::malformed_forgery;
    return result;
  }
  const bool valid = sas_agg_verify(pp, oracles.suite(), f.vks, f.msgs, f.agg);
  tr.record("forgery", encode_forgery(f), verdict_byte(valid));
  if (!valid) {
    tr.reason = Reason::forgery_invalid;
    return result;
  }
  auto target = find_target(
      f, kp.vk, [&](const GroupElement& vk) { return oracles.registry().is_certified(vk); }, tr.Q);
  if (const Reason* r = std::get_if<Reason>(&target)) {
    tr.reason = *r;
    return result;
  }
  tr.win = result.win = true;
  return result;
}

SasGameResult run_euf_cma_sas(SasForger& forger, std::uint64_t T, const GroupParams& params, std::uint64_t seed,
                              const SasGameOptions& options) {
  Rng rng(seed);
  SasGameResult r = run_euf_cma_sas(forger, T, params, rng, options);
  r.transcript.seed = seed;
  return r;
}

// ---------------------------------------------------------------- reduction B

namespace {

struct Abort {
  Reason reason;
};

}  // namespace

class ReductionB::Simulator final : public SasGameOracles {
 public:
  Simulator(ReductionB& b, const SasParams& pp, const GroupElement& X, const MclSignature& sigma, const Scalar& m_mcl,
            Rng rng)
      : b_(b), pp_(pp), X_(X), sigma_(sigma), m_mcl_(m_mcl), registry_(pp, true), rng_(std::move(rng)), view_(*this) {}

  // Hash view for B's own computations: never counted against the bound.
  class View final : public HashSuite {
   public:
    explicit View(Simulator& s) : s_(s) {}
    GroupElement h1(std::uint64_t t) override { return s_.h1_table(t); }
    GroupElement h2(std::uint64_t t) override { return s_.h2_table(t); }
    Scalar h3(std::uint64_t t, ByteView m) override { return s_.h3_table(t, m, false); }

   private:
    Simulator& s_;
  };

  bool cert(const GroupElement& vk, const Scalar& sk) override {
    bool ok = false;
    try {
      ok = registry_.certify_direct(vk, sk);
    } catch (const Error&) {
      ok = false;
    }
    if (ok) tr().L.insert(serialize(vk));
    tr().record("cert", ok ? serialize(vk) : Bytes{}, verdict_byte(ok));
    return ok;
  }

  GroupElement h1(std::uint64_t t) override {
    GroupElement v = h1_table(t);
    tr().record("h1", be8(t), serialize(v));
    return v;
  }

  GroupElement h2(std::uint64_t t) override {
    GroupElement v = h2_table(t);
    tr().record("h2", be8(t), serialize(v));
    return v;
  }

  Scalar h3(std::uint64_t t, ByteView m) override {
    Scalar v = h3_table(t, m, true);
    tr().record("h3", concat({be8(t), m}), serialize(v));
    return v;
  }

  std::optional<SasSignature> sign(SignInstruction inst, ByteView m) override {
    GameTranscript& log = tr();
    if (!pp_.period_in_range(log.t_ctr)) {
      log.record("sign_bottom", m, {});
      return std::nullopt;
    }
    if (inst == SignInstruction::skip) {
      log.record("skip", {}, {});
      ++log.t_ctr;
      return std::nullopt;
    }
    const std::uint64_t t = log.t_ctr;
    h1_table(t);
    h2_table(t);
    const Scalar mp = h3_table(t, m, false);
    const std::uint64_t j = b_.tables_.h3_index.at({t, Bytes(m.begin(), m.end())});
    SasSignature sig;
    sig.t = t;
    if (t != b_.stats_.t_prime) {
      // E = X^(r1) X^(r2 m')
      const Scalar r1 = *b_.tables_.T1.at(t).r;
      const Scalar r2 = *b_.tables_.T2.at(t).r;
      sig.E = X_.pow(r1 + r2 * mp);
    } else if (j == b_.stats_.k_prime) {
      sig.E = sigma_.E;
    } else {
      throw Abort{Reason::sign_at_target_wrong_index};
    }
    log.Q.insert(Bytes(m.begin(), m.end()));
    log.record("sign", m, encode_signature(sig));
    ++log.t_ctr;
    ++b_.stats_.signatures_served;
    if (!sas_verify(pp_, view_, X_, m, sig)) ++b_.stats_.invalid_simulated_signatures;
    return sig;
  }

  std::uint64_t current_period() const override { return b_.transcript_.t_ctr; }

  GroupElement h1_table(std::uint64_t t) {
    auto& T1 = b_.tables_.T1;
    auto it = T1.find(t);
    if (it != T1.end()) return it->second.value;
    OracleTables::Entry e;
    if (t != b_.stats_.t_prime) {
      e.r = pp_.group.random_scalar(rng_);
      e.value = pp_.g.pow(*e.r);
    } else {
      // A D^w
      e.value = sigma_.A * sigma_.D.pow(sigma_.w);
    }
    return T1.emplace(t, e).first->second.value;
  }

  GroupElement h2_table(std::uint64_t t) {
    auto& T2 = b_.tables_.T2;
    auto it = T2.find(t);
    if (it != T2.end()) return it->second.value;
    OracleTables::Entry e;
    if (t != b_.stats_.t_prime) {
      e.r = pp_.group.random_nonzero_scalar(rng_);
      e.value = pp_.g.pow(*e.r);
    } else {
      e.value = sigma_.B;
    }
    return T2.emplace(t, e).first->second.value;
  }

  Scalar h3_table(std::uint64_t t, ByteView m, bool from_forger) {
    auto key = std::make_pair(t, Bytes(m.begin(), m.end()));
    auto& T3 = b_.tables_.T3;
    if (auto it = T3.find(key); it != T3.end()) return it->second;
    if (from_forger && tr().h3_queries + 1 > b_.q_h3_) throw Abort{Reason::h3_bound_exceeded};
    const std::uint64_t ordinal = ++ordinal_;
    Scalar v = (t == b_.stats_.t_prime && ordinal == b_.stats_.k_prime) ? m_mcl_ : pp_.group.random_scalar(rng_);
    if (from_forger) h3_.note(tr(), t, v);
    b_.tables_.h3_index.emplace(key, ordinal);
    T3.emplace(std::move(key), v);
    return v;
  }

  const Registry& registry() const { return registry_; }
  HashSuite& view() { return view_; }

 private:
  GameTranscript& tr() { return b_.transcript_; }

  ReductionB& b_;
  const SasParams& pp_;
  const GroupElement& X_;
  const MclSignature& sigma_;
  const Scalar& m_mcl_;
  Registry registry_;
  Rng rng_;
  View view_;
  H3Accounting h3_;
  std::uint64_t ordinal_ = 0;
};

ReductionB::ReductionB(SasForger& forger, std::uint64_t T, std::uint64_t q_h3) : forger_(forger), T_(T), q_h3_(q_h3) {
  if (T == 0 || q_h3 == 0) throw Error(ErrorCode::invalid_parameter, "T and q_H3 must be positive");
}

std::optional<MclForgery> ReductionB::attack(const MclParams& mpp, const MclVerificationKey& vk,
                                             MclSignOracle& oracle, Rng& rng) {
  stats_ = ReductionStats{};
  tables_ = OracleTables{};
  transcript_ = GameTranscript{};
  transcript_.game = "reduction_b";
  const Group& G = mpp.group;

  // Initial setup
  SasParams pp{G, vk.g, T_, {}};
  const GroupElement X = vk.X;
  stats_.t_prime = rng.uniform_range(1, T_);
  stats_.k_prime = rng.uniform_range(1, q_h3_);
  const Scalar m_mcl = G.random_scalar(rng);
  std::optional<MclSignature> sigma = oracle.sign(m_mcl);
  if (!sigma) throw Error(ErrorCode::internal, "the MCL challenger refused the only signing query");

  Simulator sim(*this, pp, X, *sigma, m_mcl, fork(rng));
  Rng forger_rng = fork(rng);
  auto abort = [&](Reason r) -> std::optional<MclForgery> {
    stats_.abort = r;
    transcript_.reason = r;
    return std::nullopt;
  };

  std::optional<SasForgery> forgery;
  try {
    forgery = forger_.forge(pp, X, sim, forger_rng);
  } catch (const Abort& a) {
    return abort(a.reason);
  }
  if (!forgery) return abort(Reason::no_forgery);
  const SasForgery& f = *forgery;
  HashSuite& H = sim.view();

  // Output procedure
  if (foreign_values(pp, f) || f.vks.size() != f.msgs.size() || f.vks.empty()) return abort(Reason::malformed_forgery);
  const bool valid = sas_agg_verify(pp, H, f.vks, f.msgs, f.agg);  // step 1
  transcript_.record("forgery", encode_forgery(f), verdict_byte(valid));
  if (!valid) return abort(Reason::forgery_invalid);
  auto target = find_target(  // steps 2-4
      f, X, [&](const GroupElement& k) { return sim.registry().is_certified(k); }, transcript_.Q);
  if (const Reason* r = std::get_if<Reason>(&target)) return abort(*r);
  const std::size_t js = std::get<std::size_t>(target);

  const std::uint64_t ts = f.agg.t;  // step 5
  if (ts != stats_.t_prime) return abort(Reason::target_period_mismatch);
  const Scalar mps = H.h3(ts, f.msgs[js]);  // step 7
  if (mps == m_mcl) return abort(Reason::forged_hash_collision);

  Scalar sum_x = G.scalar(0), sum_xm = G.scalar(0);  // steps 9-10
  for (std::size_t i = 0; i < f.vks.size(); ++i) {
    if (i == js) continue;
    std::optional<Scalar> xi = sim.registry().lookup_sk(f.vks[i]);
    if (!xi) return abort(Reason::missing_sk);
    sum_x += *xi;
    sum_xm += *xi * H.h3(ts, f.msgs[i]);
  }
  const GroupElement Fp = H.h1(ts), Bp = H.h2(ts);
  const GroupElement bases[2] = {Fp, Bp};
  const Scalar exps[2] = {sum_x, sum_xm};
  const GroupElement Ep = f.agg.E * multi_exp(bases, exps).inverse();

  MclSignature out = *sigma;  // step 11: (w, A, B', C, D, E')
  out.B = Bp;
  out.E = Ep;
  return MclForgery{mps, out};
}

ReductionTrial run_reduction_trial(SasForger& forger, std::uint64_t T, std::uint64_t q_h3, const GroupParams& params,
                                   Rng& rng, const MclKeyObserver& observer) {
  ReductionB b(forger, T, q_h3);
  ReductionTrial trial;
  trial.mcl = run_ot_euf_cma_mcl(b, params, rng, observer);
  trial.stats = b.stats();
  return trial;
}

// ---------------------------------------------------------------- cooperative forger

CooperativeForger::CooperativeForger(std::uint64_t T, std::uint64_t q_h3) : T_(T), q_(q_h3) {
  if (T == 0 || q_h3 < 2) throw Error(ErrorCode::invalid_parameter, "the cooperative forger needs T >= 1, q >= 2");
}

std::optional<SasForgery> CooperativeForger::forge(const SasParams& pp, const GroupElement& vk_star,
                                                   SasGameOracles& o, Rng& rng) {
  if (!secret_) throw Error(ErrorCode::internal, "cooperative forger has no challenger secret");
  const Group& G = pp.group;
  const std::uint64_t ts = rng.uniform_range(1, T_);

  std::set<Bytes> seen;
  std::vector<Bytes> msgs;
  while (msgs.size() < q_) {
    Bytes m(16);
    rng.fill(m);
    if (seen.insert(m).second) msgs.push_back(std::move(m));
  }
  std::vector<Scalar> mps;
  for (const auto& m : msgs) mps.push_back(o.h3(ts, m));

  const std::size_t k = rng.uniform(q_);
  std::size_t k2 = rng.uniform(q_ - 1);
  if (k2 >= k) ++k2;

  while (o.current_period() < ts) o.sign(SignInstruction::skip, {});
  if (!o.sign(SignInstruction::sign, msgs[k])) return std::nullopt;

  Scalar x1;
  GroupElement vk1;
  do {
    x1 = G.random_nonzero_scalar(rng);
    vk1 = pp.g.pow(x1);
  } while (vk1 == vk_star);
  if (!o.cert(vk1, x1)) return std::nullopt;

  const GroupElement h1 = o.h1(ts), h2 = o.h2(ts);
  const GroupElement bases[2] = {h1, h2};
  const Scalar e_star[2] = {*secret_, mps[k2] * *secret_};
  const Scalar e_own[2] = {x1, mps[k] * x1};
  SasForgery f;
  f.vks = {vk_star, vk1};
  f.msgs = {msgs[k2], msgs[k]};
  f.agg = AggregateSignature{multi_exp(bases, e_star) * multi_exp(bases, e_own), ts};
  return f;
}

// ---------------------------------------------------------------- 1-MSDH-2

Msdh2Instance msdh2_generate(const Group& group, Rng& rng) {
  Msdh2Instance in{group, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  in.x = group.random_nonzero_scalar(rng);
  in.a = group.random_nonzero_scalar(rng);
  in.b = group.random_nonzero_scalar(rng);
  in.g = group.random_nonidentity(rng);
  in.gx = in.g.pow(in.x);
  in.gx2 = in.gx.pow(in.x);
  in.gb = in.g.pow(in.b);
  in.gbx = in.gb.pow(in.x);
  in.gbx2 = in.gbx.pow(in.x);
  in.ga = in.g.pow(in.a);
  in.gabx = in.ga.pow(in.b * in.x);
  return in;
}

bool msdh2_consistent(const Msdh2Instance& in) {
  const Scalar &x = in.x, &a = in.a, &b = in.b;
  if (x.is_zero() || a.is_zero() || b.is_zero() || in.g.is_identity()) return false;
  return in.gx == in.g.pow(x) && in.gx2 == in.g.pow(x * x) && in.gb == in.g.pow(b) && in.gbx == in.g.pow(b * x) &&
         in.gbx2 == in.g.pow(b * x * x) && in.ga == in.g.pow(a) && in.gabx == in.g.pow(a * b * x);
}

bool msdh2_check(const Msdh2Instance& in, const Msdh2Solution& s) {
  const Group& G = in.group;
  for (const Scalar* v : {&s.w, &s.p0, &s.p1}) G.check(*v);
  G.check(s.U);
  G.check(s.V);
  if (s.w.is_zero()) return false;
  if (s.p0.is_zero() && s.p1.is_zero()) return false;
  if ((s.p0 - s.p1 * s.w).is_zero()) return false;  // P(-w) = 0
  const GroupElement h = s.U.pow(in.x + s.w);
  if (h.is_identity()) return false;
  const Scalar xP = in.x * (s.p0 + s.p1 * in.x);
  return s.V.pow(xP) == h.pow(in.a);
}

Msdh2Solution msdh2_forge(const Msdh2Instance& in, const Scalar& h_exp, const Scalar& w, const Scalar& p0,
                          const Scalar& p1) {
  const GroupElement h = in.g.pow(h_exp);
  const Scalar inv_xw = (in.x + w).inverse();
  const Scalar inv_xP = (in.x * (p0 + p1 * in.x)).inverse();
  return Msdh2Solution{w, p0, p1, h.pow(inv_xw), h.pow(in.a * inv_xP)};
}

Bytes encode_polynomial(const Scalar& p0, const Scalar& p1) {
  Bytes out{static_cast<std::uint8_t>(p1.is_zero() ? 1 : 2)};
  append(out, serialize(p0));
  if (!p1.is_zero()) append(out, serialize(p1));
  return out;
}

std::pair<Scalar, Scalar> decode_polynomial(const Group& group, ByteView bytes) {
  try {
    ByteReader r(bytes);
    const std::uint8_t n = r.u8();
    if (n != 1 && n != 2) throw Error(ErrorCode::malformed_polynomial, "degree must be at most 1");
    Scalar p0 = group.deserialize_scalar(r.take(group.scalar_size()));
    Scalar p1 = group.scalar(0);
    if (n == 2) {
      p1 = group.deserialize_scalar(r.take(group.scalar_size()));
      if (p1.is_zero()) throw Error(ErrorCode::malformed_polynomial, "leading coefficient is zero");
    }
    r.expect_done();
    return {p0, p1};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::malformed_polynomial) throw;
    throw Error(ErrorCode::malformed_polynomial, e.what());
  }
}

}  // namespace syncagg
