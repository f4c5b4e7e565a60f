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

// syncagg command-line tool.
//
// Exit codes: 0 success or accept, 1 reject, 2 bad flags or input, 3 I/O
// failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "syncagg/codec.hpp"
#include "syncagg/parallel.hpp"
#include "syncagg/registry.hpp"
#include "syncagg/sas.hpp"

namespace fs = std::filesystem;
using namespace syncagg;

namespace {

constexpr int kAccept = 0;
constexpr int kReject = 1;
constexpr int kBadInput = 2;
constexpr int kIoFailure = 3;

Bytes read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_failure, "cannot open " + path.string());
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::io_failure, "cannot read " + path.string());
  return data;
}

std::string read_text(const fs::path& path) {
  Bytes b = read_file(path);
  return std::string(b.begin(), b.end());
}

void write_file(const fs::path& path, ByteView data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  out.close();
  if (!out) throw Error(ErrorCode::io_failure, "cannot write " + path.string());
}

void write_text(const fs::path& path, const std::string& text) { write_file(path, as_bytes(text)); }

Rng make_rng(const std::optional<std::uint64_t>& seed) { return seed ? Rng(*seed) : Rng::from_entropy(); }

SasParams load_pp(const std::string& path) { return decode_params(read_file(path)); }

int verdict(bool ok) {
  std::cout << (ok ? "accept" : "reject") << "\n";
  return ok ? kAccept : kReject;
}

// Messages come either as literal strings or as files, never both.
struct MessageArgs {
  std::vector<std::string> literal;
  std::vector<std::string> files;

  void add(CLI::App* cmd, bool many) {
    if (many) {
      cmd->add_option("--message", literal, "Message text (repeatable, in signer order)");
      cmd->add_option("--message-file", files, "Message file (repeatable, in signer order)");
    } else {
      auto* a = cmd->add_option("--message", literal, "Message text")->expected(1);
      auto* b = cmd->add_option("--message-file", files, "Message file")->expected(1);
      a->excludes(b);
    }
  }

  std::vector<Bytes> load() const {
    if (!literal.empty() && !files.empty()) {
      throw Error(ErrorCode::invalid_parameter, "use either --message or --message-file");
    }
    std::vector<Bytes> out;
    for (const auto& s : literal) out.emplace_back(s.begin(), s.end());
    for (const auto& f : files) out.push_back(read_file(f));
    return out;
  }

  Bytes one() const {
    auto all = load();
    if (all.size() != 1) throw Error(ErrorCode::invalid_parameter, "exactly one message is required");
    return all[0];
  }
};

std::vector<GroupElement> load_vks(const SasParams& pp, const std::vector<std::string>& paths) {
  std::vector<GroupElement> out;
  for (const auto& p : paths) out.push_back(decode_verification_key(pp, read_file(p)));
  return out;
}

// ---------------------------------------------------------------- block demo

struct BatchEntry {
  GroupElement vk;
  Bytes message;
  SasSignature sig;
};

GroupElement entry_vk(const SasParams& pp, const nlohmann::json& e, const fs::path& base) {
  if (e.contains("vk")) return pp.group.deserialize_element(base64_decode(e.at("vk").get<std::string>()));
  fs::path p = e.at("vk_file").get<std::string>();
  if (p.is_relative()) p = base / p;
  return decode_verification_key(pp, read_file(p));
}

std::vector<BatchEntry> load_batch(const SasParams& pp, const fs::path& batch_path,
                                   const std::optional<std::string>& sign_with) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text(batch_path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::malformed_encoding, std::string("batch: ") + e.what());
  }
  const fs::path base = batch_path.parent_path();
  std::vector<BatchEntry> out;
  try {
    const bool has_t = j.contains("t");
    const std::uint64_t t = has_t ? j.at("t").get<std::uint64_t>() : 0;
    for (const auto& e : j.at("entries")) {
      BatchEntry entry;
      entry.message = base64_decode(e.at("message").get<std::string>());
      if (sign_with) {
        if (!has_t) throw Error(ErrorCode::invalid_parameter, "--sign-with needs the batch period \"t\"");
        const fs::path dir = *sign_with;
        const std::string name = e.at("key").get<std::string>();
        entry.vk = decode_verification_key(pp, read_file(dir / (name + ".vk")));
        Scalar sk = decode_secret_key(pp, read_file(dir / (name + ".sk")));
        entry.sig = sas_sign(pp, sk, t, entry.message);
      } else {
        entry.vk = entry_vk(pp, e, base);
        entry.sig = decode_signature(pp, base64_decode(e.at("signature").get<std::string>()));
      }
      if (has_t && entry.sig.t != t) throw Error(ErrorCode::mixed_periods);
      out.push_back(std::move(entry));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::malformed_encoding, std::string("batch: ") + e.what());
  }
  if (out.empty()) throw Error(ErrorCode::empty_input, "batch has no entries");
  return out;
}

int block_demo(const SasParams& pp, const std::string& batch, const std::string& out_path,
               const std::string& report_path, const std::optional<std::string>& sign_with) {
  std::vector<BatchEntry> entries = load_batch(pp, batch, sign_with);
  const std::size_t n = entries.size();
  std::vector<GroupElement> vks;
  std::vector<Bytes> msgs;
  std::vector<SasSignature> sigs;
  for (auto& e : entries) {
    vks.push_back(e.vk);
    msgs.push_back(e.message);
    sigs.push_back(e.sig);
  }
  for (const auto& s : sigs) {
    if (s.t != sigs[0].t) throw Error(ErrorCode::mixed_periods);
  }
  std::set<Bytes> distinct;
  for (const auto& vk : vks) {
    if (!distinct.insert(serialize(vk)).second) throw Error(ErrorCode::duplicate_key);
  }

  std::uint64_t before = pairing_count();
  auto ok = verify_batch(pp, vks, msgs, sigs);
  const std::uint64_t pairings_individual = pairing_count() - before;
  for (std::size_t i = 0; i < n; ++i) {
    if (!ok[i]) throw InvalidConstituent(i);
  }
  AggregateOptions trusted;
  trusted.skip_validation = true;  // validated above
  AggregateSignature agg = sas_aggregate(pp, vks, msgs, sigs, trusted);

  before = pairing_count();
  if (!sas_agg_verify(pp, vks, msgs, agg)) throw Error(ErrorCode::internal, "aggregate failed to verify");
  const std::uint64_t pairings_aggregate = pairing_count() - before;

  const Bytes agg_bytes = encode_aggregate(agg);
  std::size_t bytes_individual = 0;
  for (const auto& s : sigs) bytes_individual += encode_signature(s).size();
  write_file(out_path, agg_bytes);

  nlohmann::json report = {{"n", n},
                           {"t", agg.t},
                           {"bytes_individual", bytes_individual},
                           {"bytes_aggregate", agg_bytes.size()},
                           {"savings_ratio", static_cast<double>(bytes_individual) / agg_bytes.size()},
                           {"pairings_individual", pairings_individual},
                           {"pairings_aggregate", pairings_aggregate}};
  write_text(report_path, report.dump(2) + "\n");
  std::cout << report.dump() << "\n";
  return kAccept;
}

std::string default_backend() {
  const char* env = std::getenv("SYNCAGG_BACKEND");
  return env != nullptr ? env : "production";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synchronized aggregate signatures: keys, signing, aggregation and block demo"};
  app.require_subcommand(1);
  std::vector<std::pair<CLI::App*, std::function<int()>>> commands;
  auto command = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    return parent->add_subcommand(name, help);
  };

  // setup
  std::string backend = default_backend();
  std::uint16_t security = 128;
  std::uint64_t toy_prime = 101;
  std::uint64_t periods = 0;
  std::optional<std::uint64_t> seed;
  std::string out;
  {
    auto* c = command(&app, "setup", "Generate public parameters");
    c->add_option("--backend", backend, "production or toy (default: $SYNCAGG_BACKEND or production)");
    auto* sec = c->add_option("--security", security, "Security level in bits (production)");
    auto* toy = c->add_option("--toy-prime", toy_prime, "Prime group order (toy)");
    sec->excludes(toy);
    c->add_option("--periods", periods, "Period bound T")->required();
    c->add_option("--seed", seed, "Deterministic seed");
    c->add_option("--out", out, "Output pp file")->required();
    commands.emplace_back(c, [&] {
      auto b = parse_backend(backend);
      if (!b) throw Error(ErrorCode::invalid_parameter, "unknown backend " + backend);
      Rng rng = make_rng(seed);
      SasParams pp = sas_setup({*b, security, toy_prime}, periods, rng);
      write_file(out, encode_params(pp));
      std::cout << to_hex(pp.id()) << "\n";
      return kAccept;
    });
  }

  std::string pp_path, sk_path, vk_path, sig_path, agg_path, proof_path, registry_path, in_path;
  std::uint64_t period = 0;
  MessageArgs message;
  std::vector<std::string> vk_paths, sig_paths;
  bool parallel = false;

  // keygen
  {
    auto* c = command(&app, "keygen", "Generate a signing key pair");
    c->add_option("--pp", pp_path)->required();
    c->add_option("--seed", seed);
    c->add_option("--out-sk", sk_path)->required();
    c->add_option("--out-vk", vk_path)->required();
    commands.emplace_back(c, [&] {
      SasParams pp = load_pp(pp_path);
      Rng rng = make_rng(seed);
      SasKeyPair kp = sas_keygen(pp, rng);
      write_file(sk_path, encode_secret_key(kp.sk));
      write_file(vk_path, encode_verification_key(kp.vk));
      std::cout << base64_encode(serialize(kp.vk)) << "\n";
      return kAccept;
    });
  }

  // sign
  {
    auto* c = command(&app, "sign", "Sign a message for one period");
    c->add_option("--pp", pp_path)->required();
    c->add_option("--sk", sk_path)->required();
    c->add_option("--period", period)->required();
    message.add(c, false);
    c->add_option("--out", out)->required();
    commands.emplace_back(c, [&] {
      SasParams pp = load_pp(pp_path);
      Scalar sk = decode_secret_key(pp, read_file(sk_path));
      write_file(out, encode_signature(sas_sign(pp, sk, period, message.one())));
      return kAccept;
    });
  }

  // verify
  {
    auto* c = command(&app, "verify", "Verify one signature");
    c->add_option("--pp", pp_path)->required();
    c->add_option("--vk", vk_path)->required();
    message.add(c, false);
    c->add_option("--sig", sig_path)->required();
    commands.emplace_back(c, [&] {
      SasParams pp = load_pp(pp_path);
      GroupElement vk = decode_verification_key(pp, read_file(vk_path));
      return verdict(sas_verify(pp, vk, message.one(), decode_signature(pp, read_file(sig_path))));
    });
  }

  // aggregate
  {
    auto* c = command(&app, "aggregate", "Aggregate same-period signatures");
    c->add_option("--pp", pp_path)->required();
    c->add_option("--vk", vk_paths, "Verification key files, in signer order")->required();
    message.add(c, true);
    c->add_option("--sig", sig_paths, "Signature files, in signer order")->required();
    c->add_flag("--parallel", parallel, "Validate constituents in parallel");
    c->add_option("--out", out)->required();
    commands.emplace_back(c, [&] {
      SasParams pp = load_pp(pp_path);
      std::vector<SasSignature> sigs;
      for (const auto& p : sig_paths) sigs.push_back(decode_signature(pp, read_file(p)));
      AggregateOptions opt;
      opt.parallel_validation = parallel;
      AggregateSignature agg = sas_aggregate(pp, load_vks(pp, vk_paths), message.load(), sigs, opt);
      write_file(out, encode_aggregate(agg));
      return kAccept;
    });
  }

  // aggverify
  {
    auto* c = command(&app, "aggverify", "Verify an aggregate signature");
    c->add_option("--pp", pp_path)->required();
    c->add_option("--vk", vk_paths)->required();
    message.add(c, true);
    c->add_option("--agg", agg_path)->required();
    commands.emplace_back(c, [&] {
      SasParams pp = load_pp(pp_path);
      AggregateSignature agg = decode_aggregate(pp, read_file(agg_path));
      return verdict(sas_agg_verify(pp, load_vks(pp, vk_paths), message.load(), agg));
    });
  }

  // prove
  {
    auto* c = command(&app, "prove", "Create a proof of knowledge of a secret key");
    c->add_option("--pp", pp_path)->required();
    c->add_option("--sk", sk_path)->required();
    c->add_option("--seed", seed);
    c->add_option("--out", out)->required();
    commands.emplace_back(c, [&] {
      SasParams pp = load_pp(pp_path);
      Rng rng = make_rng(seed);
      write_file(out, encode_proof(prove_key(pp, decode_secret_key(pp, read_file(sk_path)), rng)));
      return kAccept;
    });
  }

  // register
  {
    auto* c = command(&app, "register", "Certify a verification key into a registry file");
    c->add_option("--pp", pp_path)->required();
    c->add_option("--registry", registry_path)->required();
    c->add_option("--vk", vk_path)->required();
    auto* sk = c->add_option("--sk", sk_path, "Certify directly with the secret key");
    auto* proof = c->add_option("--proof", proof_path, "Certify with a proof of knowledge");
    sk->excludes(proof);
    commands.emplace_back(c, [&] {
      if (sk_path.empty() == proof_path.empty()) {
        throw Error(ErrorCode::invalid_parameter, "exactly one of --sk or --proof is required");
      }
      SasParams pp = load_pp(pp_path);
      Registry reg(pp);
      reg.attach(registry_path);
      GroupElement vk = decode_verification_key(pp, read_file(vk_path));
      if (!sk_path.empty()) return verdict(reg.certify_direct(vk, decode_secret_key(pp, read_file(sk_path))));
      return verdict(reg.certify_pok(vk, decode_proof(pp, read_file(proof_path))));
    });
  }

  // registry export / import
  {
    auto* r = command(&app, "registry", "Registry maintenance");
    r->require_subcommand(1);
    auto* ex = r->add_subcommand("export", "Write the registry as JSON");
    ex->add_option("--pp", pp_path)->required();
    ex->add_option("--registry", registry_path)->required();
    ex->add_option("--out", out)->required();
    commands.emplace_back(ex, [&] {
      SasParams pp = load_pp(pp_path);
      Registry reg(pp);
      if (!fs::exists(registry_path)) throw Error(ErrorCode::io_failure, "no registry at " + registry_path);
      reg.attach(registry_path);
      write_text(out, reg.export_json() + "\n");
      std::cout << reg.size() << "\n";
      return kAccept;
    });
    auto* im = r->add_subcommand("import", "Certify every record of a JSON export");
    im->add_option("--pp", pp_path)->required();
    im->add_option("--registry", registry_path)->required();
    im->add_option("--in", in_path)->required();
    commands.emplace_back(im, [&] {
      SasParams pp = load_pp(pp_path);
      Registry reg(pp);
      reg.attach(registry_path);
      std::cout << reg.import_json(read_text(in_path)) << "\n";
      return kAccept;
    });
  }

  // block-demo
  std::string batch_path, report_path;
  std::optional<std::string> sign_with;
  {
    auto* c = command(&app, "block-demo", "Verify and aggregate one period's transaction signatures");
    c->add_option("--batch", batch_path, "Batch JSON")->required();
    c->add_option("--pp", pp_path)->required();
    c->add_option("--out", out, "Aggregate output file")->required();
    c->add_option("--report", report_path, "Report JSON")->required();
    c->add_option("--sign-with", sign_with, "Key directory holding NAME.sk / NAME.vk; sign entries first");
    commands.emplace_back(c, [&] { return block_demo(load_pp(pp_path), batch_path, out, report_path, sign_with); });
  }

  // JSON mirror
  {
    auto* c = command(&app, "to-json", "Convert a binary artifact to JSON");
    c->add_option("--pp", pp_path, "Public parameters (not needed for a pp file)");
    c->add_option("--in", in_path)->required();
    c->add_option("--out", out, "Output file (default stdout)");
    commands.emplace_back(c, [&] {
      std::optional<SasParams> pp;
      if (!pp_path.empty()) pp = load_pp(pp_path);
      std::string text = binary_to_json(pp ? &*pp : nullptr, read_file(in_path)) + "\n";
      if (out.empty()) {
        std::cout << text;
      } else {
        write_text(out, text);
      }
      return kAccept;
    });
    auto* f = command(&app, "from-json", "Convert a JSON artifact to binary");
    f->add_option("--pp", pp_path, "Public parameters (not needed for a pp file)");
    f->add_option("--in", in_path)->required();
    f->add_option("--out", out)->required();
    commands.emplace_back(f, [&] {
      std::optional<SasParams> pp;
      if (!pp_path.empty()) pp = load_pp(pp_path);
      write_file(out, json_to_binary(pp ? &*pp : nullptr, read_text(in_path)));
      return kAccept;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kBadInput;
  }

  try {
    for (auto& [cmd, run] : commands) {
      if (cmd->parsed()) return run();
    }
    return kBadInput;
  } catch (const Error& e) {
    const std::string name(error_code_name(e.code()));
    const std::string what = e.what();
    std::cerr << "syncagg: " << (what == name ? name : name + ": " + what) << "\n";
    return e.code() == ErrorCode::io_failure ? kIoFailure : kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "syncagg: " << e.what() << "\n";
    return kBadInput;
  }
}
