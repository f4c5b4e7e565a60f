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

#include "syncagg/crypto.hpp"

#include <openssl/evp.h>
#include <openssl/rand.h>

#include <memory>

#include "syncagg/error.hpp"

namespace syncagg {

namespace {

struct CtxDeleter {
  void operator()(EVP_MD_CTX* c) const { EVP_MD_CTX_free(c); }
  void operator()(EVP_CIPHER_CTX* c) const { EVP_CIPHER_CTX_free(c); }
};

[[noreturn]] void openssl_failure(const char* what) {
  throw Error(ErrorCode::internal, std::string("openssl: ") + what);
}

}  // namespace

Digest sha256(std::initializer_list<ByteView> parts) {
  std::unique_ptr<EVP_MD_CTX, CtxDeleter> ctx(EVP_MD_CTX_new());
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) openssl_failure("digest init");
  for (ByteView part : parts) {
    if (EVP_DigestUpdate(ctx.get(), part.data(), part.size()) != 1) openssl_failure("digest update");
  }
  Digest out{};
  unsigned int len = 0;
  if (EVP_DigestFinal_ex(ctx.get(), out.data(), &len) != 1) openssl_failure("digest final");
  return out;
}

Digest sha256(ByteView data) { return sha256({data}); }

Rng::Rng(ByteView seed) { key_ = sha256({as_bytes("syncagg/rng"), seed}); }

Rng::Rng(std::uint64_t seed) {
  Bytes s;
  append_be64(s, seed);
  key_ = sha256({as_bytes("syncagg/rng"), s});
}

Rng Rng::from_entropy() {
  std::array<std::uint8_t, 32> seed{};
  if (RAND_bytes(seed.data(), static_cast<int>(seed.size())) != 1) openssl_failure("RAND_bytes");
  return Rng(ByteView(seed));
}

Rng Rng::derive(std::uint64_t seed, std::uint64_t index) {
  Bytes s;
  append(s, as_bytes("derive"));
  append_be64(s, seed);
  append_be64(s, index);
  return Rng(ByteView(s));
}

void Rng::refill() {
  // IV = 32-bit block counter (zero) || 96-bit nonce carrying the refill index.
  std::array<std::uint8_t, 16> iv{};
  for (int i = 0; i < 8; ++i) iv[8 + i] = static_cast<std::uint8_t>(block_ >> (8 * i));
  ++block_;
  std::unique_ptr<EVP_CIPHER_CTX, CtxDeleter> ctx(EVP_CIPHER_CTX_new());
  if (!ctx || EVP_EncryptInit_ex(ctx.get(), EVP_chacha20(), nullptr, key_.data(), iv.data()) != 1) {
    openssl_failure("chacha20 init");
  }
  std::array<std::uint8_t, 1024> zeros{};
  int len = 0;
  if (EVP_EncryptUpdate(ctx.get(), buffer_.data(), &len, zeros.data(), static_cast<int>(zeros.size())) != 1) {
    openssl_failure("chacha20 update");
  }
  pos_ = 0;
}

void Rng::fill(std::span<std::uint8_t> out) {
  for (auto& b : out) {
    if (pos_ == buffer_.size()) refill();
    b = buffer_[pos_++];
  }
}

std::uint64_t Rng::next_u64() {
  std::array<std::uint8_t, 8> b{};
  fill(b);
  return read_be(b, 8);
}

std::uint64_t Rng::uniform(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::invalid_parameter, "uniform bound must be positive");
  // Largest multiple of bound that fits, to avoid modulo bias.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    std::uint64_t v = next_u64();
    if (v < limit) return v % bound;
  }
}

std::uint64_t Rng::uniform_range(std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw Error(ErrorCode::invalid_parameter, "empty range");
  if (lo == 0 && hi == UINT64_MAX) return next_u64();
  return lo + uniform(hi - lo + 1);
}

}  // namespace syncagg
