// Copyright 2026 The ppbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ppbench/digest.hpp"

#include <openssl/crypto.h>
#include <openssl/evp.h>
#include <openssl/hmac.h>

#include <memory>

#include "ppbench/errors.hpp"

namespace ppbench {
namespace {

struct MdCtxDeleter {
  void operator()(EVP_MD_CTX* ctx) const { EVP_MD_CTX_free(ctx); }
};
using MdCtx = std::unique_ptr<EVP_MD_CTX, MdCtxDeleter>;

[[noreturn]] void Fail(const char* what) {
  throw Error(ErrorCode::kIoError, std::string("openssl: ") + what);
}

}  // namespace

Digest256 Sha256(std::span<const std::uint8_t> data) {
  Digest256 out;
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(),
                 nullptr) != 1 ||
      len != out.size()) {
    Fail("sha256");
  }
  return out;
}

Digest256 HmacSha256(std::span<const std::uint8_t> key,
                     std::span<const std::uint8_t> data) {
  Digest256 out;
  unsigned int len = 0;
  if (HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()),
           data.data(), data.size(), out.data(), &len) == nullptr ||
      len != out.size()) {
    Fail("hmac-sha256");
  }
  return out;
}

Bytes Shake256(std::span<const std::uint8_t> data, std::size_t out_len) {
  MdCtx ctx(EVP_MD_CTX_new());
  if (!ctx) Fail("EVP_MD_CTX_new");
  Bytes out(out_len);
  if (EVP_DigestInit_ex(ctx.get(), EVP_shake256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinalXOF(ctx.get(), out.data(), out.size()) != 1) {
    Fail("shake256");
  }
  return out;
}

bool ConstantTimeEqual(std::span<const std::uint8_t> a,
                       std::span<const std::uint8_t> b) {
  if (a.size() != b.size()) return false;
  return CRYPTO_memcmp(a.data(), b.data(), a.size()) == 0;
}

}  // namespace ppbench
