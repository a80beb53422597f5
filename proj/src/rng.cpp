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

#include "ppbench/rng.hpp"

#include <sodium.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ppbench/bytes.hpp"
#include "ppbench/errors.hpp"

namespace ppbench {
namespace {

void EnsureSodium() {
  static const bool ready = [] { return sodium_init() >= 0; }();
  if (!ready) throw std::runtime_error("libsodium initialisation failed");
}

}  // namespace

Drbg::Drbg(const Seed& seed) : key_(seed) { EnsureSodium(); }

Drbg Drbg::FromOs() {
  EnsureSodium();
  Seed seed;
  randombytes_buf(seed.data(), seed.size());
  return Drbg(seed);
}

Drbg Drbg::FromLabel(std::uint64_t seed, std::string_view label) {
  EnsureSodium();
  std::vector<std::uint8_t> input(label.begin(), label.end());
  for (int i = 0; i < 8; ++i) {
    input.push_back(static_cast<std::uint8_t>(seed >> (8 * i)));
  }
  Seed out;
  crypto_hash_sha256(out.data(), input.data(), input.size());
  return Drbg(out);
}

void Drbg::Refill() {
  static const std::array<std::uint8_t, 64> kZero{};
  static const std::array<std::uint8_t, crypto_stream_chacha20_NONCEBYTES>
      kNonce{};
  crypto_stream_chacha20_xor_ic(buffer_.data(), kZero.data(), kZero.size(),
                                kNonce.data(), block_++, key_.data());
  used_ = 0;
}

void Drbg::Fill(std::span<std::uint8_t> out) {
  std::size_t pos = 0;
  while (pos < out.size()) {
    if (used_ == buffer_.size()) Refill();
    std::size_t take = std::min(out.size() - pos, buffer_.size() - used_);
    std::copy_n(buffer_.begin() + used_, take, out.begin() + pos);
    used_ += take;
    pos += take;
  }
}

std::uint64_t Drbg::NextU64() {
  std::array<std::uint8_t, 8> raw;
  Fill(raw);
  std::uint64_t v = 0;
  for (std::uint8_t b : raw) v = (v << 8) | b;
  return v;
}

std::uint64_t Drbg::Below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::kInvalidArgument, "empty range");
  // Rejection sampling against the largest multiple of bound.
  std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  for (;;) {
    std::uint64_t v = NextU64();
    if (v < limit) return v % bound;
  }
}

mpz_class Drbg::UniformBits(unsigned bits) {
  std::vector<std::uint8_t> raw((bits + 7) / 8);
  Fill(raw);
  if (bits % 8 != 0 && !raw.empty()) {
    raw[0] &= static_cast<std::uint8_t>((1u << (bits % 8)) - 1);
  }
  return BigFromBytes(raw);
}

mpz_class Drbg::UniformBelow(const mpz_class& bound) {
  if (sgn(bound) <= 0) throw Error(ErrorCode::kInvalidArgument, "empty range");
  unsigned bits = static_cast<unsigned>(mpz_sizeinbase(bound.get_mpz_t(), 2));
  for (;;) {
    mpz_class v = UniformBits(bits);
    if (v < bound) return v;
  }
}

mpz_class Drbg::UniformRange(const mpz_class& lo, const mpz_class& hi) {
  if (lo >= hi) throw Error(ErrorCode::kInvalidArgument, "empty range");
  mpz_class width = hi - lo;
  return lo + UniformBelow(width);
}

Drbg Drbg::Fork(std::string_view label) {
  std::vector<std::uint8_t> input(label.begin(), label.end());
  std::array<std::uint8_t, 32> fresh;
  Fill(fresh);
  input.insert(input.end(), fresh.begin(), fresh.end());
  Seed out;
  crypto_hash_sha256(out.data(), input.data(), input.size());
  return Drbg(out);
}

}  // namespace ppbench
