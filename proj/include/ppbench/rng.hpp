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

#ifndef PPBENCH_RNG_HPP_
#define PPBENCH_RNG_HPP_

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace ppbench {

using Seed = std::array<std::uint8_t, 32>;

// Deterministic random bit generator: the ChaCha20 keystream under a 32-byte
// seed. Every protocol participant owns one; seeding from the OS gives
// production randomness, seeding from a fixed value gives reproducible runs.
class Drbg {
 public:
  explicit Drbg(const Seed& seed);

  static Drbg FromOs();
  // Derives a seed as SHA-256(label || seed as 8 little-endian bytes).
  static Drbg FromLabel(std::uint64_t seed, std::string_view label);

  void Fill(std::span<std::uint8_t> out);
  std::uint64_t NextU64();
  // Uniform in [0, bound) for bound > 0.
  std::uint64_t Below(std::uint64_t bound);
  // Uniform in [0, 2^bits).
  mpz_class UniformBits(unsigned bits);
  // Uniform in [0, bound) for bound > 0.
  mpz_class UniformBelow(const mpz_class& bound);
  // Uniform in [lo, hi) for lo < hi.
  mpz_class UniformRange(const mpz_class& lo, const mpz_class& hi);

  // Independent child stream; deterministic given this stream's position.
  Drbg Fork(std::string_view label);

 private:
  void Refill();

  Seed key_;
  std::uint64_t block_ = 0;
  std::array<std::uint8_t, 64> buffer_{};
  std::size_t used_ = 64;
};

}  // namespace ppbench

#endif  // PPBENCH_RNG_HPP_
