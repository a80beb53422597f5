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

#ifndef PPBENCH_PAILLIER_HPP_
#define PPBENCH_PAILLIER_HPP_

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "ppbench/bytes.hpp"
#include "ppbench/numeric.hpp"
#include "ppbench/rng.hpp"

namespace ppbench::paillier {

// First 8 bytes of SHA-256 over the big-endian modulus.
struct KeyId {
  std::array<std::uint8_t, 8> bytes{};

  std::string ToHex() const;
  friend bool operator==(const KeyId&, const KeyId&) = default;
};

// Encryption key with g fixed to N + 1, so E(m) = (1 + mN) r^N mod N^2.
struct PublicKey {
  mpz_class n;
  mpz_class n_squared;
  unsigned bits = 0;
  KeyId id;

  mpz_class g() const { return n + 1; }
  // Width of a serialised ciphertext: 2 * ceil(bits / 8).
  std::size_t CiphertextBytes() const;
  std::size_t PlaintextBytes() const { return (bits + 7) / 8; }

  static PublicKey FromModulus(const mpz_class& n);
};

struct PrivateKey {
  mpz_class p;
  mpz_class q;
  mpz_class lambda;  // lcm(p - 1, q - 1)
  mpz_class mu;      // lambda^-1 mod N (valid because g = N + 1)
  PublicKey pub;
};

struct KeyPair {
  PublicKey pub;
  PrivateKey priv;
  bool insecure = false;
};

struct Ciphertext {
  mpz_class value;
  KeyId key_id;

  friend bool operator==(const Ciphertext& a, const Ciphertext& b) {
    return a.key_id == b.key_id && a.value == b.value;
  }
};

constexpr unsigned kMinSecureBits = 512;

enum class KeyGenMode { kSecure, kTest };

// Equal-size primes with the top two bits set so N has exactly `bits` bits.
// Primality error is below 2^-80 (40 Miller-Rabin rounds). kTest lifts the
// 512-bit floor for fast unit tests; such keys are flagged insecure.
KeyPair KeyGen(unsigned bits, Drbg& rng, KeyGenMode mode = KeyGenMode::kSecure);
KeyPair KeyPairFromPrimes(const mpz_class& p, const mpz_class& q);

Ciphertext Encrypt(const PublicKey& pk, const mpz_class& plaintext, Drbg& rng);
inline Ciphertext Encrypt(const PublicKey& pk, const EncodedValue& m,
                          Drbg& rng) {
  return Encrypt(pk, m.residue, rng);
}
// Encryption with randomness 1; only for public constants such as the
// encrypted identity used to fold products.
Ciphertext TrivialEncrypt(const PublicKey& pk, const mpz_class& plaintext);

EncodedValue Decrypt(const PrivateKey& sk, const Ciphertext& c);

Ciphertext HomAdd(const PublicKey& pk, const Ciphertext& a,
                  const Ciphertext& b);
// k is taken as given; pass k mod N for negative factors.
Ciphertext ScalarMul(const PublicKey& pk, const Ciphertext& c,
                     const mpz_class& k);
// Modular inverse mod N^2, i.e. an encryption of -m.
Ciphertext Negate(const PublicKey& pk, const Ciphertext& c);
Ciphertext Rerandomize(const PublicKey& pk, const Ciphertext& c, Drbg& rng);

Bytes SerializeCiphertext(const PublicKey& pk, const Ciphertext& c);
Ciphertext DeserializeCiphertext(const PublicKey& pk,
                                 std::span<const std::uint8_t> data);

// Throws kInvalidArgument unless 0 < value < N^2.
Ciphertext CiphertextFromValue(const PublicKey& pk, const mpz_class& value);

// Key files: versioned JSON documents with hex big-endian integers. The
// private file additionally carries the 32-byte MAC key shared by players.
struct KeyFile {
  PublicKey pub;
  std::optional<PrivateKey> priv;
  std::optional<std::array<std::uint8_t, 32>> mac_key;
};

std::string PublicKeyToJson(const PublicKey& pk);
std::string PrivateKeyToJson(const PrivateKey& sk,
                             const std::array<std::uint8_t, 32>& mac_key);
KeyFile KeyFileFromJson(const std::string& text);

void WriteTextFile(const std::filesystem::path& path, const std::string& text);
std::string ReadTextFile(const std::filesystem::path& path);

}  // namespace ppbench::paillier

#endif  // PPBENCH_PAILLIER_HPP_
