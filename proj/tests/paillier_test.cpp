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

#include <doctest.h>

#include <filesystem>
#include <numeric>

#include "ppbench/bytes.hpp"
#include "ppbench/paillier.hpp"
#include "support.hpp"

using namespace ppbench;
using namespace ppbench::paillier;
using testing::CodeOf;

namespace {

Ciphertext Raw(const PublicKey& pk, const mpz_class& m, const mpz_class& r) {
  mpz_class rn;
  mpz_powm(rn.get_mpz_t(), r.get_mpz_t(), pk.n.get_mpz_t(),
           pk.n_squared.get_mpz_t());
  mpz_class c = (1 + m * pk.n) * rn % pk.n_squared;
  return CiphertextFromValue(pk, c);
}

}  // namespace

TEST_CASE("toy key parameters") {
  KeyPair kp = KeyPairFromPrimes(5, 7);
  CHECK(kp.pub.n == 35);
  CHECK(kp.pub.n_squared == 1225);
  CHECK(kp.priv.lambda == 12);
  CHECK(kp.priv.mu == 3);
  CHECK(kp.pub.g() == 36);
}

TEST_CASE("toy key: every plaintext under every unit randomizer") {
  KeyPair kp = KeyPairFromPrimes(5, 7);
  const PublicKey& pk = kp.pub;
  std::vector<Ciphertext> sample;
  for (long m = 0; m < 35; ++m) {
    for (long r = 1; r < 35; ++r) {
      if (std::gcd(r, 35L) != 1) continue;
      Ciphertext c = Raw(pk, m, r);
      CHECK(Decrypt(kp.priv, c).residue == m);
      if (r == 2) sample.push_back(c);
    }
  }
  for (long a = 0; a < 35; ++a) {
    for (long b = 0; b < 35; ++b) {
      CHECK(Decrypt(kp.priv, HomAdd(pk, sample[a], sample[b])).residue ==
            (a + b) % 35);
      CHECK(Decrypt(kp.priv, ScalarMul(pk, sample[a], b)).residue == a * b % 35);
    }
    CHECK(Decrypt(kp.priv, Negate(pk, sample[a])).residue == (35 - a) % 35);
  }
}

TEST_CASE("encrypt and decrypt at 768 bits") {
  const KeyPair& kp = testing::CachedKeys(768);
  Drbg rng = Drbg::FromLabel(1, "paillier");
  CHECK(kp.pub.bits == 768);
  CHECK(mpz_sizeinbase(kp.pub.n.get_mpz_t(), 2) == 768);
  for (int i = 0; i < 50; ++i) {
    mpz_class a = rng.UniformBelow(kp.pub.n), b = rng.UniformBelow(kp.pub.n);
    Ciphertext ca = Encrypt(kp.pub, a, rng), cb = Encrypt(kp.pub, b, rng);
    CHECK(Decrypt(kp.priv, ca).residue == a);
    CHECK(Decrypt(kp.priv, HomAdd(kp.pub, ca, cb)).residue == (a + b) % kp.pub.n);
    Ciphertext re = Rerandomize(kp.pub, ca, rng);
    CHECK(re.value != ca.value);
    CHECK(Decrypt(kp.priv, re).residue == a);
  }
  CHECK(Decrypt(kp.priv, TrivialEncrypt(kp.pub, 17)).residue == 17);
}

TEST_CASE("paillier errors") {
  Drbg rng = Drbg::FromLabel(2, "paillier-errors");
  CHECK(CodeOf([&] { KeyGen(256, rng); }) == ErrorCode::kWeakKeyRejected);
  CHECK(CodeOf([&] { KeyGen(17, rng, KeyGenMode::kTest); }) ==
        ErrorCode::kInvalidArgument);
  KeyPair small = KeyGen(64, rng, KeyGenMode::kTest);
  CHECK(small.insecure);
  CHECK(mpz_sizeinbase(small.pub.n.get_mpz_t(), 2) == 64);

  KeyPair toy = KeyPairFromPrimes(5, 7);
  CHECK(CodeOf([&] { Encrypt(toy.pub, mpz_class(35), rng); }) ==
        ErrorCode::kPlaintextOutOfRange);
  CHECK(CodeOf([&] { Encrypt(toy.pub, mpz_class(-1), rng); }) ==
        ErrorCode::kPlaintextOutOfRange);
  Ciphertext c = Encrypt(small.pub, mpz_class(3), rng);
  CHECK(CodeOf([&] { Decrypt(toy.priv, c); }) == ErrorCode::kKeyMismatch);
  CHECK(CodeOf([&] { HomAdd(toy.pub, c, c); }) == ErrorCode::kKeyMismatch);
  CHECK(CodeOf([&] { CiphertextFromValue(toy.pub, 0); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(CodeOf([&] { CiphertextFromValue(toy.pub, 1225); }) ==
        ErrorCode::kInvalidArgument);
  // 7 shares a factor with N, so it is not a ciphertext.
  CHECK(CodeOf([&] { Decrypt(toy.priv, CiphertextFromValue(toy.pub, 7)); }) ==
        ErrorCode::kDecryptFailure);
}

TEST_CASE("ciphertext serialization") {
  const KeyPair& kp = testing::CachedKeys(768);
  Drbg rng = Drbg::FromLabel(3, "serialize");
  CHECK(kp.pub.CiphertextBytes() == 192);
  Ciphertext c = Encrypt(kp.pub, mpz_class(99), rng);
  Bytes b = SerializeCiphertext(kp.pub, c);
  CHECK(b.size() == 192);
  CHECK(DeserializeCiphertext(kp.pub, b) == c);
  b.pop_back();
  CHECK(CodeOf([&] { DeserializeCiphertext(kp.pub, b); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("key files round trip") {
  const KeyPair& kp = testing::CachedKeys(768);
  std::array<std::uint8_t, 32> mac{};
  mac[0] = 0xab;
  KeyFile pub = KeyFileFromJson(PublicKeyToJson(kp.pub));
  CHECK(pub.pub.n == kp.pub.n);
  CHECK(pub.pub.id == kp.pub.id);
  CHECK_FALSE(pub.priv.has_value());
  KeyFile priv = KeyFileFromJson(PrivateKeyToJson(kp.priv, mac));
  REQUIRE(priv.priv.has_value());
  CHECK(priv.priv->lambda == kp.priv.lambda);
  CHECK(priv.priv->mu == kp.priv.mu);
  CHECK(*priv.mac_key == mac);

  auto dir = std::filesystem::temp_directory_path() / "ppbench-keyfile-test";
  std::filesystem::create_directories(dir);
  WriteTextFile(dir / "pub.json", PublicKeyToJson(kp.pub));
  CHECK(KeyFileFromJson(ReadTextFile(dir / "pub.json")).pub.n == kp.pub.n);
  std::filesystem::remove_all(dir);
  CHECK(CodeOf([] { KeyFileFromJson("{}"); }) == ErrorCode::kInvalidArgument);
}
