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

#include "ppbench/paillier.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ppbench/digest.hpp"
#include "ppbench/errors.hpp"

namespace ppbench::paillier {
namespace {

constexpr int kMillerRabinRounds = 40;
constexpr const char* kKeyFormat = "ppbench-paillier-key";
constexpr int kKeyFormatVersion = 1;

void RequireKey(const PublicKey& pk, const Ciphertext& c) {
  if (!(c.key_id == pk.id)) {
    throw Error(ErrorCode::kKeyMismatch,
                "ciphertext bound to key " + c.key_id.ToHex() +
                    ", expected " + pk.id.ToHex());
  }
}

mpz_class RandomUnit(const PublicKey& pk, Drbg& rng) {
  for (;;) {
    mpz_class r = rng.UniformRange(1, pk.n);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), pk.n.get_mpz_t());
    if (g == 1) return r;
  }
}

mpz_class PowMod(const mpz_class& base, const mpz_class& exp,
                 const mpz_class& mod) {
  mpz_class out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(),
           mod.get_mpz_t());
  return out;
}

mpz_class RandomPrime(unsigned bits, Drbg& rng) {
  for (;;) {
    mpz_class candidate = rng.UniformBits(bits);
    mpz_setbit(candidate.get_mpz_t(), bits - 1);
    mpz_setbit(candidate.get_mpz_t(), bits - 2);
    mpz_setbit(candidate.get_mpz_t(), 0);
    if (mpz_probab_prime_p(candidate.get_mpz_t(), kMillerRabinRounds) > 0) {
      return candidate;
    }
  }
}

std::string HexField(const nlohmann::json& doc, const char* name) {
  if (!doc.contains(name) || !doc[name].is_string()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("key file lacks string field '") + name + "'");
  }
  return doc[name].get<std::string>();
}

}  // namespace

std::string KeyId::ToHex() const { return ppbench::ToHex(bytes); }

std::size_t PublicKey::CiphertextBytes() const { return 2 * ((bits + 7) / 8); }

PublicKey PublicKey::FromModulus(const mpz_class& n) {
  if (n < 3 || mpz_even_p(n.get_mpz_t())) {
    throw Error(ErrorCode::kInvalidArgument, "modulus must be odd and > 2");
  }
  PublicKey pk;
  pk.n = n;
  pk.n_squared = n * n;
  pk.bits = static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), 2));
  Bytes raw = BigToBytes(n, (pk.bits + 7) / 8);
  Digest256 digest = Sha256(raw);
  std::copy_n(digest.begin(), pk.id.bytes.size(), pk.id.bytes.begin());
  return pk;
}

KeyPair KeyPairFromPrimes(const mpz_class& p, const mpz_class& q) {
  if (p == q) throw Error(ErrorCode::kInvalidArgument, "p == q");
  KeyPair kp;
  kp.pub = PublicKey::FromModulus(p * q);
  PrivateKey& sk = kp.priv;
  sk.p = p;
  sk.q = q;
  mpz_class pm1 = p - 1;
  mpz_class qm1 = q - 1;
  mpz_lcm(sk.lambda.get_mpz_t(), pm1.get_mpz_t(), qm1.get_mpz_t());
  if (mpz_invert(sk.mu.get_mpz_t(), sk.lambda.get_mpz_t(),
                 kp.pub.n.get_mpz_t()) == 0) {
    throw Error(ErrorCode::kInvalidArgument, "lambda not invertible mod N");
  }
  sk.pub = kp.pub;
  kp.insecure = kp.pub.bits < kMinSecureBits;
  return kp;
}

KeyPair KeyGen(unsigned bits, Drbg& rng, KeyGenMode mode) {
  if (mode == KeyGenMode::kSecure && bits < kMinSecureBits) {
    throw Error(ErrorCode::kWeakKeyRejected,
                std::to_string(bits) + "-bit keys are below the " +
                    std::to_string(kMinSecureBits) + "-bit minimum");
  }
  if (bits < 16 || bits % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "key length must be even and at least 16 bits");
  }
  for (;;) {
    mpz_class p = RandomPrime(bits / 2, rng);
    mpz_class q = RandomPrime(bits / 2, rng);
    if (p == q) continue;
    mpz_class n = p * q;
    mpz_class phi = (p - 1) * (q - 1);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), phi.get_mpz_t());
    if (g != 1) continue;
    return KeyPairFromPrimes(p, q);
  }
}

Ciphertext Encrypt(const PublicKey& pk, const mpz_class& plaintext,
                   Drbg& rng) {
  if (sgn(plaintext) < 0 || plaintext >= pk.n) {
    throw Error(ErrorCode::kPlaintextOutOfRange,
                "plaintext outside [0, N)");
  }
  mpz_class rn = PowMod(RandomUnit(pk, rng), pk.n, pk.n_squared);
  mpz_class gm = (1 + plaintext * pk.n) % pk.n_squared;
  return Ciphertext{(gm * rn) % pk.n_squared, pk.id};
}

Ciphertext TrivialEncrypt(const PublicKey& pk, const mpz_class& plaintext) {
  mpz_class m = Reduce(plaintext, pk.n);
  return Ciphertext{(1 + m * pk.n) % pk.n_squared, pk.id};
}

EncodedValue Decrypt(const PrivateKey& sk, const Ciphertext& c) {
  const PublicKey& pk = sk.pub;
  RequireKey(pk, c);
  if (sgn(c.value) <= 0 || c.value >= pk.n_squared) {
    throw Error(ErrorCode::kDecryptFailure, "ciphertext outside (0, N^2)");
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), c.value.get_mpz_t(), pk.n.get_mpz_t());
  if (g != 1) {
    throw Error(ErrorCode::kDecryptFailure, "ciphertext is not a unit");
  }
  mpz_class u = PowMod(c.value, sk.lambda, pk.n_squared);
  mpz_class l = (u - 1) / pk.n;
  return EncodedValue{(l * sk.mu) % pk.n};
}

Ciphertext HomAdd(const PublicKey& pk, const Ciphertext& a,
                  const Ciphertext& b) {
  RequireKey(pk, a);
  RequireKey(pk, b);
  return Ciphertext{(a.value * b.value) % pk.n_squared, pk.id};
}

Ciphertext ScalarMul(const PublicKey& pk, const Ciphertext& c,
                     const mpz_class& k) {
  RequireKey(pk, c);
  mpz_class exponent = sgn(k) < 0 ? Reduce(k, pk.n) : k;
  return Ciphertext{PowMod(c.value, exponent, pk.n_squared), pk.id};
}

Ciphertext Negate(const PublicKey& pk, const Ciphertext& c) {
  RequireKey(pk, c);
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), c.value.get_mpz_t(),
                 pk.n_squared.get_mpz_t()) == 0) {
    throw Error(ErrorCode::kInvalidArgument, "ciphertext not invertible");
  }
  return Ciphertext{inv, pk.id};
}

Ciphertext Rerandomize(const PublicKey& pk, const Ciphertext& c, Drbg& rng) {
  RequireKey(pk, c);
  mpz_class rn = PowMod(RandomUnit(pk, rng), pk.n, pk.n_squared);
  return Ciphertext{(c.value * rn) % pk.n_squared, pk.id};
}

Bytes SerializeCiphertext(const PublicKey& pk, const Ciphertext& c) {
  RequireKey(pk, c);
  return BigToBytes(c.value, pk.CiphertextBytes());
}

Ciphertext DeserializeCiphertext(const PublicKey& pk,
                                 std::span<const std::uint8_t> data) {
  if (data.size() != pk.CiphertextBytes()) {
    throw Error(ErrorCode::kInvalidArgument,
                "serialised ciphertext has " + std::to_string(data.size()) +
                    " bytes, expected " +
                    std::to_string(pk.CiphertextBytes()));
  }
  return CiphertextFromValue(pk, BigFromBytes(data));
}

Ciphertext CiphertextFromValue(const PublicKey& pk, const mpz_class& value) {
  if (sgn(value) <= 0 || value >= pk.n_squared) {
    throw Error(ErrorCode::kInvalidArgument, "ciphertext outside (0, N^2)");
  }
  return Ciphertext{value, pk.id};
}

std::string PublicKeyToJson(const PublicKey& pk) {
  nlohmann::json doc;
  doc["format"] = kKeyFormat;
  doc["version"] = kKeyFormatVersion;
  doc["kind"] = "public";
  doc["bits"] = pk.bits;
  doc["n"] = BigToHex(pk.n);
  return doc.dump(2) + "\n";
}

std::string PrivateKeyToJson(const PrivateKey& sk,
                             const std::array<std::uint8_t, 32>& mac_key) {
  nlohmann::json doc;
  doc["format"] = kKeyFormat;
  doc["version"] = kKeyFormatVersion;
  doc["kind"] = "private";
  doc["bits"] = sk.pub.bits;
  doc["n"] = BigToHex(sk.pub.n);
  doc["p"] = BigToHex(sk.p);
  doc["q"] = BigToHex(sk.q);
  doc["lambda"] = BigToHex(sk.lambda);
  doc["mu"] = BigToHex(sk.mu);
  doc["mac_key"] = ToHex(mac_key);
  return doc.dump(2) + "\n";
}

KeyFile KeyFileFromJson(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("key file is not JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("format", "") != kKeyFormat) {
    throw Error(ErrorCode::kInvalidArgument, "not a ppbench key file");
  }
  if (doc.value("version", 0) != kKeyFormatVersion) {
    throw Error(ErrorCode::kInvalidArgument, "unsupported key file version");
  }
  KeyFile out;
  out.pub = PublicKey::FromModulus(BigFromHex(HexField(doc, "n")));
  if (doc.value("bits", 0u) != out.pub.bits) {
    throw Error(ErrorCode::kInvalidArgument, "bits field disagrees with n");
  }
  const std::string kind = doc.value("kind", "");
  if (kind == "private") {
    KeyPair kp = KeyPairFromPrimes(BigFromHex(HexField(doc, "p")),
                                   BigFromHex(HexField(doc, "q")));
    if (!(kp.pub.n == out.pub.n) ||
        BigFromHex(HexField(doc, "lambda")) != kp.priv.lambda ||
        BigFromHex(HexField(doc, "mu")) != kp.priv.mu) {
      throw Error(ErrorCode::kInvalidArgument,
                  "private key fields are inconsistent");
    }
    out.priv = kp.priv;
    Bytes mac = FromHex(HexField(doc, "mac_key"));
    if (mac.size() != 32) {
      throw Error(ErrorCode::kInvalidArgument, "mac_key must be 32 bytes");
    }
    std::array<std::uint8_t, 32> key;
    std::copy(mac.begin(), mac.end(), key.begin());
    out.mac_key = key;
  } else if (kind != "public") {
    throw Error(ErrorCode::kInvalidArgument, "unknown key kind '" + kind + "'");
  }
  return out;
}

void WriteTextFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  }
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace ppbench::paillier
