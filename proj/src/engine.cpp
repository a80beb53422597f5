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

#include "ppbench/engine.hpp"

#include <string>

#include "ppbench/errors.hpp"

namespace ppbench::engine {

Ciphertext Counted::Encrypt(const mpz_class& plaintext) {
  ++counters_.encryptions;
  return paillier::Encrypt(pk_, Reduce(plaintext, pk_.n), rng_);
}

Ciphertext Counted::Add(const Ciphertext& a, const Ciphertext& b) {
  ++counters_.multiplications;
  return paillier::HomAdd(pk_, a, b);
}

Ciphertext Counted::Scale(const Ciphertext& c, const mpz_class& k) {
  ++counters_.exponentiations;
  return paillier::ScalarMul(pk_, c, k);
}

Ciphertext Counted::Negate(const Ciphertext& c) {
  ++counters_.inversions;
  return paillier::Negate(pk_, c);
}

Ciphertext Counted::Rerandomize(const Ciphertext& c) {
  ++counters_.encryptions;
  ++counters_.multiplications;
  return paillier::Rerandomize(pk_, c, rng_);
}

Ciphertext BlindedProduct(const PublicKey& pk,
                          std::span<const Ciphertext> inputs,
                          std::size_t expected, const mpz_class& blind,
                          Drbg& rng, OpCounters& counters) {
  if (inputs.size() != expected || expected == 0) {
    throw Error(ErrorCode::kMissingInputs,
                std::to_string(inputs.size()) + " of " +
                    std::to_string(expected) + " inputs present");
  }
  Counted ops(pk, rng, counters);
  Ciphertext acc = inputs[0];
  for (std::size_t i = 1; i < inputs.size(); ++i) acc = ops.Add(acc, inputs[i]);
  return ops.Add(acc, ops.Encrypt(blind));
}

std::vector<Ciphertext> TiebreakComparands(
    const PublicKey& pk, std::span<const Ciphertext> inputs,
    std::span<const std::size_t> positions, unsigned tiebreak_bits, Drbg& rng,
    OpCounters& counters) {
  if (positions.size() != inputs.size()) {
    throw Error(ErrorCode::kInvalidArgument, "one position per input");
  }
  Counted ops(pk, rng, counters);
  const mpz_class shift = mpz_class(1) << tiebreak_bits;
  std::vector<Ciphertext> out;
  out.reserve(inputs.size());
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    out.push_back(ops.Add(ops.Scale(inputs[k], shift),
                          ops.Encrypt(mpz_class(positions[k]))));
  }
  return out;
}

Ciphertext BlindedDifference(const PublicKey& pk, const Ciphertext& a,
                             const Ciphertext& b, unsigned compare_blind_bits,
                             Drbg& rng, OpCounters& counters) {
  Counted ops(pk, rng, counters);
  const mpz_class low = mpz_class(1) << (compare_blind_bits - 1);
  const mpz_class high = mpz_class(1) << compare_blind_bits;
  mpz_class r2 = rng.UniformRange(low, high);
  mpz_class r3 = rng.UniformBelow(r2);
  Ciphertext diff = ops.Add(a, ops.Negate(b));
  return ops.Add(ops.Scale(diff, r2), ops.Encrypt(r3));
}

std::vector<std::vector<Ciphertext>> RankVectors(
    const PublicKey& pk, std::span<const Ciphertext> comparands,
    std::span<const std::size_t> phi, std::span<const std::size_t> phi_prime,
    unsigned compare_blind_bits, Drbg& rng, OpCounters& counters) {
  const std::size_t n = comparands.size();
  if (phi.size() != n || phi_prime.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "permutation size mismatch");
  }
  std::vector<std::vector<Ciphertext>> vectors(n);
  for (std::size_t i = 0; i < n; ++i) {
    vectors[i].reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (phi_prime[j] == phi[i]) continue;
      vectors[i].push_back(BlindedDifference(pk, comparands[phi[i]],
                                             comparands[phi_prime[j]],
                                             compare_blind_bits, rng,
                                             counters));
    }
  }
  return vectors;
}

std::size_t DeriveRank(const PrivateKey& sk,
                       std::span<const Ciphertext> vector,
                       OpCounters& counters) {
  std::size_t non_negative = 0;
  for (const Ciphertext& c : vector) {
    ++counters.comparison_decryptions;
    mpz_class value = Centered(paillier::Decrypt(sk, c).residue, sk.pub.n);
    if (sgn(value) >= 0) ++non_negative;
  }
  return non_negative + 1;
}

std::pair<Ciphertext, Ciphertext> SelectionPayloads(const PublicKey& pk,
                                                    const Ciphertext& selected,
                                                    const mpz_class& blind,
                                                    Drbg& rng,
                                                    OpCounters& counters) {
  Counted ops(pk, rng, counters);
  Ciphertext zero_branch = ops.Encrypt(blind);
  Ciphertext value_branch = ops.Add(selected, zero_branch);
  return {zero_branch, value_branch};
}

Ciphertext VarianceTerm(const PublicKey& pk, const mpz_class& input,
                        const mpz_class& sum, std::size_t n, Drbg& rng,
                        OpCounters& counters) {
  Counted ops(pk, rng, counters);
  mpz_class scaled = input * static_cast<unsigned long>(n);
  mpz_class d = scaled - sum;
  mpz_class square = d * d;
  counters.multiplications += 2;
  counters.additions += 1;
  if (square * 2 >= pk.n) {
    throw Error(ErrorCode::kBudgetExceeded,
                "variance term does not fit the plaintext space");
  }
  return ops.Encrypt(square);
}

Ciphertext AggregateSelection(const PublicKey& pk,
                              std::span<const Ciphertext> returned,
                              std::span<const mpz_class> selection_blinds,
                              std::size_t expected,
                              const mpz_class& result_blind, Drbg& rng,
                              OpCounters& counters) {
  if (returned.size() != expected || selection_blinds.size() != expected ||
      expected == 0) {
    throw Error(ErrorCode::kMissingReturns,
                std::to_string(returned.size()) + " of " +
                    std::to_string(expected) + " returns present");
  }
  Counted ops(pk, rng, counters);
  Ciphertext acc;
  for (std::size_t i = 0; i < expected; ++i) {
    Ciphertext unblinded =
        ops.Add(returned[i], ops.Encrypt(pk.n - Reduce(selection_blinds[i], pk.n)));
    acc = i == 0 ? unblinded : ops.Add(acc, unblinded);
  }
  return ops.Add(acc, ops.Encrypt(result_blind));
}

std::vector<std::size_t> RandomPermutation(std::size_t n, Drbg& rng) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.Below(i));
    std::swap(p[i - 1], p[j]);
  }
  return p;
}

std::vector<std::size_t> InversePermutation(std::span<const std::size_t> p) {
  std::vector<std::size_t> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
  return inv;
}

}  // namespace ppbench::engine
