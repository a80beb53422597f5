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

#ifndef PPBENCH_ENGINE_HPP_
#define PPBENCH_ENGINE_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ppbench/counters.hpp"
#include "ppbench/numeric.hpp"
#include "ppbench/paillier.hpp"
#include "ppbench/rng.hpp"

// Homomorphic building blocks of the benchmarking protocol. Each function
// tallies the operations it performs into the given counters; the provider
// and player state machines compose them.
namespace ppbench::engine {

using paillier::Ciphertext;
using paillier::PrivateKey;
using paillier::PublicKey;

// Paillier operations with bookkeeping.
class Counted {
 public:
  Counted(const PublicKey& pk, Drbg& rng, OpCounters& counters)
      : pk_(pk), rng_(rng), counters_(counters) {}

  Ciphertext Encrypt(const mpz_class& plaintext);  // reduces mod N first
  Ciphertext Add(const Ciphertext& a, const Ciphertext& b);
  Ciphertext Scale(const Ciphertext& c, const mpz_class& k);
  Ciphertext Negate(const Ciphertext& c);
  Ciphertext Rerandomize(const Ciphertext& c);

 private:
  const PublicKey& pk_;
  Drbg& rng_;
  OpCounters& counters_;
};

// E(sum + blind) = prod E(x_i) * E(blind). Used for steps 2 and 14.
// kMissingInputs if fewer than `expected` ciphertexts are supplied.
Ciphertext BlindedProduct(const PublicKey& pk,
                          std::span<const Ciphertext> inputs,
                          std::size_t expected, const mpz_class& blind,
                          Drbg& rng, OpCounters& counters);

// x'_k = x_k * 2^t + pos_k; distinct pos_k make every comparand unique.
std::vector<Ciphertext> TiebreakComparands(
    const PublicKey& pk, std::span<const Ciphertext> inputs,
    std::span<const std::size_t> positions, unsigned tiebreak_bits, Drbg& rng,
    OpCounters& counters);

// One comparison entry: E(r2 * (x'_a - x'_b) + r3), with
// 2^(b_r - 1) <= r2 < 2^b_r and 0 <= r3 < r2 drawn fresh.
Ciphertext BlindedDifference(const PublicKey& pk, const Ciphertext& a,
                             const Ciphertext& b, unsigned compare_blind_bits,
                             Drbg& rng, OpCounters& counters);

// Comparison vectors: vectors[i] compares comparand phi[i] against
// comparand phi_prime[j] for every j with phi_prime[j] != phi[i], in
// ascending j. Permutations are 0-based.
std::vector<std::vector<Ciphertext>> RankVectors(
    const PublicKey& pk, std::span<const Ciphertext> comparands,
    std::span<const std::size_t> phi, std::span<const std::size_t> phi_prime,
    unsigned compare_blind_bits, Drbg& rng, OpCounters& counters);

// Number of centered-non-negative entries plus one.
std::size_t DeriveRank(const PrivateKey& sk,
                       std::span<const Ciphertext> vector,
                       OpCounters& counters);

// (m0, m1) = (E(r), E(x + r)) for the OT selection of one player.
std::pair<Ciphertext, Ciphertext> SelectionPayloads(const PublicKey& pk,
                                                    const Ciphertext& selected,
                                                    const mpz_class& blind,
                                                    Drbg& rng,
                                                    OpCounters& counters);

// E(d^2) with d = n * x - sum, the integer form of (x - sum / n) scaled by n.
Ciphertext VarianceTerm(const PublicKey& pk, const mpz_class& input,
                        const mpz_class& sum, std::size_t n, Drbg& rng,
                        OpCounters& counters);

// (prod_i returned_i * E(-r_i)) * E(result_blind). kMissingReturns unless
// both spans hold `expected` entries.
Ciphertext AggregateSelection(const PublicKey& pk,
                              std::span<const Ciphertext> returned,
                              std::span<const mpz_class> selection_blinds,
                              std::size_t expected,
                              const mpz_class& result_blind, Drbg& rng,
                              OpCounters& counters);

// Uniform permutation of {0, ..., n-1} (Fisher-Yates).
std::vector<std::size_t> RandomPermutation(std::size_t n, Drbg& rng);
std::vector<std::size_t> InversePermutation(std::span<const std::size_t> p);

}  // namespace ppbench::engine

#endif  // PPBENCH_ENGINE_HPP_
