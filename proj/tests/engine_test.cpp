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

#include <algorithm>

#include "ppbench/engine.hpp"
#include "ppbench/measure.hpp"
#include "support.hpp"

using namespace ppbench;
using namespace ppbench::engine;
using paillier::KeyPair;
using testing::CodeOf;

namespace {

std::vector<Ciphertext> EncryptAll(const PublicKey& pk,
                                   const std::vector<long>& values, Drbg& rng) {
  std::vector<Ciphertext> out;
  for (long v : values) out.push_back(paillier::Encrypt(pk, Reduce(v, pk.n), rng));
  return out;
}

}  // namespace

TEST_CASE("sorted positions") {
  auto pos = [](Measure m, std::size_t n) { return MeasurePosition(m, n); };
  CHECK(pos(Measure::kMedian, 4).position == 2);
  CHECK(pos(Measure::kMedian, 5).position == 3);
  CHECK(pos(Measure::kTopQuartile, 4).position == 4);
  CHECK(pos(Measure::kBottomQuartile, 8).position == 2);
  CHECK(pos(Measure::kBottomQuartile, 4).position == 1);
  CHECK(pos(Measure::kMax, 7).position == 7);
  CHECK(pos(Measure::kBestInClass, 8).op == Selector::kAtLeast);
  CHECK(pos(Measure::kBestInClass, 8).position == 7);
  CHECK(BestInClassMembers(8) == 2);
  CHECK(BestInClassMembers(4) == 1);
  CHECK(MeasurePosition(Measure::kMedian, 1, 1).position == 1);
  CHECK(CodeOf([] { MeasurePosition(Measure::kMedian, 3); }) ==
        ErrorCode::kPeerGroupTooSmall);
  CHECK(CodeOf([] { MeasurePosition(Measure::kMean, 4); }) ==
        ErrorCode::kInvalidArgument);
  for (Measure m : kAllMeasures) CHECK(MeasureFromName(MeasureName(m)) == m);
}

TEST_CASE("rank derivation over blinded differences") {
  const KeyPair& kp = testing::CachedKeys(768);
  Drbg rng = Drbg::FromLabel(4, "ranks");
  const std::vector<long> values = {500, 900, 200, 700, 900, -40};
  const std::size_t n = values.size();
  OpCounters prov, play;
  std::vector<Ciphertext> inputs = EncryptAll(kp.pub, values, rng);
  std::vector<std::size_t> phi = RandomPermutation(n, rng);
  std::vector<std::size_t> phi_prime = RandomPermutation(n, rng);
  std::vector<std::size_t> positions = InversePermutation(phi);
  const unsigned t = PlaintextDomain::TiebreakBits(n);
  auto comparands = TiebreakComparands(kp.pub, inputs, positions, t, rng, prov);
  auto vectors = RankVectors(kp.pub, comparands, phi, phi_prime, 64, rng, prov);
  REQUIRE(vectors.size() == n);

  std::vector<std::size_t> ranks(n);
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(vectors[i].size() == n - 1);
    ranks[phi[i]] = DeriveRank(kp.priv, vectors[i], play);
  }
  CHECK(play.comparison_decryptions == n * (n - 1));
  CHECK(play.decryptions == 0);
  CHECK(ranks[5] == 1);
  CHECK(ranks[2] == 2);
  CHECK(ranks[0] == 3);
  CHECK(ranks[3] == 4);
  CHECK(std::min(ranks[1], ranks[4]) == 5);
  CHECK(std::max(ranks[1], ranks[4]) == 6);
  CHECK(prov.inversions == n * (n - 1));
}

TEST_CASE("permutation helpers") {
  Drbg rng = Drbg::FromLabel(5, "perm");
  auto p = RandomPermutation(9, rng);
  auto inv = InversePermutation(p);
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(inv[p[i]] == i);
  auto sorted = p;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == i);
}

TEST_CASE("blinded product and selection aggregate") {
  const KeyPair& kp = testing::CachedKeys(768);
  Drbg rng = Drbg::FromLabel(6, "aggregate");
  OpCounters c;
  auto inputs = EncryptAll(kp.pub, {5, 9, 2, 7}, rng);
  Ciphertext sum = BlindedProduct(kp.pub, inputs, 4, 1000, rng, c);
  CHECK(paillier::Decrypt(kp.priv, sum).residue == 1023);
  std::span<const Ciphertext> three(inputs.data(), 3);
  CHECK(CodeOf([&] { BlindedProduct(kp.pub, three, 4, 0, rng, c); }) ==
        ErrorCode::kMissingInputs);

  auto [blind, masked] = SelectionPayloads(kp.pub, inputs[1], 40, rng, c);
  CHECK(paillier::Decrypt(kp.priv, blind).residue == 40);
  CHECK(paillier::Decrypt(kp.priv, masked).residue == 49);

  std::vector<mpz_class> blinds = {10, 20, 30, 40};
  std::vector<Ciphertext> returned;
  std::vector<long> chosen = {0, 9, 0, 7};
  for (std::size_t i = 0; i < 4; ++i) {
    returned.push_back(
        paillier::Encrypt(kp.pub, mpz_class(chosen[i]) + blinds[i], rng));
  }
  Ciphertext agg = AggregateSelection(kp.pub, returned, blinds, 4, 500, rng, c);
  CHECK(paillier::Decrypt(kp.priv, agg).residue == 516);
  std::span<const Ciphertext> short_returned(returned.data(), 2);
  CHECK(CodeOf([&] {
          AggregateSelection(kp.pub, short_returned, blinds, 4, 0, rng, c);
        }) == ErrorCode::kMissingReturns);
}

TEST_CASE("variance term") {
  const KeyPair& kp = testing::CachedKeys(768);
  Drbg rng = Drbg::FromLabel(7, "variance");
  // inputs {5,9,2,7}: sum 23, n 4; the first deviation is 4*5 - 23 = -3.
  const std::vector<long> values = {5, 9, 2, 7};
  mpz_class total = 0;
  for (long v : values) {
    OpCounters c;
    Ciphertext term = VarianceTerm(kp.pub, v, 23, 4, rng, c);
    mpz_class d2 = paillier::Decrypt(kp.priv, term).residue;
    total += d2;
    if (v == 5) CHECK(d2 == 9);
    CHECK(c.encryptions == 1);
    CHECK(c.multiplications == 2);
    CHECK(c.additions == 1);
  }
  CHECK(total == 428);
  KeyPair toy = paillier::KeyPairFromPrimes(5, 7);
  OpCounters c;
  CHECK(CodeOf([&] { VarianceTerm(toy.pub, 9, 0, 1, rng, c); }) ==
        ErrorCode::kBudgetExceeded);
}

TEST_CASE("counted wrapper tallies operations") {
  const KeyPair& kp = testing::CachedKeys(768);
  Drbg rng = Drbg::FromLabel(8, "counted");
  OpCounters c;
  Counted ops(kp.pub, rng, c);
  Ciphertext a = ops.Encrypt(-2);
  CHECK(paillier::Decrypt(kp.priv, a).residue == kp.pub.n - 2);
  Ciphertext b = ops.Add(a, ops.Scale(a, 3));
  b = ops.Rerandomize(ops.Negate(b));
  CHECK(paillier::Decrypt(kp.priv, b).residue == 8);
  CHECK(c.encryptions == 2);
  CHECK(c.multiplications == 2);
  CHECK(c.exponentiations == 1);
  CHECK(c.inversions == 1);
}
