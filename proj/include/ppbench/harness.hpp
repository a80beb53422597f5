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

#ifndef PPBENCH_HARNESS_HPP_
#define PPBENCH_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ppbench/counters.hpp"
#include "ppbench/digest.hpp"
#include "ppbench/integrity.hpp"
#include "ppbench/numeric.hpp"
#include "ppbench/paillier.hpp"
#include "ppbench/player.hpp"
#include "ppbench/protocol.hpp"
#include "ppbench/provider.hpp"

namespace ppbench::harness {

// Plaintext reference: sorts the inputs and reads the measures directly.
// Quartile measures need n >= min_peers (kPeerGroupTooSmall otherwise).
BenchmarkResult OracleStats(const std::vector<KpiValue>& inputs,
                            unsigned result_places = kDefaultResultPlaces,
                            std::size_t min_peers = kDefaultMinPeers);

struct ScenarioConfig {
  std::size_t n = 4;
  unsigned key_bits = 768;
  unsigned decimal_places = 2;
  unsigned input_bits = 40;
  unsigned compare_blind_bits = 64;
  std::uint64_t seed = 1;
  // Explicit inputs; when empty, n values are drawn from the seed.
  std::vector<KpiValue> inputs;
  // Draw inputs from a pool of about n/2 values so that ties occur.
  bool ties = false;
  std::size_t min_peers = kDefaultMinPeers;
  unsigned result_places = kDefaultResultPlaces;
  // One thread per player instead of a single-threaded router.
  bool concurrent = false;
  FaultInjection fault;
  // Reused when set; otherwise generated from the seed.
  std::optional<paillier::KeyPair> keys;
};

PlaintextDomain DomainOf(const ScenarioConfig& cfg);

// Inputs a scenario runs with: cfg.inputs, or the seeded draw.
std::vector<KpiValue> ScenarioInputs(const ScenarioConfig& cfg);

struct SimulationOutcome {
  std::vector<KpiValue> inputs;
  BenchmarkResult provider_result;
  std::vector<BenchmarkResult> player_results;
  std::vector<std::size_t> ranks;
  StepCounters provider_counters;
  std::vector<StepCounters> player_counters;
  double elapsed_seconds = 0;
  // SHA-256 over the encoded provider stream followed by each player's
  // stream in index order.
  Digest256 transcript{};
};

using Inspector =
    std::function<void(const Provider&, const std::vector<Player>&)>;

// Runs the provider and n players in-process. Throws kBudgetExceeded or
// kPeerGroupTooSmall before any key generation if the scenario is invalid.
SimulationOutcome SimulateSession(const ScenarioConfig& cfg,
                                  const Inspector& inspect = nullptr);

struct ScalingRow {
  std::size_t n = 0;
  unsigned key_bits = 0;
  double elapsed_seconds = 0;
  OpCounters provider;
  OpCounters player;  // player 1
  std::uint64_t step3_ops = 0;  // E + Exp + Mult + Inv in the comparison row
};

struct ScalingFit {
  double coefficient = 0;
  double max_residual = 0;
};

struct ScalingReport {
  std::vector<ScalingRow> rows;
  ScalingFit pairs_fit;   // step3_ops ~ c * n(n-1)
  ScalingFit square_fit;  // step3_ops ~ c * n^2

  std::string ToText() const;
  std::string ToCsv() const;
};

// Least-squares fit of y ~ c * x through the origin.
ScalingFit FitThroughOrigin(const std::vector<double>& x,
                            const std::vector<double>& y);

ScalingReport BenchScaling(const std::vector<std::size_t>& ns,
                           const std::vector<unsigned>& key_bits,
                           std::uint64_t seed);

}  // namespace ppbench::harness

#endif  // PPBENCH_HARNESS_HPP_
