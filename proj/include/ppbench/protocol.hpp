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

#ifndef PPBENCH_PROTOCOL_HPP_
#define PPBENCH_PROTOCOL_HPP_

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ppbench/counters.hpp"
#include "ppbench/integrity.hpp"
#include "ppbench/measure.hpp"
#include "ppbench/messages.hpp"
#include "ppbench/numeric.hpp"
#include "ppbench/paillier.hpp"

namespace ppbench {

constexpr unsigned kDefaultResultPlaces = 4;

// Test hook: the provider sends E(v + 1) instead of E(v) for one measure to
// one player. Never set outside tests.
struct FaultInjection {
  std::optional<Measure> equivocate;
  std::size_t target = 1;  // player index
};

struct SessionConfig {
  std::string session_id;
  // Static roster; the player at position k has index k + 1.
  std::vector<std::string> roster;
  paillier::PublicKey pk;
  PlaintextDomain domain;
  std::size_t min_peers = kDefaultMinPeers;
  unsigned result_places = kDefaultResultPlaces;
  std::uint64_t provider_seed = 0;
  FaultInjection fault;

  std::size_t n() const { return roster.size(); }
  // 1-based index of `player_id`, or 0 if not on the roster.
  std::size_t IndexOf(const std::string& player_id) const;
};

// kPeerGroupTooSmall, kBudgetExceeded or kInvalidArgument.
void ValidateSessionConfig(const SessionConfig& cfg);

struct PlayerConfig {
  std::string session_id;
  std::string player_id;
  std::size_t index = 0;
  std::size_t n = 0;
  paillier::PrivateKey sk;
  integrity::MacKey mac_key{};
  PlaintextDomain domain;
  std::size_t min_peers = kDefaultMinPeers;
  unsigned result_places = kDefaultResultPlaces;
  KpiValue input;
};

// Statistics as exact rationals plus their rounded broadcast form.
struct BenchmarkResult {
  std::size_t n = 0;
  unsigned places = kDefaultResultPlaces;
  std::array<mpq_class, 7> exact;  // indexed by Measure
  std::vector<integrity::ValidationBit> validation;  // empty at the provider
  OpCounters counters;

  const mpq_class& Exact(Measure m) const {
    return exact[static_cast<std::size_t>(m)];
  }
  KpiValue Rounded(Measure m) const;
  bool AllValid() const;
  // Canonical JSON (sorted keys, no whitespace).
  std::string ToJson() const;
};

// Turns the unblinded aggregates into statistics. aggregates[m] is the
// centered plaintext published for measure m: the input sum for the mean,
// the sum of squared scaled deviations for the variance, the selected sum for
// best-in-class and the selected value otherwise.
BenchmarkResult FinalizeStatistics(const std::array<mpz_class, 7>& aggregates,
                                   std::size_t n, unsigned decimal_places,
                                   unsigned result_places);

// Payload shape per kind: counts, ciphertext and residue ranges, group
// element validity, blob widths. kSchemaViolation names the failing field;
// an invalid group element is kInvalidGroupElement.
void ValidatePayload(const WireMessage& msg, const paillier::PublicKey& pk,
                     std::size_t n);

}  // namespace ppbench

#endif  // PPBENCH_PROTOCOL_HPP_
