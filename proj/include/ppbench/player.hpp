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

#ifndef PPBENCH_PLAYER_HPP_
#define PPBENCH_PLAYER_HPP_

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ppbench/counters.hpp"
#include "ppbench/integrity.hpp"
#include "ppbench/messages.hpp"
#include "ppbench/ot.hpp"
#include "ppbench/paillier.hpp"
#include "ppbench/protocol.hpp"
#include "ppbench/rng.hpp"

namespace ppbench {

// Player state machine. phase() is the phase whose provider messages the
// player is waiting for; it reacts once all of them have arrived.
class Player {
 public:
  Player(PlayerConfig cfg, Drbg rng);

  // Step 1. Throws kBudgetExceeded if the input does not fit the domain.
  std::vector<WireMessage> Start();

  void Check(const WireMessage& msg) const;
  std::vector<WireMessage> Advance(const WireMessage& msg);

  Phase phase() const { return phase_; }
  bool started() const { return started_; }
  bool done() const { return phase_ == Phase::kDone; }
  const PlayerConfig& config() const { return cfg_; }

  std::optional<std::size_t> rank() const { return rank_; }
  // Choice bit of the OT for a rank measure, once the rank is known.
  bool choice(Measure m) const { return choices_[RankMeasureSlot(m)]; }
  const paillier::Ciphertext& selected(Measure m) const {
    return selected_[RankMeasureSlot(m)];
  }
  // Blinded residue this player decrypted for measure m.
  const mpz_class& blinded(Measure m) const {
    return blinded_[static_cast<std::size_t>(m)];
  }
  const std::vector<integrity::ValidationBit>& validation() const {
    return validation_;
  }
  const std::optional<BenchmarkResult>& result() const { return result_; }
  const StepCounters& counters() const { return counters_; }

 private:
  std::vector<WireMessage> React();
  const WireMessage& Got(const std::string& step, MessageKind kind) const;
  WireMessage Make(const std::string& step, MessageKind kind) const;
  paillier::Ciphertext Parse(const mpz_class& value) const;
  void Emit(std::vector<WireMessage>& out, WireMessage msg,
            const std::string& row);
  void Validate(Measure m);

  void OnDistribution(std::vector<WireMessage>& out);
  void OnPayloads(std::vector<WireMessage>& out);
  void OnSum(std::vector<WireMessage>& out);
  void OnMeasures(std::vector<WireMessage>& out);
  void OnResults();
  void OnHashes();

  PlayerConfig cfg_;
  Drbg rng_;
  bool started_ = false;
  Phase phase_ = Phase::kSubmit;
  std::map<std::string, WireMessage> inbox_;  // "step/kind"
  StepCounters counters_;

  mpz_class input_;  // centered scaled input
  std::optional<std::size_t> rank_;
  std::array<bool, 5> choices_{};
  std::array<ot::ReceiverState, 5> receivers_{};
  std::array<paillier::Ciphertext, 5> selected_{};
  std::array<mpz_class, 7> blinded_;
  std::array<mpz_class, 7> aggregates_;
  std::vector<integrity::ValidationBit> validation_;
  std::optional<BenchmarkResult> result_;
};

}  // namespace ppbench

#endif  // PPBENCH_PLAYER_HPP_
