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

#ifndef PPBENCH_PROVIDER_HPP_
#define PPBENCH_PROVIDER_HPP_

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <functional>
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

// Service-provider state machine. Player messages are stored as they arrive;
// all computation happens when a phase is complete and walks players in
// index order, so the outbound stream depends only on the configuration and
// the set of messages received, not on their arrival order.
class Provider {
 public:
  explicit Provider(SessionConfig cfg);

  // Throws the error Advance would raise for `msg` without changing state.
  void Check(const WireMessage& msg) const;
  // Accepts one player message and returns the messages it releases.
  std::vector<WireMessage> Advance(const WireMessage& msg);

  Phase phase() const { return phase_; }
  bool done() const { return phase_ == Phase::kDone; }
  const SessionConfig& config() const { return cfg_; }
  // Roster ids that still owe a message in the current phase.
  std::vector<std::string> MissingParticipants() const;
  const std::optional<BenchmarkResult>& result() const { return result_; }
  const StepCounters& counters() const { return counters_; }

  // Called on entry to every phase, transient ones included.
  void SetPhaseObserver(std::function<void(Phase)> observer) {
    observer_ = std::move(observer);
  }

  // Intermediate state, exposed for property tests.
  const std::vector<std::size_t>& phi() const { return phi_; }
  const std::vector<std::size_t>& phi_prime() const { return phi_prime_; }
  const std::vector<paillier::Ciphertext>& inputs() const { return inputs_; }
  const std::vector<mpz_class>& selection_blinds(Measure m) const {
    return selection_blinds_[RankMeasureSlot(m)];
  }
  const std::vector<paillier::Ciphertext>& returned(Measure m) const {
    return returned_[RankMeasureSlot(m)];
  }
  const std::vector<paillier::Ciphertext>& variance_terms() const {
    return variance_terms_;
  }

 private:
  using Inbox = std::map<std::string, WireMessage>;  // keyed by step

  bool PhaseComplete() const;
  void Enter(Phase p);
  const WireMessage& Got(std::size_t index, const std::string& step) const;
  WireMessage Make(const std::string& step, MessageKind kind,
                   std::size_t recipient);
  paillier::Ciphertext Parse(const mpz_class& value) const;
  paillier::Ciphertext Tamper(Measure m, std::size_t index,
                              const paillier::Ciphertext& c) const;

  void DistributeAndOt(std::vector<WireMessage>& out);
  void SendOtPayloads(std::vector<WireMessage>& out);
  void PublishSum(std::vector<WireMessage>& out);
  void DistributeMeasures(std::vector<WireMessage>& out);
  void PublishResults(std::vector<WireMessage>& out);

  SessionConfig cfg_;
  Drbg rng_;
  Phase phase_ = Phase::kSubmit;
  std::vector<Inbox> inbox_;
  StepCounters counters_;
  std::function<void(Phase)> observer_;

  std::vector<paillier::Ciphertext> inputs_;
  mpz_class sum_blind_;
  std::vector<std::size_t> phi_;
  std::vector<std::size_t> phi_prime_;
  std::array<std::vector<mpz_class>, 5> selection_blinds_;
  std::array<std::vector<ot::SenderState>, 5> ot_senders_;
  std::array<std::vector<paillier::Ciphertext>, 5> returned_;
  std::vector<paillier::Ciphertext> variance_terms_;
  std::array<mpz_class, 7> result_blinds_;
  std::array<mpz_class, 7> aggregates_;
  std::optional<BenchmarkResult> result_;
};

}  // namespace ppbench

#endif  // PPBENCH_PROVIDER_HPP_
