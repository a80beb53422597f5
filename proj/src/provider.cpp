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

#include "ppbench/provider.hpp"

#include <algorithm>

#include "ppbench/engine.hpp"
#include "ppbench/errors.hpp"

namespace ppbench {
namespace {

Drbg ProviderStream(const SessionConfig& cfg) {
  ValidateSessionConfig(cfg);
  return Drbg::FromLabel(cfg.provider_seed, "provider:" + cfg.session_id);
}

integrity::Tag ToTag(const Bytes& b) {
  integrity::Tag t{};
  std::copy(b.begin(), b.end(), t.begin());
  return t;
}

}  // namespace

Provider::Provider(SessionConfig cfg)
    : cfg_(std::move(cfg)), rng_(ProviderStream(cfg_)), inbox_(cfg_.n()) {}

void Provider::Check(const WireMessage& msg) const {
  if (msg.session != cfg_.session_id) {
    throw Error(ErrorCode::kUnknownSession, msg.session);
  }
  if (msg.sender_role != Role::kPlayer) {
    throw Error(ErrorCode::kSchemaViolation, "sender_role: expected player");
  }
  const std::size_t index = cfg_.IndexOf(msg.sender);
  if (index == 0) throw Error(ErrorCode::kNotEnrolled, msg.sender);
  if (msg.recipient != kProviderId) {
    throw Error(ErrorCode::kSchemaViolation, "recipient: expected provider");
  }
  auto expected = PhaseOfStep(Role::kPlayer, msg.step, msg.kind);
  if (!expected) {
    throw Error(ErrorCode::kSchemaViolation,
                "step: " + msg.step + " does not carry " +
                    std::string(KindName(msg.kind)));
  }
  if (inbox_[index - 1].count(msg.step)) {
    throw Error(ErrorCode::kDuplicateMessage,
                "step " + msg.step + " from " + msg.sender);
  }
  if (*expected != phase_ || msg.phase != phase_) {
    throw Error(ErrorCode::kPhaseViolation,
                "step " + msg.step + " during " + std::string(PhaseName(phase_)));
  }
  ValidatePayload(msg, cfg_.pk, cfg_.n());
}

std::vector<WireMessage> Provider::Advance(const WireMessage& msg) {
  Check(msg);
  inbox_[cfg_.IndexOf(msg.sender) - 1].emplace(msg.step, msg);

  std::vector<WireMessage> out;
  while (phase_ != Phase::kDone && PhaseComplete()) {
    switch (phase_) {
      case Phase::kSubmit:
        Enter(Phase::kDistributeAndOt);
        DistributeAndOt(out);
        break;
      case Phase::kDistributeAndOt:
        Enter(Phase::kSumReveal);
        SendOtPayloads(out);
        break;
      case Phase::kSumReveal:
        Enter(Phase::kRerandomizeAndVariance);
        PublishSum(out);
        break;
      case Phase::kRerandomizeAndVariance:
        Enter(Phase::kMeasureDistribute);
        DistributeMeasures(out);
        Enter(Phase::kMeasureReveal);
        break;
      case Phase::kMeasureReveal:
        Enter(Phase::kResultPublish);
        PublishResults(out);
        break;
      default:
        throw Error(ErrorCode::kPhaseViolation, "no player messages expected");
    }
  }
  return out;
}

std::vector<std::string> Provider::MissingParticipants() const {
  std::vector<std::string> missing;
  const auto steps = StepsInPhase(Role::kPlayer, phase_);
  for (std::size_t i = 0; i < cfg_.n(); ++i) {
    for (const StepKind& s : steps) {
      if (!inbox_[i].count(s.step)) {
        missing.push_back(cfg_.roster[i]);
        break;
      }
    }
  }
  return missing;
}

bool Provider::PhaseComplete() const {
  const auto steps = StepsInPhase(Role::kPlayer, phase_);
  if (steps.empty()) return false;
  for (const Inbox& box : inbox_) {
    for (const StepKind& s : steps) {
      if (!box.count(s.step)) return false;
    }
  }
  return true;
}

void Provider::Enter(Phase p) {
  phase_ = p;
  if (observer_) observer_(p);
}

const WireMessage& Provider::Got(std::size_t index,
                                 const std::string& step) const {
  return inbox_[index - 1].at(step);
}

WireMessage Provider::Make(const std::string& step, MessageKind kind,
                           std::size_t recipient) {
  WireMessage m;
  m.session = cfg_.session_id;
  m.phase = *PhaseOfStep(Role::kProvider, step, kind);
  m.step = step;
  m.sender_role = Role::kProvider;
  m.sender = std::string(kProviderId);
  m.recipient = cfg_.roster[recipient - 1];
  m.kind = kind;
  return m;
}

paillier::Ciphertext Provider::Parse(const mpz_class& value) const {
  return paillier::CiphertextFromValue(cfg_.pk, value);
}

paillier::Ciphertext Provider::Tamper(Measure m, std::size_t index,
                                      const paillier::Ciphertext& c) const {
  if (cfg_.fault.equivocate == m && cfg_.fault.target == index) {
    return paillier::HomAdd(cfg_.pk, c,
                            paillier::TrivialEncrypt(cfg_.pk, mpz_class(1)));
  }
  return c;
}

namespace {

void Emit(std::vector<WireMessage>& out, WireMessage msg, OpCounters& row) {
  row.values_sent += msg.ValueCount();
  out.push_back(std::move(msg));
}

}  // namespace

void Provider::DistributeAndOt(std::vector<WireMessage>& out) {
  const std::size_t n = cfg_.n();
  const paillier::PublicKey& pk = cfg_.pk;
  inputs_.clear();
  for (std::size_t i = 1; i <= n; ++i) {
    inputs_.push_back(Parse(Got(i, "1").numbers[0]));
  }

  sum_blind_ = rng_.UniformBelow(pk.n);
  paillier::Ciphertext blinded = engine::BlindedProduct(
      pk, inputs_, n, sum_blind_, rng_, counters_.Row("2"));
  for (std::size_t i = 1; i <= n; ++i) {
    WireMessage m = Make("2", MessageKind::kBlindedSum, i);
    m.numbers.push_back(Tamper(Measure::kMean, i, blinded).value);
    Emit(out, std::move(m), counters_.Row("2"));
  }

  phi_ = engine::RandomPermutation(n, rng_);
  phi_prime_ = engine::RandomPermutation(n, rng_);
  const std::vector<std::size_t> positions = engine::InversePermutation(phi_);
  const auto comparands = engine::TiebreakComparands(
      pk, inputs_, positions, PlaintextDomain::TiebreakBits(n), rng_,
      counters_.Row("3-tiebreak"));
  const auto vectors =
      engine::RankVectors(pk, comparands, phi_, phi_prime_,
                          cfg_.domain.compare_blind_bits, rng_,
                          counters_.Row("3"));
  for (std::size_t i = 1; i <= n; ++i) {
    WireMessage m = Make("3", MessageKind::kRankVector, i);
    for (const auto& c : vectors[i - 1]) m.numbers.push_back(c.value);
    Emit(out, std::move(m), counters_.Row("3"));
  }

  OpCounters& ot_row = counters_.Row("4-6C");
  for (std::size_t s = 0; s < kRankMeasures.size(); ++s) {
    const std::string step(StepsFor(kRankMeasures[s]).selection);
    selection_blinds_[s].clear();
    ot_senders_[s].clear();
    for (std::size_t i = 1; i <= n; ++i) {
      mpz_class blind = rng_.UniformBelow(pk.n);
      auto [m0, m1] = engine::SelectionPayloads(pk, inputs_[phi_[i - 1]],
                                                blind, rng_, ot_row);
      auto [state, announce] = ot::SenderStart(
          paillier::SerializeCiphertext(pk, m0),
          paillier::SerializeCiphertext(pk, m1), rng_, pk.CiphertextBytes());
      selection_blinds_[s].push_back(blind);
      ot_senders_[s].push_back(std::move(state));
      WireMessage m = Make(step, MessageKind::kOtAnnounce, i);
      m.blobs.emplace_back(announce.begin(), announce.end());
      Emit(out, std::move(m), ot_row);
    }
  }
}

void Provider::SendOtPayloads(std::vector<WireMessage>& out) {
  OpCounters& ot_row = counters_.Row("4-6C");
  for (std::size_t s = 0; s < kRankMeasures.size(); ++s) {
    const std::string step(StepsFor(kRankMeasures[s]).selection);
    for (std::size_t i = 1; i <= cfg_.n(); ++i) {
      const Bytes& b = Got(i, step).blobs[0];
      ot::GroupElement response{};
      std::copy(b.begin(), b.end(), response.begin());
      ot::WrappedPayloads w = ot::SenderFinish(ot_senders_[s][i - 1], response);
      WireMessage m = Make(step, MessageKind::kOtPayloads, i);
      m.blobs.push_back(std::move(w.w0));
      m.blobs.push_back(std::move(w.w1));
      Emit(out, std::move(m), ot_row);
    }
  }
}

void Provider::PublishSum(std::vector<WireMessage>& out) {
  const mpz_class& n_mod = cfg_.pk.n;
  OpCounters& row = counters_.Row("9");
  mpz_class sum = Reduce(Got(1, "7").numbers[0] - sum_blind_, n_mod);
  ++row.additions;
  aggregates_[static_cast<std::size_t>(Measure::kMean)] = Centered(sum, n_mod);
  for (std::size_t i = 1; i <= cfg_.n(); ++i) {
    WireMessage m = Make("9", MessageKind::kResult, i);
    m.numbers.push_back(sum);
    Emit(out, std::move(m), row);
  }
}

void Provider::DistributeMeasures(std::vector<WireMessage>& out) {
  const std::size_t n = cfg_.n();
  const paillier::PublicKey& pk = cfg_.pk;

  variance_terms_.clear();
  for (std::size_t i = 1; i <= n; ++i) {
    variance_terms_.push_back(Parse(Got(i, "13").numbers[0]));
  }
  for (std::size_t s = 0; s < kRankMeasures.size(); ++s) {
    const std::string step(StepsFor(kRankMeasures[s]).contribution);
    returned_[s].clear();
    for (std::size_t i = 1; i <= n; ++i) {
      returned_[s].push_back(Parse(Got(i, step).numbers[0]));
    }
  }

  auto send_blinded = [&](Measure measure, const paillier::Ciphertext& c,
                          const std::string& row) {
    const std::string step(StepsFor(measure).blinded);
    for (std::size_t i = 1; i <= n; ++i) {
      WireMessage m = Make(step, MessageKind::kBlindedMeasure, i);
      m.numbers.push_back(Tamper(measure, i, c).value);
      Emit(out, std::move(m), counters_.Row(row));
    }
  };

  mpz_class& var_blind = result_blinds_[static_cast<std::size_t>(Measure::kVariance)];
  var_blind = rng_.UniformBelow(pk.n);
  send_blinded(Measure::kVariance,
               engine::BlindedProduct(pk, variance_terms_, n, var_blind, rng_,
                                      counters_.Row("14")),
               "14");

  for (std::size_t s = 0; s < kRankMeasures.size(); ++s) {
    const Measure measure = kRankMeasures[s];
    mpz_class& blind = result_blinds_[static_cast<std::size_t>(measure)];
    blind = rng_.UniformBelow(pk.n);
    send_blinded(measure,
                 engine::AggregateSelection(pk, returned_[s],
                                            selection_blinds_[s], n, blind,
                                            rng_, counters_.Row("15-17C")),
                 "15-17C");
  }

  integrity::TagSet mean_tags{Measure::kMean, {}};
  for (std::size_t i = 1; i <= n; ++i) {
    mean_tags.tags.push_back(ToTag(Got(i, "8").blobs[0]));
  }
  const integrity::TagHash h = integrity::HashTags(mean_tags, n);
  for (std::size_t i = 1; i <= n; ++i) {
    WireMessage m = Make("18", MessageKind::kTagHash, i);
    m.blobs.emplace_back(h.begin(), h.end());
    Emit(out, std::move(m), counters_.Row("18"));
  }
}

void Provider::PublishResults(std::vector<WireMessage>& out) {
  const std::size_t n = cfg_.n();
  const mpz_class& n_mod = cfg_.pk.n;
  std::vector<Measure> measures = {Measure::kVariance};
  measures.insert(measures.end(), kRankMeasures.begin(), kRankMeasures.end());

  OpCounters& result_row = counters_.Row("27-30C");
  for (Measure measure : measures) {
    const MeasureSteps& steps = StepsFor(measure);
    const std::size_t k = static_cast<std::size_t>(measure);
    mpz_class value =
        Reduce(Got(1, std::string(steps.reveal)).numbers[0] - result_blinds_[k],
               n_mod);
    ++result_row.additions;
    aggregates_[k] = Centered(value, n_mod);
    for (std::size_t i = 1; i <= n; ++i) {
      WireMessage m =
          Make(std::string(steps.result), MessageKind::kResult, i);
      m.numbers.push_back(value);
      Emit(out, std::move(m), result_row);
    }
  }

  Enter(Phase::kIntegrityPublish);
  OpCounters& hash_row = counters_.Row("31-34C");
  for (Measure measure : measures) {
    const MeasureSteps& steps = StepsFor(measure);
    integrity::TagSet set{measure, {}};
    for (std::size_t i = 1; i <= n; ++i) {
      set.tags.push_back(ToTag(Got(i, std::string(steps.tag)).blobs[0]));
    }
    const integrity::TagHash h = integrity::HashTags(set, n);
    for (std::size_t i = 1; i <= n; ++i) {
      WireMessage m =
          Make(std::string(steps.hash), MessageKind::kTagHash, i);
      m.blobs.emplace_back(h.begin(), h.end());
      Emit(out, std::move(m), hash_row);
    }
  }

  result_ = FinalizeStatistics(aggregates_, n, cfg_.domain.decimal_places,
                               cfg_.result_places);
  result_->counters = counters_.Total();
  Enter(Phase::kDone);
}

}  // namespace ppbench
