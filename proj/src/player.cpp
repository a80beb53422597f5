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

#include "ppbench/player.hpp"

#include <algorithm>

#include "ppbench/engine.hpp"
#include "ppbench/errors.hpp"

namespace ppbench {
namespace {

std::string Key(std::string_view step, MessageKind kind) {
  return std::string(step) + "/" + std::string(KindName(kind));
}

// Variance, then the rank measures in step order.
std::vector<Measure> MeasurePhaseOrder() {
  std::vector<Measure> m = {Measure::kVariance};
  m.insert(m.end(), kRankMeasures.begin(), kRankMeasures.end());
  return m;
}

}  // namespace

Player::Player(PlayerConfig cfg, Drbg rng)
    : cfg_(std::move(cfg)), rng_(std::move(rng)) {
  if (cfg_.index == 0 || cfg_.index > cfg_.n) {
    throw Error(ErrorCode::kInvalidArgument, "player index out of range");
  }
  if (cfg_.n < cfg_.min_peers) {
    throw Error(ErrorCode::kPeerGroupTooSmall,
                "peer group of " + std::to_string(cfg_.n));
  }
}

std::vector<WireMessage> Player::Start() {
  if (started_) throw Error(ErrorCode::kDuplicateMessage, "step 1 already sent");
  const paillier::PublicKey& pk = cfg_.sk.pub;
  EncodedValue encoded = EncodeKpi(cfg_.input, cfg_.domain, pk.n);
  input_ = Centered(encoded.residue, pk.n);
  engine::Counted ops(pk, rng_, counters_.Row("1"));
  WireMessage m = Make("1", MessageKind::kInput);
  m.numbers.push_back(ops.Encrypt(encoded.residue).value);
  std::vector<WireMessage> out;
  Emit(out, std::move(m), "1");
  started_ = true;
  phase_ = Phase::kDistributeAndOt;
  return out;
}

void Player::Check(const WireMessage& msg) const {
  if (msg.session != cfg_.session_id) {
    throw Error(ErrorCode::kUnknownSession, msg.session);
  }
  if (msg.sender_role != Role::kProvider || msg.sender != kProviderId) {
    throw Error(ErrorCode::kSchemaViolation, "sender: expected provider");
  }
  if (msg.recipient != cfg_.player_id) {
    throw Error(ErrorCode::kSchemaViolation, "recipient: " + msg.recipient);
  }
  auto expected = PhaseOfStep(Role::kProvider, msg.step, msg.kind);
  if (!expected) {
    throw Error(ErrorCode::kSchemaViolation,
                "step: " + msg.step + " does not carry " +
                    std::string(KindName(msg.kind)));
  }
  if (inbox_.count(Key(msg.step, msg.kind))) {
    throw Error(ErrorCode::kDuplicateMessage, "step " + msg.step);
  }
  if (!started_ || *expected != phase_ || msg.phase != phase_) {
    throw Error(ErrorCode::kPhaseViolation,
                "step " + msg.step + " while awaiting " +
                    std::string(PhaseName(phase_)));
  }
  ValidatePayload(msg, cfg_.sk.pub, cfg_.n);
}

std::vector<WireMessage> Player::Advance(const WireMessage& msg) {
  Check(msg);
  inbox_.emplace(Key(msg.step, msg.kind), msg);
  for (const StepKind& s : StepsInPhase(Role::kProvider, phase_)) {
    if (!inbox_.count(Key(s.step, s.kind))) return {};
  }
  return React();
}

std::vector<WireMessage> Player::React() {
  std::vector<WireMessage> out;
  switch (phase_) {
    case Phase::kDistributeAndOt:
      OnDistribution(out);
      phase_ = Phase::kSumReveal;
      break;
    case Phase::kSumReveal:
      OnPayloads(out);
      phase_ = Phase::kRerandomizeAndVariance;
      break;
    case Phase::kRerandomizeAndVariance:
      OnSum(out);
      phase_ = Phase::kMeasureDistribute;
      break;
    case Phase::kMeasureDistribute:
      OnMeasures(out);
      phase_ = Phase::kResultPublish;
      break;
    case Phase::kResultPublish:
      OnResults();
      phase_ = Phase::kIntegrityPublish;
      break;
    case Phase::kIntegrityPublish:
      OnHashes();
      phase_ = Phase::kDone;
      break;
    default:
      throw Error(ErrorCode::kPhaseViolation, "nothing awaited");
  }
  return out;
}

const WireMessage& Player::Got(const std::string& step,
                               MessageKind kind) const {
  return inbox_.at(Key(step, kind));
}

WireMessage Player::Make(const std::string& step, MessageKind kind) const {
  WireMessage m;
  m.session = cfg_.session_id;
  m.phase = *PhaseOfStep(Role::kPlayer, step, kind);
  m.step = step;
  m.sender_role = Role::kPlayer;
  m.sender = cfg_.player_id;
  m.recipient = std::string(kProviderId);
  m.kind = kind;
  return m;
}

paillier::Ciphertext Player::Parse(const mpz_class& value) const {
  return paillier::CiphertextFromValue(cfg_.sk.pub, value);
}

void Player::Emit(std::vector<WireMessage>& out, WireMessage msg,
                  const std::string& row) {
  counters_.Row(row).values_sent += msg.ValueCount();
  out.push_back(std::move(msg));
}

void Player::Validate(Measure m) {
  const MeasureSteps& steps = StepsFor(m);
  const Bytes& blob = Got(std::string(steps.hash), MessageKind::kTagHash).blobs[0];
  integrity::TagHash h{};
  std::copy(blob.begin(), blob.end(), h.begin());
  validation_.push_back(integrity::Validate(
      m, h, cfg_.mac_key, blinded_[static_cast<std::size_t>(m)], cfg_.n,
      integrity::ResidueWidth(cfg_.domain.modulus_bits)));
}

void Player::OnDistribution(std::vector<WireMessage>& out) {
  std::vector<paillier::Ciphertext> vector;
  for (const mpz_class& v : Got("3", MessageKind::kRankVector).numbers) {
    vector.push_back(Parse(v));
  }
  rank_ = engine::DeriveRank(cfg_.sk, vector, counters_.Row("3"));

  for (std::size_t s = 0; s < kRankMeasures.size(); ++s) {
    const std::string step(StepsFor(kRankMeasures[s]).selection);
    Selection sel = MeasurePosition(kRankMeasures[s], cfg_.n, cfg_.min_peers);
    choices_[s] = sel.Matches(*rank_);
    const Bytes& a = Got(step, MessageKind::kOtAnnounce).blobs[0];
    ot::GroupElement announce{};
    std::copy(a.begin(), a.end(), announce.begin());
    auto [state, response] = ot::ReceiverRespond(announce, choices_[s], rng_);
    receivers_[s] = state;
    WireMessage m = Make(step, MessageKind::kOtResponse);
    m.blobs.emplace_back(response.begin(), response.end());
    Emit(out, std::move(m), "4-6C");
  }
}

void Player::OnPayloads(std::vector<WireMessage>& out) {
  const paillier::PublicKey& pk = cfg_.sk.pub;
  for (std::size_t s = 0; s < kRankMeasures.size(); ++s) {
    const std::string step(StepsFor(kRankMeasures[s]).selection);
    const WireMessage& msg = Got(step, MessageKind::kOtPayloads);
    Bytes plain =
        ot::ReceiverFinish(receivers_[s], ot::WrappedPayloads{msg.blobs[0], msg.blobs[1]});
    selected_[s] = paillier::DeserializeCiphertext(pk, plain);
  }

  paillier::Ciphertext c = Parse(Got("2", MessageKind::kBlindedSum).numbers[0]);
  ++counters_.Row("7").decryptions;
  mpz_class& v = blinded_[static_cast<std::size_t>(Measure::kMean)];
  v = paillier::Decrypt(cfg_.sk, c).residue;

  WireMessage reveal = Make("7", MessageKind::kBlindedPlain);
  reveal.numbers.push_back(v);
  Emit(out, std::move(reveal), "7");
  const integrity::Tag tag =
      integrity::MacTag(cfg_.mac_key, v, static_cast<std::uint32_t>(cfg_.index),
                        integrity::ResidueWidth(cfg_.domain.modulus_bits));
  WireMessage t = Make("8", MessageKind::kMacTag);
  t.blobs.emplace_back(tag.begin(), tag.end());
  Emit(out, std::move(t), "8");
}

void Player::OnSum(std::vector<WireMessage>& out) {
  const paillier::PublicKey& pk = cfg_.sk.pub;
  const mpz_class sum = Centered(Got("9", MessageKind::kResult).numbers[0], pk.n);
  aggregates_[static_cast<std::size_t>(Measure::kMean)] = sum;

  engine::Counted ops(pk, rng_, counters_.Row("10-12C"));
  for (std::size_t s = 0; s < kRankMeasures.size(); ++s) {
    WireMessage m = Make(std::string(StepsFor(kRankMeasures[s]).contribution),
                         MessageKind::kRerandomized);
    m.numbers.push_back(ops.Rerandomize(selected_[s]).value);
    Emit(out, std::move(m), "10-12C");
  }

  WireMessage v = Make("13", MessageKind::kVarianceTerm);
  v.numbers.push_back(
      engine::VarianceTerm(pk, input_, sum, cfg_.n, rng_, counters_.Row("13"))
          .value);
  Emit(out, std::move(v), "13");
}

void Player::OnMeasures(std::vector<WireMessage>& out) {
  Validate(Measure::kMean);
  const std::size_t width = integrity::ResidueWidth(cfg_.domain.modulus_bits);
  for (Measure measure : MeasurePhaseOrder()) {
    const MeasureSteps& steps = StepsFor(measure);
    paillier::Ciphertext c = Parse(
        Got(std::string(steps.blinded), MessageKind::kBlindedMeasure).numbers[0]);
    ++counters_.Row("19-25C").decryptions;
    mpz_class& v = blinded_[static_cast<std::size_t>(measure)];
    v = paillier::Decrypt(cfg_.sk, c).residue;

    WireMessage reveal = Make(std::string(steps.reveal), MessageKind::kBlindedPlain);
    reveal.numbers.push_back(v);
    Emit(out, std::move(reveal), "19-25C");
    const integrity::Tag tag = integrity::MacTag(
        cfg_.mac_key, v, static_cast<std::uint32_t>(cfg_.index), width);
    WireMessage t = Make(std::string(steps.tag), MessageKind::kMacTag);
    t.blobs.emplace_back(tag.begin(), tag.end());
    Emit(out, std::move(t), "20-26C");
  }
}

void Player::OnResults() {
  for (Measure measure : MeasurePhaseOrder()) {
    const MeasureSteps& steps = StepsFor(measure);
    aggregates_[static_cast<std::size_t>(measure)] = Centered(
        Got(std::string(steps.result), MessageKind::kResult).numbers[0],
        cfg_.sk.pub.n);
  }
}

void Player::OnHashes() {
  for (Measure measure : MeasurePhaseOrder()) Validate(measure);
  result_ = FinalizeStatistics(aggregates_, cfg_.n, cfg_.domain.decimal_places,
                               cfg_.result_places);
  result_->validation = validation_;
  result_->counters = counters_.Total();
}

}  // namespace ppbench
