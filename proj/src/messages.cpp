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

#include "ppbench/messages.hpp"

#include <array>

namespace ppbench {
namespace {

struct StepRule {
  std::string_view step;
  Role sender;
  MessageKind kind;
  Phase phase;
};

constexpr Role P = Role::kPlayer;
constexpr Role S = Role::kProvider;
using K = MessageKind;
using Ph = Phase;

constexpr std::array kStepRules = {
    StepRule{"1", P, K::kInput, Ph::kSubmit},
    StepRule{"2", S, K::kBlindedSum, Ph::kDistributeAndOt},
    StepRule{"3", S, K::kRankVector, Ph::kDistributeAndOt},
    StepRule{"4", S, K::kOtAnnounce, Ph::kDistributeAndOt},
    StepRule{"5", S, K::kOtAnnounce, Ph::kDistributeAndOt},
    StepRule{"6", S, K::kOtAnnounce, Ph::kDistributeAndOt},
    StepRule{"6B", S, K::kOtAnnounce, Ph::kDistributeAndOt},
    StepRule{"6C", S, K::kOtAnnounce, Ph::kDistributeAndOt},
    StepRule{"4", P, K::kOtResponse, Ph::kDistributeAndOt},
    StepRule{"5", P, K::kOtResponse, Ph::kDistributeAndOt},
    StepRule{"6", P, K::kOtResponse, Ph::kDistributeAndOt},
    StepRule{"6B", P, K::kOtResponse, Ph::kDistributeAndOt},
    StepRule{"6C", P, K::kOtResponse, Ph::kDistributeAndOt},
    StepRule{"4", S, K::kOtPayloads, Ph::kSumReveal},
    StepRule{"5", S, K::kOtPayloads, Ph::kSumReveal},
    StepRule{"6", S, K::kOtPayloads, Ph::kSumReveal},
    StepRule{"6B", S, K::kOtPayloads, Ph::kSumReveal},
    StepRule{"6C", S, K::kOtPayloads, Ph::kSumReveal},
    StepRule{"7", P, K::kBlindedPlain, Ph::kSumReveal},
    StepRule{"8", P, K::kMacTag, Ph::kSumReveal},
    StepRule{"9", S, K::kResult, Ph::kRerandomizeAndVariance},
    StepRule{"10", P, K::kRerandomized, Ph::kRerandomizeAndVariance},
    StepRule{"11", P, K::kRerandomized, Ph::kRerandomizeAndVariance},
    StepRule{"12", P, K::kRerandomized, Ph::kRerandomizeAndVariance},
    StepRule{"12B", P, K::kRerandomized, Ph::kRerandomizeAndVariance},
    StepRule{"12C", P, K::kRerandomized, Ph::kRerandomizeAndVariance},
    StepRule{"13", P, K::kVarianceTerm, Ph::kRerandomizeAndVariance},
    StepRule{"14", S, K::kBlindedMeasure, Ph::kMeasureDistribute},
    StepRule{"15", S, K::kBlindedMeasure, Ph::kMeasureDistribute},
    StepRule{"16", S, K::kBlindedMeasure, Ph::kMeasureDistribute},
    StepRule{"17", S, K::kBlindedMeasure, Ph::kMeasureDistribute},
    StepRule{"17B", S, K::kBlindedMeasure, Ph::kMeasureDistribute},
    StepRule{"17C", S, K::kBlindedMeasure, Ph::kMeasureDistribute},
    StepRule{"18", S, K::kTagHash, Ph::kMeasureDistribute},
    StepRule{"19", P, K::kBlindedPlain, Ph::kMeasureReveal},
    StepRule{"20", P, K::kMacTag, Ph::kMeasureReveal},
    StepRule{"21", P, K::kBlindedPlain, Ph::kMeasureReveal},
    StepRule{"22", P, K::kMacTag, Ph::kMeasureReveal},
    StepRule{"23", P, K::kBlindedPlain, Ph::kMeasureReveal},
    StepRule{"24", P, K::kMacTag, Ph::kMeasureReveal},
    StepRule{"25", P, K::kBlindedPlain, Ph::kMeasureReveal},
    StepRule{"25B", P, K::kBlindedPlain, Ph::kMeasureReveal},
    StepRule{"25C", P, K::kBlindedPlain, Ph::kMeasureReveal},
    StepRule{"26", P, K::kMacTag, Ph::kMeasureReveal},
    StepRule{"26B", P, K::kMacTag, Ph::kMeasureReveal},
    StepRule{"26C", P, K::kMacTag, Ph::kMeasureReveal},
    StepRule{"27", S, K::kResult, Ph::kResultPublish},
    StepRule{"28", S, K::kResult, Ph::kResultPublish},
    StepRule{"29", S, K::kResult, Ph::kResultPublish},
    StepRule{"30", S, K::kResult, Ph::kResultPublish},
    StepRule{"30B", S, K::kResult, Ph::kResultPublish},
    StepRule{"30C", S, K::kResult, Ph::kResultPublish},
    StepRule{"31", S, K::kTagHash, Ph::kIntegrityPublish},
    StepRule{"32", S, K::kTagHash, Ph::kIntegrityPublish},
    StepRule{"33", S, K::kTagHash, Ph::kIntegrityPublish},
    StepRule{"34", S, K::kTagHash, Ph::kIntegrityPublish},
    StepRule{"34B", S, K::kTagHash, Ph::kIntegrityPublish},
    StepRule{"34C", S, K::kTagHash, Ph::kIntegrityPublish},
};

constexpr std::array<std::string_view, 9> kPhaseNames = {
    "SUBMIT",           "DISTRIBUTE_AND_OT",  "SUM_REVEAL",
    "RERANDOMIZE_AND_VARIANCE", "MEASURE_DISTRIBUTE", "MEASURE_REVEAL",
    "RESULT_PUBLISH",   "INTEGRITY_PUBLISH",  "DONE",
};

constexpr std::array<std::string_view, 13> kKindNames = {
    "input",        "blinded_sum", "rank_vector",  "ot_announce",
    "ot_response",  "ot_payloads", "blinded_plain", "mac_tag",
    "result",       "rerandomized", "variance_term", "blinded_measure",
    "tag_hash",
};

}  // namespace

std::string_view PhaseName(Phase p) {
  return kPhaseNames[static_cast<std::size_t>(p)];
}

std::optional<Phase> PhaseFromName(std::string_view name) {
  for (std::size_t i = 0; i < kPhaseNames.size(); ++i) {
    if (kPhaseNames[i] == name) return static_cast<Phase>(i);
  }
  return std::nullopt;
}

std::string_view RoleName(Role r) {
  return r == Role::kPlayer ? "player" : "provider";
}

std::string_view KindName(MessageKind k) {
  return kKindNames[static_cast<std::size_t>(k)];
}

std::optional<MessageKind> KindFromName(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<MessageKind>(i);
  }
  return std::nullopt;
}

std::size_t WireMessage::ValueCount() const {
  switch (kind) {
    case MessageKind::kOtAnnounce: return 0;
    case MessageKind::kOtPayloads: return 1;
    default: return numbers.size() + blobs.size();
  }
}

bool IsValidStepLabel(std::string_view step) {
  for (const StepRule& r : kStepRules) {
    if (r.step == step) return true;
  }
  return false;
}

bool IsLegalStepKind(Role sender, std::string_view step, MessageKind kind) {
  return PhaseOfStep(sender, step, kind).has_value();
}

std::optional<Phase> PhaseOfStep(Role sender, std::string_view step,
                                 MessageKind kind) {
  for (const StepRule& r : kStepRules) {
    if (r.step == step && r.sender == sender && r.kind == kind) return r.phase;
  }
  return std::nullopt;
}

std::vector<StepKind> StepsInPhase(Role sender, Phase phase) {
  std::vector<StepKind> out;
  for (const StepRule& r : kStepRules) {
    if (r.sender == sender && r.phase == phase) {
      out.push_back({std::string(r.step), r.kind});
    }
  }
  return out;
}

}  // namespace ppbench
