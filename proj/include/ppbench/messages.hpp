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

#ifndef PPBENCH_MESSAGES_HPP_
#define PPBENCH_MESSAGES_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ppbench/bytes.hpp"

namespace ppbench {

// Session schedule. The four protocol rounds are refined into message phases
// because the variance term (step 13) needs the revealed sum (step 9).
//
//   round 1: SUBMIT                                  step 1
//   round 2: DISTRIBUTE_AND_OT, SUM_REVEAL,          steps 2-13
//            RERANDOMIZE_AND_VARIANCE
//   round 3: MEASURE_DISTRIBUTE, MEASURE_REVEAL,     steps 14-30C
//            RESULT_PUBLISH
//   round 4: INTEGRITY_PUBLISH                       steps 31-34C
enum class Phase {
  kSubmit,
  kDistributeAndOt,
  kSumReveal,
  kRerandomizeAndVariance,
  kMeasureDistribute,
  kMeasureReveal,
  kResultPublish,
  kIntegrityPublish,
  kDone,
};

std::string_view PhaseName(Phase p);
std::optional<Phase> PhaseFromName(std::string_view name);

enum class Role { kPlayer, kProvider };

std::string_view RoleName(Role r);

enum class MessageKind {
  kInput,           // 1: E(x_i)
  kBlindedSum,      // 2: E(sum + r1)
  kRankVector,      // 3: comparison vector
  kOtAnnounce,      // 4-6C: sender announcement
  kOtResponse,      // 4-6C: receiver response
  kOtPayloads,      // 4-6C: wrapped payload pair
  kBlindedPlain,    // 7, 19, 21, 23, 25, 25B, 25C: v + r
  kMacTag,          // 8, 20, 22, 24, 26, 26B, 26C
  kResult,          // 9, 27-30C: unblinded value as a residue
  kRerandomized,    // 10-12C
  kVarianceTerm,    // 13
  kBlindedMeasure,  // 14-17C
  kTagHash,         // 18, 31-34C
};

std::string_view KindName(MessageKind k);
std::optional<MessageKind> KindFromName(std::string_view name);

inline constexpr std::string_view kProviderId = "provider";

struct WireMessage {
  std::string session;
  Phase phase = Phase::kSubmit;
  std::string step;
  Role sender_role = Role::kPlayer;
  std::string sender;
  std::string recipient;
  MessageKind kind = MessageKind::kInput;
  // Ciphertexts and plaintext residues.
  std::vector<mpz_class> numbers;
  // Group elements, wrapped OT payloads, MAC tags and tag hashes.
  std::vector<Bytes> blobs;

  // Protocol values carried, as tallied by the "values sent" counters: an
  // OT announcement carries none and a wrapped pair counts as the single
  // transferred value.
  std::size_t ValueCount() const;

  friend bool operator==(const WireMessage&, const WireMessage&) = default;
};

bool IsValidStepLabel(std::string_view step);

// True if (sender role, step, kind) appears in the protocol's step table.
bool IsLegalStepKind(Role sender, std::string_view step, MessageKind kind);

// Phase in which a message of this (role, step, kind) is sent; nullopt if the
// combination is illegal.
std::optional<Phase> PhaseOfStep(Role sender, std::string_view step,
                                 MessageKind kind);

struct StepKind {
  std::string step;
  MessageKind kind;
};

// Every (step, kind) a role sends during the given phase, in table order.
std::vector<StepKind> StepsInPhase(Role sender, Phase phase);

}  // namespace ppbench

#endif  // PPBENCH_MESSAGES_HPP_
