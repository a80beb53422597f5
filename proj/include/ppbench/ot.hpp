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

#ifndef PPBENCH_OT_HPP_
#define PPBENCH_OT_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>

#include "ppbench/bytes.hpp"
#include "ppbench/rng.hpp"

// Semi-honest 1-of-2 oblivious transfer over ristretto255.
//
//   sender:   a <- Z_l,  A = a*G                          (announcement)
//   receiver: x <- Z_l,  B = x*G + b*A                    (response)
//   sender:   K_j = a*(B - j*A), j in {0, 1}; wraps m_j under K_j
//   receiver: K_b = x*A; unwraps payload b
//
// Wrapping, with "||" plain concatenation and j a single byte:
//   seed_j = SHAKE256("ppbench-ot-v1" || j || A || B || K_j, 64)
//   mask   = SHAKE256("ppbench-ot-mask" || seed_j[0..32), len(frame))
//   frame  = uint32_be(len(m_j)) || m_j || zero padding to 4 + L
//   wrap_j = (frame XOR mask) || HMAC-SHA256(seed_j[32..64), frame XOR mask)
// where L is the common padded payload length.
namespace ppbench::ot {

using GroupElement = std::array<std::uint8_t, 32>;
using Scalar = std::array<std::uint8_t, 32>;

constexpr std::size_t kTagBytes = 32;

struct SenderState {
  Scalar secret{};
  GroupElement announcement{};
  Bytes m0;
  Bytes m1;
  std::size_t padded_length = 0;
};

struct ReceiverState {
  bool choice = false;
  Scalar secret{};
  GroupElement announcement{};
  GroupElement response{};
};

struct WrappedPayloads {
  Bytes w0;
  Bytes w1;
};

// Pads the shorter message up to max(|m0|, |m1|), or to `padded_length` when
// given; a message longer than `padded_length` is kPayloadLengthMismatch.
std::pair<SenderState, GroupElement> SenderStart(
    Bytes m0, Bytes m1, Drbg& rng,
    std::optional<std::size_t> padded_length = std::nullopt);

std::pair<ReceiverState, GroupElement> ReceiverRespond(
    const GroupElement& announcement, bool choice, Drbg& rng);

WrappedPayloads SenderFinish(const SenderState& state,
                             const GroupElement& response);

// Returns m_b; kUnwrapFailure if the tag of the chosen payload fails.
Bytes ReceiverFinish(const ReceiverState& state,
                     const WrappedPayloads& payloads);

// Attempts to open payload `index` with the receiver's key. Exposed so tests
// can show the non-chosen payload stays sealed.
Bytes ReceiverOpen(const ReceiverState& state, const WrappedPayloads& payloads,
                   int index);

// Canonical ristretto255 encoding other than the identity.
bool IsValidElement(const GroupElement& element);

}  // namespace ppbench::ot

#endif  // PPBENCH_OT_HPP_
