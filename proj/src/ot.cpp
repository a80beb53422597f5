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

#include "ppbench/ot.hpp"

#include <sodium.h>

#include <algorithm>
#include <string_view>

#include "ppbench/digest.hpp"
#include "ppbench/errors.hpp"

namespace ppbench::ot {
namespace {

constexpr std::string_view kSeedLabel = "ppbench-ot-v1";
constexpr std::string_view kMaskLabel = "ppbench-ot-mask";

Scalar RandomScalar(Drbg& rng) {
  std::array<std::uint8_t, crypto_core_ristretto255_NONREDUCEDSCALARBYTES>
      wide;
  Scalar out;
  do {
    rng.Fill(wide);
    crypto_core_ristretto255_scalar_reduce(out.data(), wide.data());
  } while (sodium_is_zero(out.data(), out.size()));
  return out;
}

GroupElement Mul(const Scalar& k, const GroupElement& p) {
  GroupElement out;
  if (crypto_scalarmult_ristretto255(out.data(), k.data(), p.data()) != 0) {
    throw Error(ErrorCode::kInvalidGroupElement, "scalar product is identity");
  }
  return out;
}

GroupElement MulBase(const Scalar& k) {
  GroupElement out;
  if (crypto_scalarmult_ristretto255_base(out.data(), k.data()) != 0) {
    throw Error(ErrorCode::kInvalidGroupElement, "zero scalar");
  }
  return out;
}

void RequireElement(const GroupElement& e, const char* what) {
  if (!IsValidElement(e)) {
    throw Error(ErrorCode::kInvalidGroupElement,
                std::string(what) + " is not a canonical ristretto255 point");
  }
}

struct WrapKeys {
  std::array<std::uint8_t, 32> mask_key;
  std::array<std::uint8_t, 32> tag_key;
};

WrapKeys DeriveKeys(int index, const GroupElement& announcement,
                    const GroupElement& response, const GroupElement& shared) {
  Bytes input(kSeedLabel.begin(), kSeedLabel.end());
  input.push_back(static_cast<std::uint8_t>(index));
  input.insert(input.end(), announcement.begin(), announcement.end());
  input.insert(input.end(), response.begin(), response.end());
  input.insert(input.end(), shared.begin(), shared.end());
  Bytes seed = Shake256(input, 64);
  WrapKeys keys;
  std::copy_n(seed.begin(), 32, keys.mask_key.begin());
  std::copy_n(seed.begin() + 32, 32, keys.tag_key.begin());
  return keys;
}

Bytes Mask(const WrapKeys& keys, std::size_t length) {
  Bytes input(kMaskLabel.begin(), kMaskLabel.end());
  input.insert(input.end(), keys.mask_key.begin(), keys.mask_key.end());
  return Shake256(input, length);
}

Bytes Wrap(const WrapKeys& keys, const Bytes& message,
           std::size_t padded_length) {
  Bytes frame(4 + padded_length, 0);
  const auto len = static_cast<std::uint32_t>(message.size());
  for (int i = 0; i < 4; ++i) {
    frame[i] = static_cast<std::uint8_t>(len >> (24 - 8 * i));
  }
  std::copy(message.begin(), message.end(), frame.begin() + 4);
  Bytes mask = Mask(keys, frame.size());
  for (std::size_t i = 0; i < frame.size(); ++i) frame[i] ^= mask[i];
  Digest256 tag = HmacSha256(keys.tag_key, frame);
  frame.insert(frame.end(), tag.begin(), tag.end());
  return frame;
}

Bytes Unwrap(const WrapKeys& keys, const Bytes& wrapped) {
  if (wrapped.size() < 4 + kTagBytes) {
    throw Error(ErrorCode::kUnwrapFailure, "wrapped payload too short");
  }
  std::span<const std::uint8_t> body(wrapped.data(),
                                     wrapped.size() - kTagBytes);
  std::span<const std::uint8_t> tag(wrapped.data() + body.size(), kTagBytes);
  Digest256 expected = HmacSha256(keys.tag_key, body);
  if (!ConstantTimeEqual(expected, tag)) {
    throw Error(ErrorCode::kUnwrapFailure, "payload tag mismatch");
  }
  Bytes frame(body.begin(), body.end());
  Bytes mask = Mask(keys, frame.size());
  for (std::size_t i = 0; i < frame.size(); ++i) frame[i] ^= mask[i];
  std::uint32_t len = 0;
  for (int i = 0; i < 4; ++i) len = (len << 8) | frame[i];
  if (len > frame.size() - 4) {
    throw Error(ErrorCode::kUnwrapFailure, "payload length field corrupt");
  }
  return Bytes(frame.begin() + 4, frame.begin() + 4 + len);
}

}  // namespace

bool IsValidElement(const GroupElement& element) {
  if (sodium_init() < 0) return false;
  if (sodium_is_zero(element.data(), element.size())) return false;
  return crypto_core_ristretto255_is_valid_point(element.data()) == 1;
}

std::pair<SenderState, GroupElement> SenderStart(
    Bytes m0, Bytes m1, Drbg& rng, std::optional<std::size_t> padded_length) {
  std::size_t longest = std::max(m0.size(), m1.size());
  std::size_t length = padded_length.value_or(longest);
  if (longest > length) {
    throw Error(ErrorCode::kPayloadLengthMismatch,
                "message of " + std::to_string(longest) +
                    " bytes exceeds padded length " + std::to_string(length));
  }
  SenderState state;
  state.secret = RandomScalar(rng);
  state.announcement = MulBase(state.secret);
  state.m0 = std::move(m0);
  state.m1 = std::move(m1);
  state.padded_length = length;
  return {state, state.announcement};
}

std::pair<ReceiverState, GroupElement> ReceiverRespond(
    const GroupElement& announcement, bool choice, Drbg& rng) {
  RequireElement(announcement, "announcement");
  ReceiverState state;
  state.choice = choice;
  state.secret = RandomScalar(rng);
  state.announcement = announcement;
  GroupElement blinded = MulBase(state.secret);
  if (choice) {
    crypto_core_ristretto255_add(blinded.data(), blinded.data(),
                                 announcement.data());
  }
  state.response = blinded;
  return {state, blinded};
}

WrappedPayloads SenderFinish(const SenderState& state,
                             const GroupElement& response) {
  RequireElement(response, "receiver response");
  GroupElement shifted;
  crypto_core_ristretto255_sub(shifted.data(), response.data(),
                               state.announcement.data());
  GroupElement k0 = Mul(state.secret, response);
  GroupElement k1 = Mul(state.secret, shifted);
  WrappedPayloads out;
  out.w0 = Wrap(DeriveKeys(0, state.announcement, response, k0), state.m0,
                state.padded_length);
  out.w1 = Wrap(DeriveKeys(1, state.announcement, response, k1), state.m1,
                state.padded_length);
  return out;
}

Bytes ReceiverOpen(const ReceiverState& state, const WrappedPayloads& payloads,
                   int index) {
  if (payloads.w0.size() != payloads.w1.size()) {
    throw Error(ErrorCode::kPayloadLengthMismatch,
                "wrapped payloads differ in length");
  }
  GroupElement shared = Mul(state.secret, state.announcement);
  WrapKeys keys =
      DeriveKeys(index, state.announcement, state.response, shared);
  return Unwrap(keys, index == 0 ? payloads.w0 : payloads.w1);
}

Bytes ReceiverFinish(const ReceiverState& state,
                     const WrappedPayloads& payloads) {
  return ReceiverOpen(state, payloads, state.choice ? 1 : 0);
}

}  // namespace ppbench::ot
