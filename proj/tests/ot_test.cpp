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

#include <doctest.h>

#include "ppbench/bytes.hpp"
#include "ppbench/ot.hpp"
#include "support.hpp"

using namespace ppbench;
using namespace ppbench::ot;
using testing::CodeOf;

namespace {

Bytes Text(const std::string& s) { return Bytes(s.begin(), s.end()); }

}  // namespace

TEST_CASE("receiver gets exactly the chosen message") {
  Drbg sender_rng = Drbg::FromLabel(1, "ot-sender");
  Drbg receiver_rng = Drbg::FromLabel(1, "ot-receiver");
  for (int trial = 0; trial < 40; ++trial) {
    const bool choice = trial % 2 == 1;
    Bytes m0 = Text("left-" + std::to_string(trial));
    Bytes m1 = Text("right payload " + std::to_string(trial));
    auto [sender, announce] = SenderStart(m0, m1, sender_rng, 64);
    auto [receiver, response] = ReceiverRespond(announce, choice, receiver_rng);
    WrappedPayloads w = SenderFinish(sender, response);
    CHECK(w.w0.size() == w.w1.size());
    CHECK(ReceiverFinish(receiver, w) == (choice ? m1 : m0));
    CHECK(CodeOf([&] { ReceiverOpen(receiver, w, choice ? 0 : 1); }) ==
          ErrorCode::kUnwrapFailure);
  }
}

TEST_CASE("ot rejects malformed input") {
  Drbg rng = Drbg::FromLabel(2, "ot-errors");
  GroupElement zero{};
  CHECK_FALSE(IsValidElement(zero));
  GroupElement junk;
  junk.fill(0xff);
  CHECK_FALSE(IsValidElement(junk));
  CHECK(CodeOf([&] { ReceiverRespond(junk, false, rng); }) ==
        ErrorCode::kInvalidGroupElement);

  auto [sender, announce] = SenderStart(Text("a"), Text("b"), rng);
  CHECK(IsValidElement(announce));
  CHECK(CodeOf([&] { SenderFinish(sender, junk); }) ==
        ErrorCode::kInvalidGroupElement);
  CHECK(CodeOf([&] { SenderStart(Text("too long"), Text("b"), rng, 4); }) ==
        ErrorCode::kPayloadLengthMismatch);

  auto [receiver, response] = ReceiverRespond(announce, true, rng);
  WrappedPayloads w = SenderFinish(sender, response);
  WrappedPayloads uneven = w;
  uneven.w0.pop_back();
  CHECK(CodeOf([&] { ReceiverFinish(receiver, uneven); }) ==
        ErrorCode::kPayloadLengthMismatch);
  WrappedPayloads flipped = w;
  flipped.w1[0] ^= 1;
  CHECK(CodeOf([&] { ReceiverFinish(receiver, flipped); }) ==
        ErrorCode::kUnwrapFailure);
}
