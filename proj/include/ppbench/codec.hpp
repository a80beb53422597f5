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

#ifndef PPBENCH_CODEC_HPP_
#define PPBENCH_CODEC_HPP_

#include <string>
#include <string_view>

#include "ppbench/messages.hpp"

// JSON wire form of protocol messages:
//
//   {"kind":"rank_vector","payload":{"c":["1f2e",...]},"phase":"...",
//    "recipient":"p1","sender":"provider","sender_role":"provider",
//    "session":"s1","step":"3"}
//
// Keys are sorted and there is no whitespace, so the encoding is canonical.
// Payload fields per kind:
//   c       input, blinded_sum, rerandomized, variance_term, blinded_measure
//           (one big integer); rank_vector (array)
//   v       blinded_plain, result
//   A / B   ot_announce / ot_response (32-byte group element)
//   w0, w1  ot_payloads
//   tag     mac_tag
//   h       tag_hash
// Big integers are minimal lowercase hex; byte strings are lowercase hex of
// their exact length.
namespace ppbench::codec {

std::string EncodeMessage(const WireMessage& msg);

// kSchemaViolation with the path of the offending field, e.g.
// "payload.c[3]" or "step".
WireMessage DecodeMessage(std::string_view text);

}  // namespace ppbench::codec

#endif  // PPBENCH_CODEC_HPP_
