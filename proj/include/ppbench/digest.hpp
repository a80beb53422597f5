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

#ifndef PPBENCH_DIGEST_HPP_
#define PPBENCH_DIGEST_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "ppbench/bytes.hpp"

namespace ppbench {

using Digest256 = std::array<std::uint8_t, 32>;

// Thin wrappers over OpenSSL EVP: SHA-256, HMAC-SHA256 and SHAKE256.
Digest256 Sha256(std::span<const std::uint8_t> data);
Digest256 HmacSha256(std::span<const std::uint8_t> key,
                     std::span<const std::uint8_t> data);
Bytes Shake256(std::span<const std::uint8_t> data, std::size_t out_len);

// Constant-time equality for equal-length buffers.
bool ConstantTimeEqual(std::span<const std::uint8_t> a,
                       std::span<const std::uint8_t> b);

}  // namespace ppbench

#endif  // PPBENCH_DIGEST_HPP_
