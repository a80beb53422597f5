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

#ifndef PPBENCH_BYTES_HPP_
#define PPBENCH_BYTES_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ppbench {

using Bytes = std::vector<std::uint8_t>;

std::string ToHex(std::span<const std::uint8_t> data);

// Accepts lowercase or uppercase hex of even length.
Bytes FromHex(std::string_view hex);

// Canonical big-integer text form: lowercase hex, big-endian, no leading
// zeros, and "0" for zero. Negative values are rejected.
std::string BigToHex(const mpz_class& value);

// Strict inverse of BigToHex; non-canonical input throws kInvalidArgument.
mpz_class BigFromHex(std::string_view hex);

// Fixed-width big-endian encoding. Throws kInvalidArgument if `value` does
// not fit in `width` bytes.
Bytes BigToBytes(const mpz_class& value, std::size_t width);
mpz_class BigFromBytes(std::span<const std::uint8_t> data);

// ceil(log2(n)) for n >= 1.
unsigned CeilLog2(std::size_t n);

}  // namespace ppbench

#endif  // PPBENCH_BYTES_HPP_
