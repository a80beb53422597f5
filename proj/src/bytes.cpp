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

#include "ppbench/bytes.hpp"

#include <algorithm>

#include "ppbench/errors.hpp"

namespace ppbench {
namespace {

int HexDigit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string ToHex(std::span<const std::uint8_t> data) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (std::uint8_t b : data) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0f]);
  }
  return out;
}

Bytes FromHex(std::string_view hex) {
  if (hex.size() % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument, "odd-length hex string");
  }
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int hi = HexDigit(hex[2 * i]);
    int lo = HexDigit(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) {
      throw Error(ErrorCode::kInvalidArgument, "invalid hex digit");
    }
    out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return out;
}

std::string BigToHex(const mpz_class& value) {
  if (sgn(value) < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative value has no hex form");
  }
  return value.get_str(16);
}

mpz_class BigFromHex(std::string_view hex) {
  if (hex.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty big-integer hex");
  }
  for (char c : hex) {
    if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) {
      throw Error(ErrorCode::kInvalidArgument,
                  "big-integer hex must be lowercase hex digits");
    }
  }
  if (hex.size() > 1 && hex[0] == '0') {
    throw Error(ErrorCode::kInvalidArgument,
                "big-integer hex has leading zeros");
  }
  return mpz_class(std::string(hex), 16);
}

Bytes BigToBytes(const mpz_class& value, std::size_t width) {
  if (sgn(value) < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative value has no bytes");
  }
  std::size_t needed = (mpz_sizeinbase(value.get_mpz_t(), 2) + 7) / 8;
  if (sgn(value) == 0) needed = 0;
  if (needed > width) {
    throw Error(ErrorCode::kInvalidArgument, "value wider than field");
  }
  Bytes out(width, 0);
  std::size_t written = 0;
  if (needed > 0) {
    mpz_export(out.data() + (width - needed), &written, 1, 1, 1, 0,
               value.get_mpz_t());
  }
  return out;
}

mpz_class BigFromBytes(std::span<const std::uint8_t> data) {
  mpz_class out;
  if (!data.empty()) {
    mpz_import(out.get_mpz_t(), data.size(), 1, 1, 1, 0, data.data());
  }
  return out;
}

unsigned CeilLog2(std::size_t n) {
  unsigned bits = 0;
  std::size_t v = 1;
  while (v < n) {
    v <<= 1;
    ++bits;
  }
  return bits;
}

}  // namespace ppbench
