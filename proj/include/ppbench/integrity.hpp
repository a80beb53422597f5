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

#ifndef PPBENCH_INTEGRITY_HPP_
#define PPBENCH_INTEGRITY_HPP_

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ppbench/digest.hpp"
#include "ppbench/measure.hpp"

namespace ppbench::integrity {

using MacKey = std::array<std::uint8_t, 32>;
using Tag = Digest256;
using TagHash = Digest256;

// Bytes of the fixed-width blinded residue: ceil(modulus_bits / 8).
inline std::size_t ResidueWidth(unsigned modulus_bits) {
  return (modulus_bits + 7) / 8;
}

// HMAC-SHA256(key, residue as `width` big-endian bytes || uint32_be(index)).
Tag MacTag(const MacKey& key, const mpz_class& blinded, std::uint32_t index,
           std::size_t width);

struct TagSet {
  Measure measure;
  std::vector<Tag> tags;  // tags[k] belongs to player index k + 1
};

// SHA-256 over tag_1 || ... || tag_n. kWrongTagCount if the set does not
// hold exactly n tags.
TagHash HashTags(const TagSet& tags, std::size_t n);

struct ValidationBit {
  Measure measure;
  bool ok;
};

// Recomputes every player's tag from this player's own blinded value and
// compares the resulting hash with the provider's broadcast.
ValidationBit Validate(Measure measure, const TagHash& received,
                       const MacKey& key, const mpz_class& blinded,
                       std::size_t n, std::size_t width);

}  // namespace ppbench::integrity

#endif  // PPBENCH_INTEGRITY_HPP_
