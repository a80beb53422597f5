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

#include "ppbench/integrity.hpp"

#include <string>

#include "ppbench/bytes.hpp"
#include "ppbench/errors.hpp"

namespace ppbench::integrity {

Tag MacTag(const MacKey& key, const mpz_class& blinded, std::uint32_t index,
           std::size_t width) {
  Bytes message = BigToBytes(blinded, width);
  for (int shift = 24; shift >= 0; shift -= 8) {
    message.push_back(static_cast<std::uint8_t>(index >> shift));
  }
  return HmacSha256(key, message);
}

TagHash HashTags(const TagSet& tags, std::size_t n) {
  if (tags.tags.size() != n) {
    throw Error(ErrorCode::kWrongTagCount,
                std::string(MeasureName(tags.measure)) + ": " +
                    std::to_string(tags.tags.size()) + " tags for " +
                    std::to_string(n) + " players");
  }
  Bytes joined;
  joined.reserve(n * sizeof(Tag));
  for (const Tag& t : tags.tags) joined.insert(joined.end(), t.begin(), t.end());
  return Sha256(joined);
}

ValidationBit Validate(Measure measure, const TagHash& received,
                       const MacKey& key, const mpz_class& blinded,
                       std::size_t n, std::size_t width) {
  TagSet expected{measure, {}};
  expected.tags.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    expected.tags.push_back(
        MacTag(key, blinded, static_cast<std::uint32_t>(i), width));
  }
  TagHash local = HashTags(expected, n);
  return ValidationBit{measure, ConstantTimeEqual(local, received)};
}

}  // namespace ppbench::integrity
