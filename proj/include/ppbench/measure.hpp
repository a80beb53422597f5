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

#ifndef PPBENCH_MEASURE_HPP_
#define PPBENCH_MEASURE_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace ppbench {

enum class Measure {
  kMean,
  kVariance,
  kMedian,
  kBestInClass,
  kMax,
  kBottomQuartile,
  kTopQuartile,
};

inline constexpr std::array<Measure, 7> kAllMeasures = {
    Measure::kMean,        Measure::kVariance,       Measure::kMedian,
    Measure::kBestInClass, Measure::kMax,            Measure::kBottomQuartile,
    Measure::kTopQuartile,
};

// The five measures obtained by rank-based selection, in step order 4..6C.
inline constexpr std::array<Measure, 5> kRankMeasures = {
    Measure::kMedian, Measure::kBestInClass, Measure::kMax,
    Measure::kBottomQuartile, Measure::kTopQuartile,
};

std::string_view MeasureName(Measure m);
std::optional<Measure> MeasureFromName(std::string_view name);
bool IsRankMeasure(Measure m);
std::size_t RankMeasureSlot(Measure m);

enum class Selector { kEqual, kAtLeast };

struct Selection {
  Selector op;
  std::size_t position;  // 1-based position in the ascending order

  bool Matches(std::size_t rank) const {
    return op == Selector::kEqual ? rank == position : rank >= position;
  }
};

constexpr std::size_t kDefaultMinPeers = 4;

// median (=, ceil(n/2)), best-in-class (>=, floor(3n/4 + 1)), max (=, n),
// bottom quartile (=, ceil(n/4)), top quartile (=, floor(3n/4 + 1)).
// Throws kPeerGroupTooSmall when n < min_peers, kInvalidArgument for mean and
// variance.
Selection MeasurePosition(Measure m, std::size_t n,
                          std::size_t min_peers = kDefaultMinPeers);

// Number of ranks selected by best-in-class: n - floor(3n/4 + 1) + 1.
std::size_t BestInClassMembers(std::size_t n);

// Step labels of the per-measure pipeline.
struct MeasureSteps {
  std::string_view selection;    // OT (rank measures only)
  std::string_view contribution; // rerandomised return / variance term
  std::string_view blinded;      // provider -> player E(v + r)
  std::string_view reveal;       // player -> provider v + r
  std::string_view tag;          // player -> provider MAC tag
  std::string_view result;       // provider -> player v
  std::string_view hash;         // provider -> player h(tags)
};

const MeasureSteps& StepsFor(Measure m);

}  // namespace ppbench

#endif  // PPBENCH_MEASURE_HPP_
