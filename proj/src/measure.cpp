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

#include "ppbench/measure.hpp"

#include <string>

#include "ppbench/errors.hpp"

namespace ppbench {

std::string_view MeasureName(Measure m) {
  switch (m) {
    case Measure::kMean: return "mean";
    case Measure::kVariance: return "variance";
    case Measure::kMedian: return "median";
    case Measure::kBestInClass: return "best_in_class";
    case Measure::kMax: return "max";
    case Measure::kBottomQuartile: return "bottom_quartile";
    case Measure::kTopQuartile: return "top_quartile";
  }
  return "unknown";
}

std::optional<Measure> MeasureFromName(std::string_view name) {
  for (Measure m : kAllMeasures) {
    if (MeasureName(m) == name) return m;
  }
  return std::nullopt;
}

bool IsRankMeasure(Measure m) {
  return m != Measure::kMean && m != Measure::kVariance;
}

std::size_t RankMeasureSlot(Measure m) {
  for (std::size_t i = 0; i < kRankMeasures.size(); ++i) {
    if (kRankMeasures[i] == m) return i;
  }
  throw Error(ErrorCode::kInvalidArgument,
              std::string(MeasureName(m)) + " is not rank based");
}

Selection MeasurePosition(Measure m, std::size_t n, std::size_t min_peers) {
  if (n < 1 || n < min_peers) {
    throw Error(ErrorCode::kPeerGroupTooSmall,
                "peer group of " + std::to_string(n) + " is below minimum " +
                    std::to_string(min_peers));
  }
  switch (m) {
    case Measure::kMedian: return {Selector::kEqual, (n + 1) / 2};
    case Measure::kBestInClass: return {Selector::kAtLeast, 3 * n / 4 + 1};
    case Measure::kMax: return {Selector::kEqual, n};
    case Measure::kBottomQuartile: return {Selector::kEqual, (n + 3) / 4};
    case Measure::kTopQuartile: return {Selector::kEqual, 3 * n / 4 + 1};
    default:
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(MeasureName(m)) + " has no sorted position");
  }
}

std::size_t BestInClassMembers(std::size_t n) {
  return n - (3 * n / 4 + 1) + 1;
}

const MeasureSteps& StepsFor(Measure m) {
  static const MeasureSteps kMean{"", "1", "2", "7", "8", "9", "18"};
  static const MeasureSteps kVariance{"", "13", "14", "19", "20", "27", "31"};
  static const MeasureSteps kMedian{"4", "10", "15", "21", "22", "28", "32"};
  static const MeasureSteps kBic{"5", "11", "16", "23", "24", "29", "33"};
  static const MeasureSteps kMax{"6", "12", "17", "25", "26", "30", "34"};
  static const MeasureSteps kBq{"6B", "12B", "17B", "25B", "26B", "30B", "34B"};
  static const MeasureSteps kTq{"6C", "12C", "17C", "25C", "26C", "30C", "34C"};
  switch (m) {
    case Measure::kMean: return kMean;
    case Measure::kVariance: return kVariance;
    case Measure::kMedian: return kMedian;
    case Measure::kBestInClass: return kBic;
    case Measure::kMax: return kMax;
    case Measure::kBottomQuartile: return kBq;
    case Measure::kTopQuartile: return kTq;
  }
  return kMean;
}

}  // namespace ppbench
