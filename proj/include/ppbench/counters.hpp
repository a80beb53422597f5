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

#ifndef PPBENCH_COUNTERS_HPP_
#define PPBENCH_COUNTERS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

namespace ppbench {

// Operation tallies in the columns of the per-participant complexity table:
// Paillier encryptions (including the E(0) of a rerandomisation),
// decryptions, ciphertext exponentiations, ciphertext multiplications,
// plaintext additions/subtractions, modular inversions and protocol values
// sent. Plaintext multiplications by the player (step 13) are counted as
// multiplications, as the table does.
//
// comparison_decryptions holds the n - 1 decryptions a player performs to
// derive its rank. The complexity table has no player entry for that work,
// so it is kept out of `decryptions` and reported separately.
struct OpCounters {
  std::uint64_t encryptions = 0;
  std::uint64_t decryptions = 0;
  std::uint64_t exponentiations = 0;
  std::uint64_t multiplications = 0;
  std::uint64_t additions = 0;
  std::uint64_t inversions = 0;
  std::uint64_t values_sent = 0;
  std::uint64_t comparison_decryptions = 0;

  OpCounters& operator+=(const OpCounters& other);
  friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

// Counters broken down by complexity-table row ("2", "3", "4-6C", ...).
class StepCounters {
 public:
  OpCounters& Row(const std::string& row) { return rows_[row]; }
  const std::map<std::string, OpCounters>& rows() const { return rows_; }
  OpCounters Row(const std::string& row) const;
  OpCounters Total() const;

  friend bool operator==(const StepCounters&, const StepCounters&) = default;

 private:
  std::map<std::string, OpCounters> rows_;
};

// Exact per-session totals as functions of n. The comparison matrix has no
// self-comparisons, and tie-breaking costs n encryptions, exponentiations
// and multiplications.
//   encryptions      n(n-1) + 11n + 7
//   exponentiations  n(n-1) + n
//   multiplications  2n(n-1) + 18n
//   additions        7
//   inversions       n(n-1)
//   values sent      n(n-1) + 26n
OpCounters ProviderClosedForm(std::size_t n);

// Per player: 7 encryptions (step 1, five rerandomisations, step 13),
// 7 decryptions (steps 7, 19, 21, 23, 25, 25B, 25C), 7 multiplications,
// 1 addition, 26 values sent, plus n - 1 comparison decryptions.
OpCounters PlayerClosedForm(std::size_t n);

std::string CountersToText(const OpCounters& c);

}  // namespace ppbench

#endif  // PPBENCH_COUNTERS_HPP_
