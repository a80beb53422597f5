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

#include "ppbench/counters.hpp"

#include <sstream>

namespace ppbench {

OpCounters& OpCounters::operator+=(const OpCounters& o) {
  encryptions += o.encryptions;
  decryptions += o.decryptions;
  exponentiations += o.exponentiations;
  multiplications += o.multiplications;
  additions += o.additions;
  inversions += o.inversions;
  values_sent += o.values_sent;
  comparison_decryptions += o.comparison_decryptions;
  return *this;
}

OpCounters StepCounters::Row(const std::string& row) const {
  auto it = rows_.find(row);
  return it == rows_.end() ? OpCounters{} : it->second;
}

OpCounters StepCounters::Total() const {
  OpCounters total;
  for (const auto& [row, c] : rows_) total += c;
  return total;
}

OpCounters ProviderClosedForm(std::size_t n) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1);
  OpCounters c;
  c.encryptions = pairs + 11 * n + 7;
  c.exponentiations = pairs + n;
  c.multiplications = 2 * pairs + 18 * n;
  c.additions = 7;
  c.inversions = pairs;
  c.values_sent = pairs + 26 * n;
  return c;
}

OpCounters PlayerClosedForm(std::size_t n) {
  OpCounters c;
  c.encryptions = 7;
  c.decryptions = 7;
  c.multiplications = 7;
  c.additions = 1;
  c.values_sent = 26;
  c.comparison_decryptions = n - 1;
  return c;
}

std::string CountersToText(const OpCounters& c) {
  std::ostringstream os;
  os << "E=" << c.encryptions << " D=" << c.decryptions
     << " Exp=" << c.exponentiations << " Mult=" << c.multiplications
     << " Add=" << c.additions << " Inv=" << c.inversions
     << " Sent=" << c.values_sent;
  if (c.comparison_decryptions > 0) {
    os << " D_rank=" << c.comparison_decryptions;
  }
  return os.str();
}

}  // namespace ppbench
