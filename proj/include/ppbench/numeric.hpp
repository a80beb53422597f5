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

#ifndef PPBENCH_NUMERIC_HPP_
#define PPBENCH_NUMERIC_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace ppbench {

// Bit budget of the plaintext ring Z_N. Every homomorphic intermediate of the
// benchmarking protocol must stay inside (-N/2, N/2) so that centered decoding
// recovers the true signed integer.
struct PlaintextDomain {
  unsigned modulus_bits = 768;
  unsigned input_bits = 40;
  unsigned compare_blind_bits = 64;
  unsigned decimal_places = 2;

  // ceil(log2(n)) + 1: room for the tie-breaking suffix appended to every
  // comparand.
  static unsigned TiebreakBits(std::size_t n);
};

enum class BudgetRule { kVarianceTerm, kComparison, kParameters };

struct BudgetViolation {
  BudgetRule rule;
  std::string detail;
};

// Returns nothing when both inequalities hold for a peer group of size n:
//   2*(input_bits + ceil(log2 n)) + ceil(log2 n) + 2 < modulus_bits - 1
//   input_bits + tiebreak_bits(n) + compare_blind_bits + 2 < modulus_bits - 1
std::optional<BudgetViolation> CheckBudget(const PlaintextDomain& domain,
                                           std::size_t n);
// Throws kBudgetExceeded carrying the violation text.
void RequireBudget(const PlaintextDomain& domain, std::size_t n);

// A signed fixed-point number: scaled() / 10^places().
class KpiValue {
 public:
  KpiValue() = default;
  KpiValue(mpz_class scaled, unsigned places)
      : scaled_(std::move(scaled)), places_(places) {}

  // Parses "-12.5", "7", "0.25". More than `places` fractional digits is an
  // error; fewer are zero-extended.
  static KpiValue Parse(std::string_view text, unsigned places);
  // Rounds num/den half away from zero to `places` digits.
  static KpiValue FromRational(const mpq_class& value, unsigned places);

  const mpz_class& scaled() const { return scaled_; }
  unsigned places() const { return places_; }
  mpq_class ToRational() const;
  std::string ToString() const;

  friend bool operator==(const KpiValue& a, const KpiValue& b) {
    return a.places_ == b.places_ && a.scaled_ == b.scaled_;
  }

 private:
  mpz_class scaled_;
  unsigned places_ = 0;
};

struct EncodedValue {
  mpz_class residue;

  friend bool operator==(const EncodedValue& a, const EncodedValue& b) {
    return a.residue == b.residue;
  }
};

mpz_class PowerOfTen(unsigned exponent);

// Maps v * 10^d into [0, N); negative values land in the upper half.
EncodedValue EncodeKpi(const KpiValue& value, const PlaintextDomain& domain,
                       const mpz_class& modulus);

// Residue r -> r if 2r < N else r - N.
mpz_class Centered(const mpz_class& residue, const mpz_class& modulus);

KpiValue DecodeCentered(const EncodedValue& value, const mpz_class& modulus,
                        unsigned places);

// Reduces any integer into [0, N).
mpz_class Reduce(const mpz_class& value, const mpz_class& modulus);

}  // namespace ppbench

#endif  // PPBENCH_NUMERIC_HPP_
