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

#include "ppbench/numeric.hpp"

#include <sstream>

#include "ppbench/bytes.hpp"
#include "ppbench/errors.hpp"

namespace ppbench {

unsigned PlaintextDomain::TiebreakBits(std::size_t n) {
  return CeilLog2(n) + 1;
}

std::optional<BudgetViolation> CheckBudget(const PlaintextDomain& domain,
                                           std::size_t n) {
  if (n < 1) {
    return BudgetViolation{BudgetRule::kParameters, "peer group is empty"};
  }
  if (domain.input_bits == 0 || domain.input_bits > 62 ||
      domain.compare_blind_bits < 2) {
    return BudgetViolation{BudgetRule::kParameters,
                           "input_bits must be in [1, 62] and "
                           "compare_blind_bits at least 2"};
  }
  const unsigned log_n = CeilLog2(n);
  const unsigned ceiling = domain.modulus_bits < 1 ? 0 : domain.modulus_bits - 1;
  // A domain failing both rules reports the comparison rule.
  const unsigned tiebreak = PlaintextDomain::TiebreakBits(n);
  const unsigned comparison =
      domain.input_bits + tiebreak + domain.compare_blind_bits + 2;
  if (comparison >= ceiling) {
    std::ostringstream os;
    os << "comparison budget: " << domain.input_bits << "+" << tiebreak << "+"
       << domain.compare_blind_bits << "+2 = " << comparison
       << " >= " << ceiling;
    return BudgetViolation{BudgetRule::kComparison, os.str()};
  }
  const unsigned variance =
      2 * (domain.input_bits + log_n) + log_n + 2;
  if (variance >= ceiling) {
    std::ostringstream os;
    os << "variance-term budget: 2*(" << domain.input_bits << "+" << log_n
       << ")+" << log_n << "+2 = " << variance << " >= " << ceiling;
    return BudgetViolation{BudgetRule::kVarianceTerm, os.str()};
  }
  return std::nullopt;
}

void RequireBudget(const PlaintextDomain& domain, std::size_t n) {
  if (auto violation = CheckBudget(domain, n)) {
    throw Error(ErrorCode::kBudgetExceeded, violation->detail);
  }
}

mpz_class PowerOfTen(unsigned exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}

KpiValue KpiValue::Parse(std::string_view text, unsigned places) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }
  auto dot = body.find('.');
  std::string_view whole = body.substr(0, dot);
  std::string_view frac =
      dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  auto all_digits = [](std::string_view s) {
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  if (whole.empty() || !all_digits(whole) || !all_digits(frac) ||
      (dot != std::string_view::npos && frac.empty())) {
    throw Error(ErrorCode::kInvalidArgument,
                "not a decimal number: '" + std::string(text) + "'");
  }
  if (frac.size() > places) {
    throw Error(ErrorCode::kInvalidArgument,
                "'" + std::string(text) + "' has more than " +
                    std::to_string(places) + " decimal places");
  }
  std::string digits(whole);
  digits.append(frac);
  digits.append(places - frac.size(), '0');
  mpz_class scaled(digits, 10);
  if (negative) scaled = -scaled;
  return KpiValue(scaled, places);
}

KpiValue KpiValue::FromRational(const mpq_class& value, unsigned places) {
  mpz_class num = value.get_num() * PowerOfTen(places);
  const mpz_class& den = value.get_den();
  // Round half away from zero: floor((2|num| + den) / (2 den)) with sign.
  mpz_class magnitude = abs(num);
  mpz_class rounded = (2 * magnitude + den) / (2 * den);
  if (sgn(num) < 0) rounded = -rounded;
  return KpiValue(rounded, places);
}

mpq_class KpiValue::ToRational() const {
  mpq_class out(scaled_, PowerOfTen(places_));
  out.canonicalize();
  return out;
}

std::string KpiValue::ToString() const {
  mpz_class magnitude = abs(scaled_);
  std::string digits = magnitude.get_str(10);
  if (places_ > 0) {
    if (digits.size() <= places_) {
      digits.insert(0, places_ - digits.size() + 1, '0');
    }
    digits.insert(digits.size() - places_, ".");
  }
  if (sgn(scaled_) < 0) digits.insert(0, "-");
  return digits;
}

mpz_class Reduce(const mpz_class& value, const mpz_class& modulus) {
  mpz_class out;
  mpz_mod(out.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

EncodedValue EncodeKpi(const KpiValue& value, const PlaintextDomain& domain,
                       const mpz_class& modulus) {
  if (value.places() > domain.decimal_places) {
    throw Error(ErrorCode::kInvalidArgument,
                "value carries more decimal places than the domain");
  }
  mpz_class scaled =
      value.scaled() * PowerOfTen(domain.decimal_places - value.places());
  mpz_class limit = mpz_class(1) << domain.input_bits;
  if (abs(scaled) >= limit) {
    throw Error(ErrorCode::kBudgetExceeded,
                "|" + value.ToString() + " * 10^" +
                    std::to_string(domain.decimal_places) + "| >= 2^" +
                    std::to_string(domain.input_bits));
  }
  if (abs(scaled) * 2 >= modulus) {
    throw Error(ErrorCode::kBudgetExceeded, "value does not fit the modulus");
  }
  return EncodedValue{Reduce(scaled, modulus)};
}

mpz_class Centered(const mpz_class& residue, const mpz_class& modulus) {
  if (2 * residue < modulus) return residue;
  return residue - modulus;
}

KpiValue DecodeCentered(const EncodedValue& value, const mpz_class& modulus,
                        unsigned places) {
  return KpiValue(Centered(value.residue, modulus), places);
}

}  // namespace ppbench
