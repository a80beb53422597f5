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

#include <doctest.h>

#include "ppbench/bytes.hpp"
#include "ppbench/numeric.hpp"
#include "support.hpp"

using namespace ppbench;
using testing::CodeOf;

TEST_CASE("tiebreak bits") {
  CHECK(PlaintextDomain::TiebreakBits(1) == 1);
  CHECK(PlaintextDomain::TiebreakBits(2) == 2);
  CHECK(PlaintextDomain::TiebreakBits(4) == 3);
  CHECK(PlaintextDomain::TiebreakBits(5) == 4);
  CHECK(PlaintextDomain::TiebreakBits(40) == 7);
}

TEST_CASE("budget check") {
  PlaintextDomain d;
  CHECK_FALSE(CheckBudget(d, 4).has_value());
  CHECK_FALSE(CheckBudget(d, 300).has_value());

  SUBCASE("64-bit modulus fails the comparison rule") {
    d.modulus_bits = 64;
    auto v = CheckBudget(d, 4);
    REQUIRE(v.has_value());
    CHECK(v->rule == BudgetRule::kComparison);
    CHECK(CodeOf([&] { RequireBudget(d, 4); }) == ErrorCode::kBudgetExceeded);
  }
  SUBCASE("variance rule alone") {
    d.modulus_bits = 88;
    d.compare_blind_bits = 2;
    auto v = CheckBudget(d, 4);
    REQUIRE(v.has_value());
    CHECK(v->rule == BudgetRule::kVarianceTerm);
    d.modulus_bits = 90;
    CHECK_FALSE(CheckBudget(d, 4).has_value());
  }
  SUBCASE("bad parameters") {
    d.input_bits = 0;
    REQUIRE(CheckBudget(d, 4).has_value());
    CHECK(CheckBudget(d, 4)->rule == BudgetRule::kParameters);
  }
}

TEST_CASE("kpi parsing and printing") {
  CHECK(KpiValue::Parse("-12.5", 2).scaled() == -1250);
  CHECK(KpiValue::Parse("7", 2).scaled() == 700);
  CHECK(KpiValue::Parse("0.25", 2).scaled() == 25);
  CHECK(KpiValue::Parse("+3.1", 1).scaled() == 31);
  CHECK(CodeOf([] { KpiValue::Parse("1.234", 2); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { KpiValue::Parse("abc", 2); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { KpiValue::Parse("1.", 2); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { KpiValue::Parse("", 2); }) == ErrorCode::kInvalidArgument);
  CHECK(KpiValue(mpz_class(-5), 2).ToString() == "-0.05");
  CHECK(KpiValue(mpz_class(0), 2).ToString() == "0.00");
  CHECK(KpiValue(mpz_class(575), 2).ToString() == "5.75");
  CHECK(KpiValue(mpz_class(42), 0).ToString() == "42");
}

TEST_CASE("rounding half away from zero") {
  CHECK(KpiValue::FromRational(testing::Q(107, 16), 2).ToString() == "6.69");
  CHECK(KpiValue::FromRational(testing::Q(107, 16), 4).ToString() == "6.6875");
  CHECK(KpiValue::FromRational(testing::Q(5, 2), 0).ToString() == "3");
  CHECK(KpiValue::FromRational(testing::Q(-5, 2), 0).ToString() == "-3");
  CHECK(KpiValue::FromRational(testing::Q(1, 3), 4).ToString() == "0.3333");
  CHECK(KpiValue::FromRational(testing::Q(-1, 3), 4).ToString() == "-0.3333");
}

TEST_CASE("fixed-point encoding into Z_N") {
  const mpz_class n(1000003);
  PlaintextDomain d;
  d.input_bits = 16;
  d.decimal_places = 2;
  CHECK(EncodeKpi(KpiValue::Parse("5.75", 2), d, n).residue == 575);
  CHECK(EncodeKpi(KpiValue::Parse("-0.01", 2), d, n).residue == n - 1);
  CHECK(EncodeKpi(KpiValue::Parse("3", 0), d, n).residue == 300);
  CHECK(CodeOf([&] { EncodeKpi(KpiValue::Parse("1.234", 3), d, n); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(CodeOf([&] { EncodeKpi(KpiValue::Parse("655.36", 2), d, n); }) ==
        ErrorCode::kBudgetExceeded);
  CHECK(Centered(n - 1, n) == -1);
  CHECK(Centered(n / 2, n) == n / 2);
  CHECK(Centered(n / 2 + 1, n) == n / 2 + 1 - n);
}

TEST_CASE("encode then centered decode is the identity") {
  const mpz_class n = testing::CachedKeys(768).pub.n;
  PlaintextDomain d;
  Drbg rng = Drbg::FromLabel(7, "numeric-roundtrip");
  for (int i = 0; i < 2000; ++i) {
    mpz_class v = rng.UniformBits(d.input_bits);
    if (rng.Below(2)) v = -v;
    KpiValue kpi(v, d.decimal_places);
    CHECK(DecodeCentered(EncodeKpi(kpi, d, n), n, d.decimal_places) == kpi);
  }
}

TEST_CASE("big-integer hex is canonical") {
  CHECK(BigToHex(mpz_class(0)) == "0");
  CHECK(BigToHex(mpz_class(255)) == "ff");
  CHECK(BigFromHex("1f") == 31);
  CHECK(CodeOf([] { BigFromHex("01f"); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { BigFromHex("1F"); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { BigFromHex(""); }) == ErrorCode::kInvalidArgument);
  CHECK(ToHex(BigToBytes(mpz_class(258), 4)) == "00000102");
  CHECK(CodeOf([] { BigToBytes(mpz_class(65536), 2); }) == ErrorCode::kInvalidArgument);
  CHECK(CeilLog2(1) == 0);
  CHECK(CeilLog2(8) == 3);
  CHECK(CeilLog2(9) == 4);
}

TEST_CASE("drbg is deterministic and ranged") {
  Drbg a = Drbg::FromLabel(3, "x");
  Drbg b = Drbg::FromLabel(3, "x");
  Drbg c = Drbg::FromLabel(3, "y");
  const auto va = a.NextU64();
  CHECK(va == b.NextU64());
  CHECK(va != c.NextU64());
  const mpz_class lo(100), hi(107);
  for (int i = 0; i < 500; ++i) {
    mpz_class v = a.UniformRange(lo, hi);
    CHECK(v >= lo);
    CHECK(v < hi);
    CHECK(a.Below(3) < 3);
  }
}
