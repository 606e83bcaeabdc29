// Copyright 2026 The Tchouk Authors
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

#include "tchouk/stone_count.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"

namespace tchouk {
namespace {

TEST(StoneCountTest, ArithmeticMatchesBuiltinsBelow64Bits) {
  oracle::Gen gen(11);
  for (int t = 0; t < 2000; ++t) {
    const std::uint64_t a = gen.uniform(0, 1ull << 31), b = gen.uniform(1, 1ull << 31);
    EXPECT_EQ(StoneCount{a} + StoneCount{b}, StoneCount{a + b});
    EXPECT_EQ(StoneCount{a} * StoneCount{b}, StoneCount{a * b});
    EXPECT_EQ(StoneCount{a} / StoneCount{b}, StoneCount{a / b});
    EXPECT_EQ(StoneCount{a} % StoneCount{b}, StoneCount{a % b});
    EXPECT_EQ(gcd(StoneCount{a}, StoneCount{b}), StoneCount{oracle::gcd(a, b)});
  }
}

TEST(StoneCountTest, OverflowThrowsInsteadOfWrapping) {
  EXPECT_THROW(StoneCount::max() + StoneCount{1}, OverflowError);
  EXPECT_THROW(StoneCount::max() * StoneCount{2}, OverflowError);
  EXPECT_THROW(StoneCount{3} - StoneCount{4}, OverflowError);
  EXPECT_THROW(StoneCount{3} / StoneCount{0}, std::domain_error);
  EXPECT_THROW((void)StoneCount::max().to_u64(), OverflowError);
}

TEST(StoneCountTest, DecimalRoundTrip) {
  const std::string max = "340282366920938463463374607431768211455";
  EXPECT_EQ(StoneCount::max().to_string(), max);
  EXPECT_EQ(StoneCount::parse(max), StoneCount::max());
  EXPECT_EQ(StoneCount::parse("0").to_string(), "0");
  EXPECT_THROW(StoneCount::parse("340282366920938463463374607431768211456"), OverflowError);
  EXPECT_THROW(StoneCount::parse(""), std::invalid_argument);
  EXPECT_THROW(StoneCount::parse("-1"), std::invalid_argument);
  EXPECT_THROW(StoneCount::parse("12a"), std::invalid_argument);
  std::ostringstream os;
  os << StoneCount{420};
  EXPECT_EQ(os.str(), "420");
}

TEST(StoneCountTest, LcmRange) {
  EXPECT_EQ(lcm_range(1), StoneCount{1});
  EXPECT_EQ(lcm_range(7), StoneCount{420});
  for (std::uint64_t k = 2; k <= 40; ++k) EXPECT_EQ(lcm_range(k), StoneCount{oracle::lcm_upto(k)}) << k;
  EXPECT_NO_THROW(lcm_range(88));
  try {
    lcm_range(89);
    FAIL() << "expected overflow";
  } catch (const OverflowError& e) {
    EXPECT_NE(std::string(e.what()).find("lcm(2..88)"), std::string::npos) << e.what();
  }
}

TEST(StoneCountTest, RoundUpToMultiple) {
  EXPECT_EQ(round_up_to_multiple(StoneCount{7}, StoneCount{3}), StoneCount{9});
  EXPECT_EQ(round_up_to_multiple(StoneCount{9}, StoneCount{3}), StoneCount{9});
  EXPECT_EQ(round_up_to_multiple(StoneCount{0}, StoneCount{5}), StoneCount{0});
}

}  // namespace
}  // namespace tchouk
