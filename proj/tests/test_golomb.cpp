// Copyright 2026 The chainsched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "chainsched/golomb.hpp"

using namespace chainsched;

TEST(Golomb, SmallRulers) {
  EXPECT_EQ(golomb_ruler(1), (std::vector<Time>{0}));
  EXPECT_EQ(golomb_ruler(2), (std::vector<Time>{0, 7}));
  EXPECT_EQ(golomb_ruler(3), (std::vector<Time>{0, 7, 13}));
}

TEST(Golomb, Predicate) {
  EXPECT_TRUE(is_golomb({0, 1, 3}));
  EXPECT_FALSE(is_golomb({0, 1, 2}));
  EXPECT_TRUE(is_golomb({0, 1, 4, 9, 11}));
  EXPECT_FALSE(is_golomb({0, 3, 3}));
  EXPECT_TRUE(is_golomb({}));
  EXPECT_TRUE(is_golomb({5}));
}

// Independent check: every difference of distinct ordered pairs is distinct.
TEST(Golomb, SweepAgainstAllPairs) {
  for (std::size_t n = 1; n <= 200; ++n) {
    const auto r = golomb_ruler(n);
    ASSERT_EQ(r.size(), n);
    EXPECT_EQ(r.front(), 0);
    EXPECT_LT(r.back(), 4 * static_cast<Time>(n * n));
    EXPECT_TRUE(std::is_sorted(r.begin(), r.end()));
    std::set<Time> diffs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) {
          ASSERT_TRUE(diffs.insert(r[i] - r[j]).second) << "n=" << n;
        }
  }
}

TEST(Golomb, RejectsZero) { EXPECT_THROW(golomb_ruler(0), InvalidParameter); }

TEST(Golomb, Primes) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(199));
  EXPECT_FALSE(is_prime(221));
}
