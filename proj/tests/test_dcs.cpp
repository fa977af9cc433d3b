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
#include <functional>
#include <random>

#include "chainsched/dcs.hpp"
#include "chainsched/oracle.hpp"
#include "chainsched/random.hpp"

using namespace chainsched;

namespace {

constexpr Time kL = 1'000'000'000;

}  // namespace

TEST(ChainOffsets, Examples) {
  EXPECT_EQ(chain_offsets(Chain{0, 10, {2}}), (std::vector<Time>{0, 3}));
  EXPECT_EQ(chain_offsets(Chain{0, 10, {}}), (std::vector<Time>{0}));
  EXPECT_EQ(chain_offsets(Chain{0, 3 * kL, {kL, kL}}), (std::vector<Time>{0, kL + 1, 2 * kL + 2}));
}

TEST(GapSet, Examples) {
  EXPECT_EQ(build_gap_set(std::vector<Time>{0, 3}, std::vector<Time>{0, 3}), (GapSet{-3, 0, 3}));
  EXPECT_EQ(build_gap_set(std::vector<Time>{0}, std::vector<Time>{0}), (GapSet{0}));
  EXPECT_EQ(build_gap_set(Chain{0, kL + 3, {kL}}, Chain{0, kL + 3, {kL}}), (GapSet{-(kL + 1), 0, kL + 1}));
  EXPECT_EQ(build_gap_set(std::vector<Time>{0, 1, 5}, std::vector<Time>{0, 2}), (GapSet{-5, -3, -1, 0, 1, 2}));
}

TEST(GapIntervals, SkipsEmptyInnerIntervals) {
  const auto iv = gap_intervals({-1, 0, 4});
  ASSERT_EQ(iv.size(), 3u);
  EXPECT_FALSE(iv[0].lo);
  EXPECT_EQ(iv[0].hi, -2);
  EXPECT_EQ(iv[1].lo, 1);
  EXPECT_EQ(iv[1].hi, 3);
  EXPECT_EQ(iv[2].lo, 5);
  EXPECT_FALSE(iv[2].hi);
}

// Every integer lies in exactly one interval or is a gap value.
TEST(GapIntervals, PartitionComplementOfGaps) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    std::vector<Time> a{0}, b{0};
    for (int j = 0; j < static_cast<int>(rng() % 4); ++j) a.push_back(a.back() + 1 + static_cast<Time>(rng() % 4));
    for (int j = 0; j < static_cast<int>(rng() % 4); ++j) b.push_back(b.back() + 1 + static_cast<Time>(rng() % 4));
    const GapSet gaps = build_gap_set(a, b);
    EXPECT_LE(gaps.size(), a.size() * b.size());
    const auto iv = gap_intervals(gaps);
    for (Time v = -30; v <= 30; ++v) {
      int hits = 0;
      for (const auto& x : iv) hits += x.contains(v);
      const bool forbidden = std::binary_search(gaps.begin(), gaps.end(), v);
      EXPECT_EQ(hits, forbidden ? 0 : 1) << "v=" << v;
    }
  }
}

TEST(DifferenceSystem, Examples) {
  DifferenceSystem ok;
  ok.variable_count = 3;
  ok.add(1, 2, -1);
  ok.add(2, 1, 5);
  ok.add(1, 0, 10);
  ok.add(0, 1, 0);
  const auto x = solve_difference_system(ok);
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], 0);
  EXPECT_TRUE(ok.satisfied_by(*x));

  DifferenceSystem cycle;
  cycle.variable_count = 3;
  cycle.add(1, 2, -1);
  cycle.add(2, 1, 0);
  EXPECT_FALSE(solve_difference_system(cycle));
}

TEST(DifferenceSystem, RandomSystemsSubstituteAndCheck) {
  std::mt19937_64 rng(8);
  int solved = 0;
  for (int i = 0; i < 500; ++i) {
    DifferenceSystem s;
    s.variable_count = 1 + rng() % 5;
    const int count = static_cast<int>(rng() % 10);
    for (int j = 0; j < count; ++j)
      s.add(rng() % s.variable_count, rng() % s.variable_count, static_cast<Time>(rng() % 21) - 10);
    const auto x = solve_difference_system(s);
    // Independent check: any integer solution within [-100, 100]^k with x0 = 0.
    bool brute = false;
    if (s.variable_count <= 3) {
      std::vector<Time> y(s.variable_count, 0);
      const int free = static_cast<int>(s.variable_count) - 1;
      long total = 1;
      for (int v = 0; v < free; ++v) total *= 201;
      for (long code = 0; code < total && !brute; ++code) {
        long c = code;
        for (int v = 1; v <= free; ++v) {
          y[v] = c % 201 - 100;
          c /= 201;
        }
        brute = s.satisfied_by(y);
      }
      EXPECT_EQ(x.has_value(), brute) << i;
    }
    if (x) {
      ++solved;
      EXPECT_EQ((*x)[0], 0);
      EXPECT_TRUE(s.satisfied_by(*x));
    }
  }
  EXPECT_GT(solved, 0);
}

TEST(Dcs, SingleChainIsBoundCheck) {
  EXPECT_TRUE(dcs_solve(Instance(1, DelayMode::Exact, {Chain{2, 6, {2}}})));
  EXPECT_FALSE(dcs_solve(Instance(1, DelayMode::Exact, {Chain{2, 5, {2}}})));
}

TEST(Dcs, BinaryScaleDelays) {
  const Instance yes(1, DelayMode::Exact, {Chain{0, kL + 3, {kL}}, Chain{0, kL + 3, {kL}}});
  const auto s = dcs_solve(yes);
  ASSERT_TRUE(s);
  EXPECT_TRUE(verify_schedule(yes, *s).feasible());
  EXPECT_EQ(s->starts, (std::vector<std::vector<Time>>{{0, kL + 1}, {1, kL + 2}}));

  const Instance no(1, DelayMode::Exact, {Chain{0, kL + 2, {kL}}, Chain{kL + 1, 2 * kL + 3, {kL}}});
  EXPECT_FALSE(dcs_solve(no));
}

TEST(Dcs, RefusesOtherSettings) {
  EXPECT_THROW(dcs_solve(Instance(2, DelayMode::Exact, {Chain{0, 3, {}}})), InvalidParameter);
  EXPECT_THROW(dcs_solve(Instance(1, DelayMode::Minimum, {Chain{0, 3, {}}})), InvalidParameter);
}

TEST(Dcs, EmptyInstance) {
  const auto s = dcs_solve(Instance(1, DelayMode::Exact, {}));
  ASSERT_TRUE(s);
  EXPECT_TRUE(s->starts.empty());
}

// The three start conditions hold exactly when the expanded schedule verifies.
TEST(StartConditions, MatchVerifierOnAllStartTuples) {
  std::mt19937_64 rng(14);
  RandomInstanceParams p;
  p.min_machines = p.max_machines = 1;
  for (int i = 0; i < 150; ++i) {
    const Instance inst = random_instance(rng, p);
    std::vector<Time> x(inst.chain_count());
    std::function<void(std::size_t)> walk = [&](std::size_t c) {
      if (c == inst.chain_count()) {
        Schedule s;
        for (std::size_t j = 0; j < x.size(); ++j) {
          std::vector<Time> times;
          for (Time o : chain_offsets(inst.chain(j))) times.push_back(x[j] + o);
          s.starts.push_back(times);
        }
        ASSERT_EQ(start_conditions_hold(inst, x), verify_schedule(inst, s).feasible());
        return;
      }
      const Chain& ch = inst.chain(c);
      for (Time t = ch.release - 1; t <= ch.deadline; ++t) {
        x[c] = t;
        walk(c + 1);
      }
    };
    walk(0);
  }
}

TEST(Dcs, AgreesWithOracle) {
  std::mt19937_64 rng(15);
  RandomInstanceParams p;
  p.min_machines = p.max_machines = 1;
  p.max_chains = 4;
  for (int i = 0; i < 400; ++i) {
    const Instance inst = random_instance(rng, p);
    DcsStats st;
    const auto s = dcs_solve(inst, &st);
    ASSERT_EQ(s.has_value(), oracle_schedule(inst).has_value()) << i;
    if (s) {
      EXPECT_TRUE(verify_schedule(inst, *s).feasible());
    }
  }
}
