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
#include <random>
#include <set>

#include "chainsched/dp.hpp"
#include "chainsched/oracle.hpp"
#include "chainsched/random.hpp"

using namespace chainsched;

TEST(Dp, EmptyInstanceFeasible) {
  const auto s = dp_solve(Instance(1, DelayMode::Exact, {}));
  ASSERT_TRUE(s);
  EXPECT_TRUE(s->starts.empty());
}

TEST(Dp, ThreeJobsAtTimeZero) {
  std::vector<Chain> chains(3, Chain{0, 1, {}});
  for (DelayMode mode : {DelayMode::Exact, DelayMode::Minimum}) {
    EXPECT_FALSE(dp_solve(Instance(2, mode, chains)));
    EXPECT_TRUE(dp_solve(Instance(3, mode, chains)));
  }
}

TEST(Dp, InfeasibleChainAlone) {
  EXPECT_FALSE(dp_solve(Instance(1, DelayMode::Exact, {Chain{0, 3, {2}}})));
  EXPECT_FALSE(dp_solve(Instance(1, DelayMode::Minimum, {Chain{0, 3, {2}}})));
}

TEST(Dp, MinimumModeWaits) {
  const Instance inst(1, DelayMode::Minimum, {Chain{0, 5, {1}}, Chain{2, 3, {}}, Chain{3, 4, {}}});
  const auto s = dp_solve(inst);
  ASSERT_TRUE(s);
  EXPECT_TRUE(verify_schedule(inst, *s).feasible());
  EXPECT_FALSE(dp_solve(inst.with_mode(DelayMode::Exact)));
}

TEST(Successors, NoActiveChainsAdvancesTime) {
  const Instance inst(1, DelayMode::Exact, {Chain{5, 7, {}}});
  const auto next = successor_states(DpState{0, {}}, inst);
  ASSERT_EQ(next.size(), 1u);
  EXPECT_EQ(next[0].time, 1);
  EXPECT_TRUE(next[0].chains.empty());
}

TEST(Successors, ForcedExactJob) {
  const Instance inst(1, DelayMode::Exact, {Chain{0, 10, {1, 0}}});
  const DpState at2{2, {ChainProgress{0, true, 0, 0}}};
  const auto next = successor_states(at2, inst);
  ASSERT_EQ(next.size(), 1u);
  EXPECT_EQ(next[0].time, 3);
  ASSERT_EQ(next[0].chains.size(), 1u);
  EXPECT_EQ(next[0].chains[0].last_job, 1u);
  EXPECT_EQ(next[0].chains[0].last_time, 2);
}

TEST(Successors, MissedExactTimeHasNoSuccessor) {
  const Instance inst(1, DelayMode::Exact, {Chain{0, 10, {0}}, Chain{0, 10, {}}});
  // Two forced jobs at t = 1 on one machine.
  const Instance two(1, DelayMode::Exact, {Chain{0, 10, {0}}, Chain{0, 10, {0}}});
  const DpState s{1, {ChainProgress{0, true, 0, 0}, ChainProgress{1, true, 0, 0}}};
  EXPECT_TRUE(successor_states(s, two).empty());
  const DpState late{2, {ChainProgress{0, true, 0, 0}, ChainProgress{1, false, 0, 0}}};
  EXPECT_TRUE(successor_states(late, inst).empty());
}

TEST(Successors, DeadlinePruning) {
  const Instance inst(1, DelayMode::Minimum, {Chain{0, 3, {1}}, Chain{0, 3, {}}});
  // Starting chain 1 at 0 leaves chain 0 unable to fit jobs at 1 and 3 < 3.
  const auto next = successor_states(DpState{0, {ChainProgress{0, false, 0, 0}, ChainProgress{1, false, 0, 0}}}, inst);
  ASSERT_EQ(next.size(), 1u);
  EXPECT_TRUE(next[0].chains[0].started);
}

// The decisions at t = 0 are exactly the subsets S of released chains with
// |S| <= m such that every chain can still finish afterwards. Derived here by
// enumerating start tuples over the windows.
TEST(Successors, FrontierMatchesStartTupleEnumeration) {
  std::mt19937_64 rng(31);
  RandomInstanceParams p;
  p.min_chains = p.max_chains = 2;
  p.min_machines = p.max_machines = 1;
  p.max_release = 1;
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const Instance inst = random_instance(rng, p);
    if (inst.chain(0).release != 0 || inst.chain(1).release != 0) continue;
    ++checked;
    std::set<std::vector<bool>> expected;
    for (int mask = 0; mask < 4; ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) > 1) continue;
      bool ok = true;
      for (std::size_t c = 0; c < 2; ++c) {
        const Chain& ch = inst.chain(c);
        const Time earliest = mask >> c & 1 ? 0 : 1;
        ok = ok && earliest + ch.minimum_duration() <= ch.deadline;
      }
      if (ok) expected.insert({static_cast<bool>(mask & 1), static_cast<bool>(mask & 2)});
    }
    DpState s0{0, {ChainProgress{0, false, 0, 0}, ChainProgress{1, false, 0, 0}}};
    std::set<std::vector<bool>> got;
    for (const auto& s : successor_states(s0, inst)) {
      // A chain missing from the state has finished and left its window.
      std::vector<bool> started(2, true);
      for (const auto& e : s.chains) started[e.chain] = e.started;
      got.insert(started);
    }
    EXPECT_EQ(got, expected) << i;
  }
  EXPECT_GT(checked, 10);
}

TEST(LayerBound, Formula) {
  // n = 3, D = 2, thickness 2: (1 + 9 * 3)^2
  const Instance inst(1, DelayMode::Exact, {Chain{0, 5, {2}}, Chain{1, 4, {}}});
  EXPECT_EQ(dp_layer_bound(inst), 28u * 28u);
  EXPECT_EQ(dp_layer_bound(Instance(1, DelayMode::Exact, {})), 1u);
}

TEST(Dp, StateBudget) {
  std::vector<Chain> chains(8, Chain{0, 40, {}});
  DpOptions o;
  o.max_layer_states = 5;
  EXPECT_THROW(dp_solve(Instance(8, DelayMode::Minimum, chains), o), BudgetExceeded);
}

class DpSweep : public ::testing::TestWithParam<int> {};

TEST_P(DpSweep, AgreesWithOracleAndRespectsBound) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()) + 500);
  for (int i = 0; i < 100; ++i) {
    const Instance exact = random_instance(rng, {});
    for (DelayMode mode : {DelayMode::Exact, DelayMode::Minimum}) {
      const Instance inst = exact.with_mode(mode);
      DpStats st;
      const auto s = dp_solve(inst, {}, &st);
      ASSERT_EQ(s.has_value(), oracle_schedule(inst).has_value()) << i;
      if (s) {
        EXPECT_TRUE(verify_schedule(inst, *s).feasible());
      }
      EXPECT_EQ(st.bound_violations, 0u);
      EXPECT_LE(st.max_layer, st.layer_bound);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, DpSweep, ::testing::Range(0, 5));

TEST(Dp, ThreadCountDoesNotChangeWitness) {
  std::mt19937_64 rng(77);
  RandomInstanceParams p;
  p.max_chains = 5;
  p.max_machines = 3;
  for (int i = 0; i < 60; ++i) {
    const Instance inst = random_instance(rng, p);
    DpOptions one, four;
    four.threads = 4;
    const auto a = dp_solve(inst, one);
    const auto b = dp_solve(inst, four);
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) {
      EXPECT_EQ(a->starts, b->starts);
    }
  }
}

TEST(Dp, LargerMachineCounts) {
  std::mt19937_64 rng(78);
  RandomInstanceParams p;
  p.max_chains = 4;
  p.max_machines = 3;
  p.mode = DelayMode::Minimum;
  for (int i = 0; i < 150; ++i) {
    const Instance inst = random_instance(rng, p);
    ASSERT_EQ(dp_solve(inst).has_value(), oracle_schedule(inst).has_value()) << i;
  }
}
