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

#include <random>

#include "chainsched/model.hpp"
#include "chainsched/random.hpp"

using namespace chainsched;

namespace {

Instance one_chain(DelayMode mode) { return Instance(1, mode, {Chain{0, 6, {2}}}); }

bool has_kind(const Verdict& v, ViolationKind k) {
  for (const auto& x : v.violations)
    if (x.kind == k) return true;
  return false;
}

}  // namespace

TEST(Verify, ExactDelayMetExactly) {
  EXPECT_TRUE(verify_schedule(one_chain(DelayMode::Exact), Schedule{{{0, 3}}}).feasible());
}

TEST(Verify, LongerGapOnlyPassesMinimumMode) {
  const Verdict exact = verify_schedule(one_chain(DelayMode::Exact), Schedule{{{0, 4}}});
  EXPECT_FALSE(exact.feasible());
  EXPECT_TRUE(has_kind(exact, ViolationKind::DelayViolation));
  EXPECT_TRUE(verify_schedule(one_chain(DelayMode::Minimum), Schedule{{{0, 4}}}).feasible());
}

TEST(Verify, ShorterGapFailsBothModes) {
  EXPECT_FALSE(verify_schedule(one_chain(DelayMode::Exact), Schedule{{{0, 2}}}).feasible());
  EXPECT_FALSE(verify_schedule(one_chain(DelayMode::Minimum), Schedule{{{0, 2}}}).feasible());
}

TEST(Verify, MachineOverload) {
  const Instance inst(1, DelayMode::Exact, {Chain{0, 2, {}}, Chain{0, 2, {}}});
  const Verdict v = verify_schedule(inst, Schedule{{{0}, {0}}});
  ASSERT_EQ(v.violations.size(), 1u);
  EXPECT_EQ(v.violations[0].kind, ViolationKind::MachineOverload);
  EXPECT_EQ(v.violations[0].time, 0);
  EXPECT_EQ(v.violations[0].jobs.size(), 2u);
  EXPECT_TRUE(verify_schedule(inst, Schedule{{{0}, {1}}}).feasible());
  EXPECT_TRUE(verify_schedule(inst.with_machines(2), Schedule{{{0}, {0}}}).feasible());
}

TEST(Verify, ReleaseAndDeadline) {
  const Instance inst(1, DelayMode::Exact, {Chain{2, 4, {}}});
  EXPECT_TRUE(has_kind(verify_schedule(inst, Schedule{{{1}}}), ViolationKind::ReleaseViolation));
  EXPECT_TRUE(has_kind(verify_schedule(inst, Schedule{{{4}}}), ViolationKind::DeadlineViolation));
  EXPECT_TRUE(verify_schedule(inst, Schedule{{{3}}}).feasible());
}

TEST(Verify, ShapeMismatchThrows) {
  const Instance inst = one_chain(DelayMode::Exact);
  EXPECT_THROW(verify_schedule(inst, Schedule{{{0}}}), ShapeMismatch);
  EXPECT_THROW(verify_schedule(inst, Schedule{{{0, 3}, {1}}}), ShapeMismatch);
  EXPECT_THROW(verify_schedule(inst, Schedule{}), ShapeMismatch);
}

TEST(Verify, EmptyInstanceEmptySchedule) {
  EXPECT_TRUE(verify_schedule(Instance(1, DelayMode::Exact, {}), Schedule{}).feasible());
}

TEST(Thickness, Examples) {
  EXPECT_EQ(thickness(Instance(1, DelayMode::Exact, {Chain{0, 2, {}}, Chain{1, 3, {}}, Chain{2, 4, {}}})), 2u);
  EXPECT_EQ(thickness(Instance(1, DelayMode::Exact, {Chain{5, 9, {}}})), 1u);
  EXPECT_EQ(thickness(Instance(1, DelayMode::Exact, {})), 0u);
}

TEST(Thickness, TouchingWindowsDoNotOverlap) {
  EXPECT_EQ(thickness(Instance(1, DelayMode::Exact, {Chain{0, 2, {}}, Chain{2, 4, {}}})), 1u);
  EXPECT_EQ(thickness(Instance(1, DelayMode::Exact, {Chain{0, 3, {}}, Chain{2, 4, {}}})), 2u);
}

TEST(Instance, RejectsBadConstruction) {
  EXPECT_THROW(Instance(0, DelayMode::Exact, {}), InvalidInstance);
  EXPECT_THROW(Instance(1, DelayMode::Exact, {Chain{3, 3, {}}}), InvalidInstance);
  EXPECT_THROW(Instance(1, DelayMode::Exact, {Chain{-1, 3, {}}}), InvalidInstance);
  EXPECT_THROW(Instance(1, DelayMode::Exact, {Chain{0, 3, {-1}}}), InvalidInstance);
}

TEST(Instance, ArithmeticRangeChecked) {
  const Time big = Time{1} << 61;
  EXPECT_NO_THROW(Instance(1, DelayMode::Exact, {Chain{0, big, {big - 10}}}));
  EXPECT_ANY_THROW(Instance(1, DelayMode::Exact, {Chain{big, big + 1, {big, big}}}));
}

TEST(Instance, DerivedQuantities) {
  const Instance inst(2, DelayMode::Minimum, {Chain{0, 9, {1, 3}}, Chain{4, 7, {}}});
  EXPECT_EQ(inst.job_count(), 4u);
  EXPECT_EQ(inst.max_delay(), 3);
  EXPECT_EQ(inst.max_deadline(), 9);
  EXPECT_EQ(inst.chain(0).minimum_duration(), 7);
  EXPECT_EQ(inst.chain(1).minimum_duration(), 1);
}

TEST(ModelProperties, ExactAcceptanceImpliesMinimumAcceptance) {
  std::mt19937_64 rng(3);
  int accepted = 0;
  for (int i = 0; i < 500; ++i) {
    const Instance inst = random_instance(rng, {});
    Schedule s;
    for (const auto& c : inst.chains()) {
      std::vector<Time> times{std::uniform_int_distribution<Time>(c.release, c.release + 3)(rng)};
      for (Time l : c.delays) times.push_back(times.back() + l + 1);
      s.starts.push_back(times);
    }
    const Verdict exact = verify_schedule(inst, s);
    const Verdict again = verify_schedule(inst, s);
    EXPECT_EQ(exact.violations.size(), again.violations.size());
    if (exact.feasible()) {
      ++accepted;
      EXPECT_TRUE(verify_schedule(inst.with_mode(DelayMode::Minimum), s).feasible());
    }
  }
  EXPECT_GT(accepted, 0);
}

TEST(ModelProperties, ThicknessAtMostChainCount) {
  std::mt19937_64 rng(4);
  RandomInstanceParams p;
  p.max_chains = 6;
  for (int i = 0; i < 300; ++i) {
    const Instance inst = random_instance(rng, p);
    EXPECT_LE(thickness(inst), inst.chain_count());
    EXPECT_GE(thickness(inst), 1u);
  }
}
