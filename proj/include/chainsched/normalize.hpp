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

#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "chainsched/checked.hpp"
#include "chainsched/model.hpp"

namespace chainsched {

// Per-chain offsets subtracted from release dates and deadlines. Adding them
// back to a schedule of the normalized instance gives a schedule of the input.
struct NormalizationMap {
  std::vector<Time> offsets;

  Schedule map_back(const Schedule& normalized) const {
    Schedule out = normalized;
    for (std::size_t c = 0; c < out.starts.size(); ++c)
      for (Time& t : out.starts[c]) t = checked_add(t, offsets.at(c));
    return out;
  }

  friend bool operator==(const NormalizationMap&, const NormalizationMap&) = default;
};

struct Normalized {
  Instance instance;
  NormalizationMap map;
};

// Every deadline becomes min{d, r + n(D+1)}, n the job count and D the
// largest delay of the whole instance. Left-adjusted schedules never need more.
inline Instance clamp_deadlines(const Instance& instance) {
  const Time n = static_cast<Time>(instance.job_count());
  const Time horizon = checked_mul(n, checked_add(instance.max_delay(), 1));
  std::vector<Chain> chains = instance.chains();
  for (auto& c : chains) c.deadline = std::min(c.deadline, checked_add(c.release, horizon));
  return Instance(instance.machines(), instance.mode(), std::move(chains));
}

// Shifts each connected component of the window-overlap graph to the left so
// that it starts where the previously handled components end.
inline Normalized compress_gaps(const Instance& instance) {
  const auto& chains = instance.chains();
  std::vector<std::size_t> order(chains.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return chains[a].release < chains[b].release; });

  std::vector<Chain> out = chains;
  NormalizationMap map{std::vector<Time>(chains.size(), 0)};
  Time handled_end = 0;  // max deadline of handled components
  for (std::size_t i = 0; i < order.size();) {
    const Time component_start = chains[order[i]].release;
    Time component_end = chains[order[i]].deadline;
    std::size_t k = i + 1;
    while (k < order.size() && chains[order[k]].release < component_end) {
      component_end = std::max(component_end, chains[order[k]].deadline);
      ++k;
    }
    const Time shift = component_start - handled_end;
    for (std::size_t e = i; e < k; ++e) {
      const std::size_t c = order[e];
      out[c].release -= shift;
      out[c].deadline -= shift;
      map.offsets[c] = shift;
    }
    handled_end = component_end - shift;
    i = k;
  }
  return {Instance(instance.machines(), instance.mode(), std::move(out)), std::move(map)};
}

// Equivalent instance with every deadline at most c*n*(D+1) and every window
// at most n*(D+1) long.
inline Normalized normalize(const Instance& instance) { return compress_gaps(clamp_deadlines(instance)); }

}  // namespace chainsched
