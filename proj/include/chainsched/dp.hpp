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
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chainsched/checked.hpp"
#include "chainsched/errors.hpp"
#include "chainsched/model.hpp"
#include "chainsched/normalize.hpp"

// Layered dynamic program over time steps. The state at time t records, for
// every chain whose window contains t, whether it has started and if so its
// last scheduled job and that job's start time. All decisions for steps
// before t are already taken. Works for both delay modes and any machine
// count; the number of layers equals the largest deadline, so delays and
// dates must be small (unary scale).
namespace chainsched {

struct ChainProgress {
  std::size_t chain = 0;
  bool started = false;
  std::size_t last_job = 0;
  Time last_time = 0;

  friend bool operator==(const ChainProgress&, const ChainProgress&) = default;
};

struct DpState {
  Time time = 0;
  std::vector<ChainProgress> chains;  // sorted by chain index

  friend bool operator==(const DpState&, const DpState&) = default;
};

struct DpOptions {
  std::size_t threads = 1;
  std::uint64_t max_layer_states = 2'000'000;
  // Check |layer| <= (1 + n^2 (D+1))^thickness on every layer.
  bool check_layer_bound = true;
};

struct DpStats {
  std::uint64_t layers = 0;
  std::uint64_t max_layer = 0;
  std::uint64_t layer_bound = 0;
  std::uint64_t bound_violations = 0;
  std::size_t thickness = 0;
};

namespace detail {

struct DpModel {
  explicit DpModel(const Instance& inst) : instance(inst) {
    for (const auto& c : inst.chains()) {
      std::vector<Time> off{0};
      for (Time l : c.delays) off.push_back(checked_add(off.back(), checked_add(l, 1)));
      offsets.push_back(std::move(off));
    }
  }

  const Chain& chain(std::size_t c) const { return instance.chain(c); }
  bool finished(const ChainProgress& p) const { return p.started && p.last_job + 1 == chain(p.chain).job_count(); }

  // Earliest start of the chain's next job, ignoring the current time.
  Time next_earliest(const ChainProgress& p) const {
    if (!p.started) return chain(p.chain).release;
    return p.last_time + chain(p.chain).delays[p.last_job] + 1;
  }

  // Can the chain still complete by its deadline when the clock reads `now`?
  bool can_finish(const ChainProgress& p, Time now) const {
    if (finished(p)) return true;
    Time e = next_earliest(p);
    if (p.started && instance.mode() == DelayMode::Exact && e < now) return false;
    e = std::max(e, now);
    const std::size_t next = p.started ? p.last_job + 1 : 0;
    const auto& off = offsets[p.chain];
    return e + (off.back() - off[next]) <= chain(p.chain).deadline - 1;
  }

  const Instance& instance;
  std::vector<std::vector<Time>> offsets;
};

// Calls emit(DpState next, std::vector<size_t> chains_started_at_t) for every
// successor, optional jobs chosen as subsets in lexicographic order.
template <class Emit>
void expand_state(const DpModel& model, const DpState& state, Emit&& emit) {
  const Time t = state.time;
  const Instance& inst = model.instance;
  const bool exact = inst.mode() == DelayMode::Exact;

  std::vector<std::size_t> forced;    // positions in state.chains
  std::vector<std::size_t> optional;  // positions in state.chains
  for (std::size_t i = 0; i < state.chains.size(); ++i) {
    const auto& p = state.chains[i];
    if (model.finished(p)) continue;
    const Time e = model.next_earliest(p);
    if (p.started && exact) {
      if (e == t) forced.push_back(i);
      if (e < t) return;
    } else if (e <= t) {
      optional.push_back(i);
    }
  }
  if (forced.size() > inst.machines()) return;
  const std::size_t room = inst.machines() - forced.size();

  std::vector<std::size_t> chosen;
  auto build = [&]() {
    std::vector<std::size_t> starting = forced;
    starting.insert(starting.end(), chosen.begin(), chosen.end());
    std::vector<ChainProgress> next = state.chains;
    std::vector<std::size_t> started_chains;
    for (std::size_t i : starting) {
      auto& p = next[i];
      p.last_job = p.started ? p.last_job + 1 : 0;
      p.started = true;
      p.last_time = t;
      started_chains.push_back(p.chain);
    }
    std::sort(started_chains.begin(), started_chains.end());

    DpState out{t + 1, {}};
    for (const auto& p : next) {
      if (model.chain(p.chain).deadline == t + 1) {
        if (!model.finished(p)) return;
        continue;
      }
      if (!model.can_finish(p, t + 1)) return;
      out.chains.push_back(p);
    }
    for (std::size_t c = 0; c < inst.chain_count(); ++c) {
      if (model.chain(c).release != t + 1) continue;
      ChainProgress p{c, false, 0, 0};
      if (!model.can_finish(p, t + 1)) return;
      out.chains.push_back(p);
    }
    std::sort(out.chains.begin(), out.chains.end(),
              [](const ChainProgress& a, const ChainProgress& b) { return a.chain < b.chain; });
    emit(std::move(out), std::move(started_chains));
  };

  // Lexicographic subset order: {}, {0}, {0,1}, {0,1,2}, {0,2}, {1}, ...
  auto subsets = [&](auto&& self, std::size_t from) -> void {
    build();
    if (chosen.size() == room) return;
    for (std::size_t k = from; k < optional.size(); ++k) {
      chosen.push_back(optional[k]);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  subsets(subsets, 0);
}

inline std::vector<Time> state_key(const DpState& s) {
  std::vector<Time> key;
  key.reserve(s.chains.size() * 4);
  for (const auto& p : s.chains) {
    key.push_back(static_cast<Time>(p.chain));
    key.push_back(p.started ? 1 : 0);
    key.push_back(p.started ? static_cast<Time>(p.last_job) : 0);
    key.push_back(p.started ? p.last_time : 0);
  }
  return key;
}

struct StateKeyHash {
  std::size_t operator()(const std::vector<Time>& key) const {
    std::size_t h = 1469598103934665603ull;
    for (Time v : key) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};

// The state before any decision at time 0.
inline std::optional<DpState> initial_state(const DpModel& model) {
  DpState s{0, {}};
  for (std::size_t c = 0; c < model.instance.chain_count(); ++c) {
    if (model.chain(c).release != 0) continue;
    ChainProgress p{c, false, 0, 0};
    if (!model.can_finish(p, 0)) return std::nullopt;
    s.chains.push_back(p);
  }
  return s;
}

}  // namespace detail

// All distinct states at time + 1 reachable from `state` by starting at most
// m eligible jobs at its time step. Successors from which some chain can no
// longer meet its deadline are discarded.
inline std::vector<DpState> successor_states(const DpState& state, const Instance& instance) {
  detail::DpModel model(instance);
  std::vector<DpState> out;
  std::unordered_map<std::vector<Time>, std::size_t, detail::StateKeyHash> seen;
  detail::expand_state(model, state, [&](DpState&& next, std::vector<std::size_t>&&) {
    if (seen.emplace(detail::state_key(next), out.size()).second) out.push_back(std::move(next));
  });
  return out;
}

// (1 + n^2 (D+1))^thickness, saturating, with D the largest delay.
inline std::uint64_t dp_layer_bound(const Instance& instance) {
  const auto n = static_cast<std::uint64_t>(instance.job_count());
  const auto per_chain =
      saturating_add(1, saturating_mul(saturating_mul(n, n), static_cast<std::uint64_t>(instance.max_delay()) + 1));
  return saturating_pow(per_chain, thickness(instance));
}

// Runs the layered search on the instance as given (no normalization).
inline std::optional<Schedule> dp_search(const Instance& instance, const DpOptions& options = {},
                                         DpStats* stats = nullptr) {
  struct Layer {
    std::vector<DpState> states;
    std::vector<std::size_t> parent;
    std::vector<std::vector<std::size_t>> started;
  };

  detail::DpModel model(instance);
  DpStats local;
  DpStats& st = stats ? *stats : local;
  st = DpStats{};
  st.thickness = thickness(instance);
  st.layer_bound = dp_layer_bound(instance);

  auto first = detail::initial_state(model);
  if (!first) return std::nullopt;
  std::vector<Layer> layers;
  layers.push_back(Layer{{*first}, {0}, {{}}});

  auto record = [&](std::size_t size) {
    ++st.layers;
    st.max_layer = std::max<std::uint64_t>(st.max_layer, size);
    if (options.check_layer_bound && size > st.layer_bound) ++st.bound_violations;
    if (size > options.max_layer_states)
      throw BudgetExceeded("StateBudgetExceeded: DP layer holds " + std::to_string(size) + " states (limit " +
                           std::to_string(options.max_layer_states) + ")");
  };
  record(1);

  using Candidate = std::pair<DpState, std::vector<std::size_t>>;
  const Time horizon = instance.max_deadline();
  const std::size_t threads = std::max<std::size_t>(1, options.threads);

  for (Time t = 0; t < horizon; ++t) {
    const Layer& cur = layers.back();
    const std::size_t count = cur.states.size();
    std::vector<std::vector<Candidate>> produced(count);
    auto work = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i)
        detail::expand_state(model, cur.states[i], [&](DpState&& s, std::vector<std::size_t>&& started) {
          produced[i].emplace_back(std::move(s), std::move(started));
        });
    };
    if (threads == 1 || count < 2 * threads) {
      work(0, count);
    } else {
      std::vector<std::jthread> pool;
      const std::size_t chunk = (count + threads - 1) / threads;
      for (std::size_t lo = 0; lo < count; lo += chunk) pool.emplace_back(work, lo, std::min(count, lo + chunk));
    }

    // Merge in state order: the result does not depend on the thread count.
    Layer next;
    std::unordered_map<std::vector<Time>, std::size_t, detail::StateKeyHash> index;
    for (std::size_t i = 0; i < count; ++i)
      for (auto& [s, started] : produced[i]) {
        if (!index.emplace(detail::state_key(s), next.states.size()).second) continue;
        next.states.push_back(std::move(s));
        next.parent.push_back(i);
        next.started.push_back(std::move(started));
      }
    record(next.states.size());
    if (next.states.empty()) return std::nullopt;
    layers.push_back(std::move(next));
  }

  // Walk parent links back from the first final state.
  Schedule schedule;
  schedule.starts.resize(instance.chain_count());
  std::size_t at = 0;
  for (std::size_t layer = layers.size() - 1; layer > 0; --layer) {
    const Time t = static_cast<Time>(layer) - 1;
    for (std::size_t c : layers[layer].started[at]) schedule.starts[c].push_back(t);
    at = layers[layer].parent[at];
  }
  for (auto& times : schedule.starts) std::reverse(times.begin(), times.end());
  return schedule;
}

// Normalizes, runs the layered search and maps the witness back.
inline std::optional<Schedule> dp_solve(const Instance& instance, const DpOptions& options = {},
                                        DpStats* stats = nullptr) {
  const Normalized norm = normalize(instance);
  auto schedule = dp_search(norm.instance, options, stats);
  if (!schedule) return std::nullopt;
  Schedule out = norm.map.map_back(*schedule);
  if (!verify_schedule(instance, out).feasible()) throw std::logic_error("dp_solve produced an infeasible witness");
  return out;
}

}  // namespace chainsched
