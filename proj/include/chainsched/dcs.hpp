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
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "chainsched/checked.hpp"
#include "chainsched/errors.hpp"
#include "chainsched/model.hpp"

// Single machine, exact delays, delays of any magnitude: with x_i the start of
// chain i, a tuple of starts is a valid schedule iff
//   x_i >= r_i,   x_i + s(i, last) < d_i,   x_i - x_j not in U(i, j)  (i != j),
// where s(i, a) is the offset of job a from the chain's first job and U(i, j)
// is the set of offset differences. Branch over the open intervals between
// consecutive elements of every U(i, j) and solve each branch as a system of
// difference constraints.
namespace chainsched {

// s(i, 1..len): offset of every job from the chain's first job.
inline std::vector<Time> chain_offsets(const Chain& chain) {
  std::vector<Time> out{0};
  out.reserve(chain.job_count());
  for (Time l : chain.delays) out.push_back(in_range(checked_add(out.back(), checked_add(l, 1))));
  return out;
}

// Sorted, duplicate-free values a with x_i - x_j = a forcing a collision:
// {s(j, b) - s(i, a)}.
using GapSet = std::vector<Time>;

inline GapSet build_gap_set(const std::vector<Time>& offsets_i, const std::vector<Time>& offsets_j) {
  GapSet u;
  u.reserve(offsets_i.size() * offsets_j.size());
  for (Time a : offsets_i)
    for (Time b : offsets_j) u.push_back(checked_sub(b, a));
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return u;
}

inline GapSet build_gap_set(const Chain& i, const Chain& j) { return build_gap_set(chain_offsets(i), chain_offsets(j)); }

// Closed integer interval; a missing bound is unbounded on that side.
struct GapInterval {
  std::optional<Time> lo;
  std::optional<Time> hi;

  bool contains(Time v) const { return (!lo || *lo <= v) && (!hi || v <= *hi); }
};

// The non-empty integer intervals strictly between consecutive gap values,
// plus the two unbounded ends, left to right. Their union is Z \ gaps.
inline std::vector<GapInterval> gap_intervals(const GapSet& gaps) {
  std::vector<GapInterval> out;
  if (gaps.empty()) {
    out.push_back({std::nullopt, std::nullopt});
    return out;
  }
  out.push_back({std::nullopt, checked_sub(gaps.front(), 1)});
  for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
    if (gaps[i + 1] == gaps[i] + 1) continue;
    out.push_back({checked_add(gaps[i], 1), checked_sub(gaps[i + 1], 1)});
  }
  out.push_back({checked_add(gaps.back(), 1), std::nullopt});
  return out;
}

// x_to - x_from <= bound
struct DifferenceConstraint {
  std::size_t to;
  std::size_t from;
  Time bound;
};

// Variable 0 is the origin, pinned to 0 in every solution.
struct DifferenceSystem {
  std::size_t variable_count = 1;
  std::vector<DifferenceConstraint> constraints;

  // x_a - x_b <= bound
  void add(std::size_t a, std::size_t b, Time bound) {
    if (a >= variable_count || b >= variable_count) throw InvalidParameter("difference constraint index out of range");
    constraints.push_back({a, b, bound});
  }

  bool satisfied_by(const std::vector<Time>& x) const {
    for (const auto& c : constraints)
      if (checked_sub(x.at(c.to), x.at(c.from)) > c.bound) return false;
    return true;
  }
};

// Bellman-Ford from a virtual source connected to every variable with weight
// 0. A negative cycle means no solution; otherwise the shortest-path distances
// shifted by -dist(origin) solve the system with x_0 = 0.
inline std::optional<std::vector<Time>> solve_difference_system(const DifferenceSystem& system) {
  const std::size_t n = system.variable_count;
  std::vector<Time> dist(n, 0);
  for (std::size_t round = 0; round <= n; ++round) {
    bool changed = false;
    for (const auto& c : system.constraints) {
      const Time via = checked_add(dist[c.from], c.bound);
      if (via < dist[c.to]) {
        dist[c.to] = via;
        changed = true;
      }
    }
    if (!changed) {
      const Time origin = dist[0];
      for (Time& d : dist) d = checked_sub(d, origin);
      return dist;
    }
  }
  return std::nullopt;
}

// The three start conditions for a tuple of chain starts, evaluated directly.
inline bool start_conditions_hold(const Instance& instance, const std::vector<Time>& starts) {
  const auto& chains = instance.chains();
  std::vector<std::vector<Time>> offsets;
  for (const auto& c : chains) offsets.push_back(chain_offsets(c));
  for (std::size_t i = 0; i < chains.size(); ++i) {
    if (starts[i] < chains[i].release) return false;
    if (checked_add(starts[i], offsets[i].back()) >= chains[i].deadline) return false;
  }
  for (std::size_t i = 0; i < chains.size(); ++i)
    for (std::size_t j = i + 1; j < chains.size(); ++j) {
      const GapSet u = build_gap_set(offsets[i], offsets[j]);
      if (std::binary_search(u.begin(), u.end(), checked_sub(starts[i], starts[j]))) return false;
    }
  return true;
}

struct DcsStats {
  std::uint64_t branches_solved = 0;
  std::uint64_t branches_pruned = 0;
};

namespace detail {

class DcsSearch {
 public:
  DcsSearch(const Instance& instance, DcsStats* stats) : instance_(instance), stats_(stats) {
    const auto& chains = instance.chains();
    for (const auto& c : chains) offsets_.push_back(chain_offsets(c));
    base_.variable_count = chains.size() + 1;
    for (std::size_t i = 0; i < chains.size(); ++i) {
      // x_i >= r   <=>   x_0 - x_i <= -r
      base_.add(0, i + 1, -chains[i].release);
      // x_i + s(i, last) < d   <=>   x_i - x_0 <= d - 1 - s(i, last)
      base_.add(i + 1, 0, checked_sub(checked_sub(chains[i].deadline, 1), offsets_[i].back()));
    }
    for (std::size_t i = 0; i < chains.size(); ++i)
      for (std::size_t j = i + 1; j < chains.size(); ++j)
        pairs_.push_back({i, j, gap_intervals(build_gap_set(offsets_[i], offsets_[j]))});
  }

  std::optional<std::vector<Time>> run() {
    DifferenceSystem system = base_;
    return descend(0, system);
  }

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    std::vector<GapInterval> intervals;
  };

  // Solving after every pair prunes whole subtrees: adding constraints never
  // turns an unsolvable system solvable.
  std::optional<std::vector<Time>> descend(std::size_t depth, DifferenceSystem& system) {
    if (stats_) ++stats_->branches_solved;
    auto solution = solve_difference_system(system);
    if (!solution) {
      if (stats_) ++stats_->branches_pruned;
      return std::nullopt;
    }
    if (depth == pairs_.size()) return solution;
    const Pair& p = pairs_[depth];
    const std::size_t xi = p.i + 1;
    const std::size_t xj = p.j + 1;
    for (const auto& iv : p.intervals) {
      const std::size_t mark = system.constraints.size();
      if (iv.hi) system.add(xi, xj, *iv.hi);             // x_i - x_j <= hi
      if (iv.lo) system.add(xj, xi, checked_sub(0, *iv.lo));  // x_j - x_i <= -lo
      auto found = descend(depth + 1, system);
      system.constraints.resize(mark);
      if (found) return found;
    }
    return std::nullopt;
  }

  const Instance& instance_;
  DcsStats* stats_;
  std::vector<std::vector<Time>> offsets_;
  DifferenceSystem base_;
  std::vector<Pair> pairs_;
};

}  // namespace detail

// Feasibility for one machine and exact delays. The step count depends on
// chain and job counts only, never on the magnitude of delays or dates.
inline std::optional<Schedule> dcs_solve(const Instance& instance, DcsStats* stats = nullptr) {
  if (instance.machines() != 1) throw InvalidParameter("dcs_solve requires a single machine");
  if (instance.mode() != DelayMode::Exact) throw InvalidParameter("dcs_solve requires exact delays");
  auto x = detail::DcsSearch(instance, stats).run();
  if (!x) return std::nullopt;
  Schedule s;
  for (std::size_t i = 0; i < instance.chain_count(); ++i) {
    std::vector<Time> times;
    for (Time o : chain_offsets(instance.chain(i))) times.push_back(checked_add((*x)[i + 1], o));
    s.starts.push_back(std::move(times));
  }
  if (!verify_schedule(instance, s).feasible()) throw std::logic_error("dcs_solve produced an infeasible witness");
  return s;
}

}  // namespace chainsched
