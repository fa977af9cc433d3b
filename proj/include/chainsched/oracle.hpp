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
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "chainsched/checked.hpp"
#include "chainsched/cnf.hpp"
#include "chainsched/errors.hpp"
#include "chainsched/formula.hpp"
#include "chainsched/graph.hpp"
#include "chainsched/model.hpp"

// Brute-force deciders used as ground truth for the solvers and reductions.
// Every search counts its nodes and throws BudgetExceeded instead of
// answering "no" when the count passes the budget.
namespace chainsched {

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

struct OracleOptions {
  std::uint64_t node_budget = kDefaultOracleBudget;
  // Minimum-mode engine only: every delay must be met with equality.
  bool tight_delays = false;
};

namespace detail {

class NodeCounter {
 public:
  explicit NodeCounter(std::uint64_t budget, const char* what) : budget_(budget), what_(what) {}

  void tick() {
    if (++count_ > budget_) throw BudgetExceeded(std::string(what_) + ": search exceeded " + std::to_string(budget_) + " nodes");
  }

 private:
  std::uint64_t budget_;
  std::uint64_t count_ = 0;
  const char* what_;
};

// Offsets of each job from the first job of the chain when every delay is tight.
inline std::vector<Time> tight_offsets(const Chain& chain) {
  std::vector<Time> off{0};
  for (Time l : chain.delays) off.push_back(checked_add(off.back(), checked_add(l, 1)));
  return off;
}

struct KeyHash {
  std::size_t operator()(const std::vector<Time>& key) const {
    std::size_t h = 1469598103934665603ull;
    for (Time v : key) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};

// Exact delays: a chain's start fixes all its jobs, so search start tuples in
// lexicographic order with running per-step load counts. After each placement
// every later chain must still have some start that fits. A failed subtree
// depends only on the loads inside the span the remaining chains can reach,
// so those are memoized. Consecutive identical chains start in
// nondecreasing order, which keeps the lexicographically first witness.
class ExactEngine {
 public:
  ExactEngine(const Instance& instance, const OracleOptions& options)
      : instance_(instance), counter_(options.node_budget, "oracle_schedule") {
    for (const auto& c : instance.chains()) offsets_.push_back(tight_offsets(c));
    starts_.assign(instance.chain_count(), 0);
    const std::size_t c = instance.chain_count();
    reach_lo_.assign(c + 1, 0);
    reach_hi_.assign(c + 1, 0);
    for (std::size_t i = c; i-- > 0;) {
      const Chain& ch = instance.chain(i);
      const bool last = i + 1 == c;
      reach_lo_[i] = last ? ch.release : std::min(ch.release, reach_lo_[i + 1]);
      reach_hi_[i] = last ? ch.deadline : std::max(ch.deadline, reach_hi_[i + 1]);
    }
  }

  std::optional<Schedule> run() {
    if (!later_chains_fit(0) || !search(0)) return std::nullopt;
    Schedule s;
    for (std::size_t c = 0; c < instance_.chain_count(); ++c) {
      std::vector<Time> times;
      for (Time o : offsets_[c]) times.push_back(starts_[c] + o);
      s.starts.push_back(std::move(times));
    }
    return s;
  }

 private:
  bool search(std::size_t c) {
    if (c == instance_.chain_count()) return true;
    const Chain& chain = instance_.chain(c);
    Time first = chain.release;
    if (c > 0 && instance_.chain(c - 1) == chain) first = std::max(first, starts_[c - 1]);
    std::vector<Time> key;
    if (reach_hi_[c] - reach_lo_[c] <= kMaxKeySpan && failed_.size() < kMaxMemo) {
      key.push_back(static_cast<Time>(c));
      key.push_back(first);
      for (Time t = reach_lo_[c]; t < reach_hi_[c]; ++t) {
        auto it = load_.find(t);
        key.push_back(it == load_.end() ? 0 : static_cast<Time>(it->second));
      }
      if (failed_.count(key)) return false;
    }
    const Time last = chain.deadline - 1 - offsets_[c].back();
    for (Time x = first; x <= last; ++x) {
      counter_.tick();
      if (!fits(c, x)) continue;
      place(c, x, +1);
      starts_[c] = x;
      if (later_chains_fit(c + 1) && search(c + 1)) return true;
      place(c, x, -1);
    }
    if (!key.empty()) failed_.insert(std::move(key));
    return false;
  }

  bool later_chains_fit(std::size_t from) const {
    for (std::size_t c = from; c < instance_.chain_count(); ++c) {
      const Chain& chain = instance_.chain(c);
      const Time last = chain.deadline - 1 - offsets_[c].back();
      bool any = false;
      for (Time x = chain.release; x <= last && !any; ++x) any = fits(c, x);
      if (!any) return false;
    }
    return true;
  }

  bool fits(std::size_t c, Time x) const {
    for (Time o : offsets_[c]) {
      auto it = load_.find(x + o);
      if (it != load_.end() && it->second >= instance_.machines()) return false;
    }
    return true;
  }

  void place(std::size_t c, Time x, int delta) {
    for (Time o : offsets_[c]) {
      auto& v = load_[x + o];
      v = static_cast<std::size_t>(static_cast<long long>(v) + delta);
      if (v == 0) load_.erase(x + o);
    }
  }

  const Instance& instance_;
  NodeCounter counter_;
  std::vector<std::vector<Time>> offsets_;
  std::vector<Time> starts_;
  std::unordered_map<Time, std::size_t> load_;
  std::vector<Time> reach_lo_, reach_hi_;
  static constexpr Time kMaxKeySpan = 4096;
  static constexpr std::size_t kMaxMemo = 2'000'000;
  std::unordered_set<std::vector<Time>, KeyHash> failed_;
};

// Minimum delays: depth-first over time steps; at each step choose which
// eligible jobs (at most m) start. Failed (time, progress) states are memoized.
class MinimumEngine {
 public:
  MinimumEngine(const Instance& instance, const OracleOptions& options)
      : instance_(instance), tight_(options.tight_delays), counter_(options.node_budget, "oracle_schedule") {
    for (const auto& c : instance.chains()) {
      tail_.push_back(tight_offsets(c));
      times_.emplace_back(c.job_count(), 0);
      next_.push_back(0);
      earliest_.push_back(c.release);
    }
    horizon_ = instance.max_deadline();
  }

  std::optional<Schedule> run() {
    if (!search(0)) return std::nullopt;
    return Schedule{times_};
  }

 private:
  bool done(std::size_t c) const { return next_[c] == instance_.chain(c).job_count(); }

  std::vector<Time> key(Time t) const {
    std::vector<Time> k{t};
    for (std::size_t c = 0; c < next_.size(); ++c) {
      k.push_back(static_cast<Time>(next_[c]));
      k.push_back(done(c) ? 0 : std::max<Time>(earliest_[c] - t, 0));
    }
    return k;
  }

  bool search(Time t) {
    counter_.tick();
    const std::size_t c_count = instance_.chain_count();
    bool all_done = true;
    for (std::size_t c = 0; c < c_count; ++c) all_done = all_done && done(c);
    if (all_done) return true;
    if (t >= horizon_) return false;

    std::vector<std::size_t> eligible;
    std::vector<bool> forced;
    for (std::size_t c = 0; c < c_count; ++c) {
      if (done(c)) continue;
      const Chain& chain = instance_.chain(c);
      const bool started = next_[c] > 0;
      if (tight_ && started && earliest_[c] < t) return false;
      const Time first_possible = std::max(earliest_[c], t);
      const Time last_start = first_possible + (tail_[c].back() - tail_[c][next_[c]]);
      if (last_start > chain.deadline - 1) return false;
      if (earliest_[c] <= t) {
        eligible.push_back(c);
        forced.push_back(tight_ && started);
      }
    }

    auto k = key(t);
    if (failed_.count(k)) return false;

    const std::size_t e = eligible.size();
    for (std::uint64_t mask = (std::uint64_t{1} << e); mask-- > 0;) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) > instance_.machines()) continue;
      bool ok = true;
      for (std::size_t i = 0; i < e; ++i) ok = ok && (!forced[i] || ((mask >> i) & 1));
      if (!ok) continue;

      std::vector<Time> saved_earliest = earliest_;
      for (std::size_t i = 0; i < e; ++i) {
        if (!((mask >> i) & 1)) continue;
        const std::size_t c = eligible[i];
        times_[c][next_[c]] = t;
        ++next_[c];
        if (!done(c)) earliest_[c] = t + instance_.chain(c).delays[next_[c] - 1] + 1;
      }
      if (search(t + 1)) return true;
      for (std::size_t i = 0; i < e; ++i)
        if ((mask >> i) & 1) --next_[eligible[i]];
      earliest_ = std::move(saved_earliest);
    }
    failed_.insert(std::move(k));
    return false;
  }

  const Instance& instance_;
  bool tight_;
  NodeCounter counter_;
  Time horizon_ = 0;
  std::vector<std::vector<Time>> tail_;
  std::vector<std::vector<Time>> times_;
  std::vector<std::size_t> next_;
  std::vector<Time> earliest_;
  std::unordered_set<std::vector<Time>, KeyHash> failed_;
};

}  // namespace detail

// Ground-truth feasibility. Exact mode returns the lexicographically smallest
// tuple of chain starts; minimum mode the first completion of its search.
// Every returned schedule passes verify_schedule.
inline std::optional<Schedule> oracle_schedule(const Instance& instance, const OracleOptions& options = {}) {
  std::optional<Schedule> out;
  if (instance.mode() == DelayMode::Exact) {
    out = detail::ExactEngine(instance, options).run();
  } else {
    out = detail::MinimumEngine(instance, options).run();
  }
  if (out && !verify_schedule(instance, *out).feasible())
    throw std::logic_error("oracle_schedule produced an infeasible witness");
  return out;
}

// Some independent set of size >= k (the lexicographically first of size k).
inline std::optional<VertexSet> max_independent_set(const Graph& g, std::size_t k,
                                                    std::uint64_t budget = kDefaultOracleBudget) {
  const std::size_t n = g.vertex_count();
  if (k > n) return std::nullopt;
  detail::NodeCounter counter(budget, "max_independent_set");
  VertexSet picked;
  std::function<bool(Vertex)> rec = [&](Vertex start) {
    counter.tick();
    if (picked.size() == k) return true;
    for (Vertex v = start; v + (k - picked.size()) <= n; ++v) {
      bool ok = true;
      for (Vertex u : picked) ok = ok && !g.adjacent(u, v);
      if (!ok) continue;
      picked.push_back(v);
      if (rec(v + 1)) return true;
      picked.pop_back();
    }
    return false;
  };
  if (rec(0)) return picked;
  return std::nullopt;
}

// Smallest set U, |U| <= k, with |N[v] ∩ U| >= r for every vertex v. Among
// sets of minimum size the lexicographically first is returned.
inline std::optional<VertexSet> threshold_dominating_set(const Graph& g, std::size_t k, std::size_t r,
                                                         std::uint64_t budget = kDefaultOracleBudget) {
  const std::size_t n = g.vertex_count();
  detail::NodeCounter counter(budget, "threshold_dominating_set");
  std::vector<VertexSet> closed(n);
  std::vector<std::vector<Vertex>> by_last_neighbor(n + 1);
  std::size_t widest = 0;
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = g.closed_neighborhood(v);
    widest = std::max(widest, closed[v].size());
    by_last_neighbor[closed[v].back()].push_back(v);
  }
  std::vector<std::size_t> count(n, 0);
  std::size_t deficit = r * n;
  VertexSet picked;

  auto add = [&](Vertex u, bool in) {
    for (Vertex v : closed[u]) {
      if (in) {
        if (count[v]++ < r) --deficit;
      } else {
        if (--count[v] < r) ++deficit;
      }
    }
  };

  std::function<bool(Vertex, std::size_t)> rec = [&](Vertex start, std::size_t size) {
    counter.tick();
    if (deficit == 0) return true;
    if (start > 0) {
      for (Vertex v : by_last_neighbor[start - 1])
        if (count[v] < r) return false;
    }
    const std::size_t left = size - picked.size();
    if (left == 0 || deficit > left * widest) return false;
    for (Vertex u = start; u < n; ++u) {
      // Vertices whose closed neighbourhood lies entirely below u can no longer gain.
      if (u > start) {
        for (Vertex v : by_last_neighbor[u - 1])
          if (count[v] < r) return false;
      }
      picked.push_back(u);
      add(u, true);
      if (rec(u + 1, size)) return true;
      add(u, false);
      picked.pop_back();
    }
    return false;
  };

  for (std::size_t size = 0; size <= std::min(k, n); ++size) {
    if (rec(0, size)) return picked;
  }
  return std::nullopt;
}

inline std::optional<VertexSet> min_dominating_set(const Graph& g, std::size_t k,
                                                   std::uint64_t budget = kDefaultOracleBudget) {
  return threshold_dominating_set(g, k, 1, budget);
}

enum class WeightPolicy { ExactlyK, AtMostK };

// Satisfying assignment with exactly (or at most) k true variables. Subsets of
// true variables are enumerated in lexicographic order; a clause is checked as
// soon as all of its variables are decided.
inline std::optional<std::vector<bool>> weighted_cnf_sat(const CnfFormula& f, std::size_t k, WeightPolicy policy,
                                                         std::uint64_t budget = kDefaultOracleBudget) {
  const std::size_t n = f.variable_count;
  detail::NodeCounter counter(budget, "weighted_cnf_sat");
  // Clauses bucketed by their largest variable; bucket n holds empty clauses.
  std::vector<std::vector<std::size_t>> decided_at(n + 1);
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    if (f.clauses[i].empty()) return std::nullopt;
    std::size_t last = 0;
    for (const auto& lit : f.clauses[i]) last = std::max(last, lit.var);
    decided_at[last].push_back(i);
  }
  std::vector<bool> value(n, false);
  auto clause_ok = [&](std::size_t i) {
    for (const auto& lit : f.clauses[i])
      if (value[lit.var] != lit.negated) return true;
    return false;
  };
  auto bucket_ok = [&](std::size_t v) {
    for (std::size_t i : decided_at[v])
      if (!clause_ok(i)) return false;
    return true;
  };

  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t remaining) {
    counter.tick();
    if (remaining == 0) {
      for (std::size_t v = start; v < n; ++v)
        if (!bucket_ok(v)) return false;
      return true;
    }
    for (std::size_t v = start; v + remaining <= n; ++v) {
      value[v] = true;
      if (bucket_ok(v) && rec(v + 1, remaining - 1)) return true;
      value[v] = false;
      // v is now decided false for every later branch.
      if (!bucket_ok(v)) return false;
    }
    return false;
  };

  const std::size_t lo = policy == WeightPolicy::ExactlyK ? k : 0;
  for (std::size_t size = lo; size <= std::min(k, n); ++size) {
    std::fill(value.begin(), value.end(), false);
    if (rec(0, size)) return value;
  }
  return std::nullopt;
}

// Assignment with exactly k true variables satisfying the formula.
inline std::optional<std::vector<bool>> weighted_normalized_sat(const NormalizedFormula& f, std::size_t k,
                                                                std::uint64_t budget = kDefaultOracleBudget) {
  const std::size_t n = f.variable_count;
  if (k > n) return std::nullopt;
  detail::NodeCounter counter(budget, "weighted_normalized_sat");
  std::vector<bool> value(n, false);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t remaining) {
    counter.tick();
    if (remaining == 0) return eval_normalized(f, value);
    for (std::size_t v = start; v + remaining <= n; ++v) {
      value[v] = true;
      if (rec(v + 1, remaining - 1)) return true;
      value[v] = false;
    }
    return false;
  };
  if (rec(0, k)) return value;
  return std::nullopt;
}

}  // namespace chainsched
