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
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chainsched/checked.hpp"
#include "chainsched/cnf.hpp"
#include "chainsched/dcs.hpp"
#include "chainsched/errors.hpp"
#include "chainsched/formula.hpp"
#include "chainsched/golomb.hpp"
#include "chainsched/graph.hpp"
#include "chainsched/model.hpp"

namespace chainsched {

// Lays out a chain as a sequence of jobs and idle steps, starting with a job.
class ChainBuilder {
 public:
  ChainBuilder& job(std::size_t count = 1) {
    for (std::size_t i = 0; i < count; ++i) {
      jobs_.push_back(pos_);
      pos_ = checked_add(pos_, 1);
    }
    return *this;
  }

  ChainBuilder& wait(Time steps) {
    if (steps < 0) throw std::logic_error("ChainBuilder::wait with negative length");
    pos_ = checked_add(pos_, steps);
    return *this;
  }

  Time position() const { return pos_; }
  bool empty() const { return jobs_.empty(); }

  // First job start to last job end.
  Time span() const { return jobs_.back() + 1; }

  Chain build(Time release, Time deadline) const {
    if (jobs_.empty() || jobs_.front() != 0) throw std::logic_error("ChainBuilder: chain must begin with a job");
    Chain c{release, deadline, {}};
    for (std::size_t i = 1; i < jobs_.size(); ++i) c.delays.push_back(jobs_[i] - jobs_[i - 1] - 1);
    return c;
  }

  // Deadline that leaves `slack` extra start positions after `release`.
  Chain build_with_slack(Time release, Time slack) const {
    return build(release, checked_add(checked_add(release, span()), slack));
  }

 private:
  std::vector<Time> jobs_;
  Time pos_ = 0;
};

inline constexpr Time kMaxStartsPerChain = 10'000'000;

// Start times t with r <= t and t + s(last) < d.
inline std::vector<Time> feasible_starts(const Chain& c) {
  std::vector<Time> out;
  const Time last = c.deadline - 1 - chain_offsets(c).back();
  if (last - c.release >= kMaxStartsPerChain) throw BudgetExceeded("chain window too wide to enumerate start times");
  for (Time t = c.release; t <= last; ++t) out.push_back(t);
  return out;
}

// ---------------------------------------------------------------------------
// Independent Set -> one machine, exact delays, k+1 chains.

inline Instance independent_set_to_scheduling(const Graph& g, std::size_t k) {
  if (k < 1) throw InvalidParameter("independent_set_to_scheduling needs k >= 1");
  const std::size_t n = g.vertex_count();
  if (n == 0) throw DegenerateInput("independent_set_to_scheduling needs at least one vertex");
  const std::vector<Time> ruler = golomb_ruler(n);
  const Time c0 = ruler.back() + 1;

  std::vector<Chain> chains;

  // Start-time forcing chain: a job at every t in [1, c0-1] outside the ruler,
  // no slack. With a single vertex there is nothing to force.
  ChainBuilder forcing;
  Time cursor = 1;
  for (Time t = 1; t <= c0 - 1; ++t) {
    if (std::binary_search(ruler.begin(), ruler.end(), t)) continue;
    if (!forcing.empty()) forcing.wait(t - cursor);
    forcing.job();
    cursor = t + 1;
  }
  if (!forcing.empty()) chains.push_back(forcing.build_with_slack(1, 0));

  struct Label {
    Vertex u, v;
    std::size_t a, b;
  };
  std::vector<Label> labels;
  for (auto [u, v] : g.edges())
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        if (a != b) labels.push_back({u, v, a, b});

  // Vertex selection chains may start at 0..c0-1.
  for (std::size_t a = 0; a < k; ++a) {
    ChainBuilder sel;
    sel.job().wait(c0 - 1);
    for (const auto& l : labels) {
      if (l.a == a) {
        sel.wait(c0 - ruler[l.u]).job().wait(c0 + ruler[l.u]);
      } else if (l.b == a) {
        sel.wait(c0 - ruler[l.v]).job().wait(c0 + ruler[l.v]);
      } else {
        sel.wait(2 * c0 + 1);
      }
    }
    sel.job();
    chains.push_back(sel.build_with_slack(0, c0 - 1));
  }
  return Instance(1, DelayMode::Exact, std::move(chains));
}

// Vertex i of a graph built from a schedule instance stands for chain
// labels[i].first starting at time labels[i].second.
struct StartGraph {
  Graph graph;
  std::size_t k = 0;
  std::vector<std::pair<std::size_t, Time>> labels;
};

namespace detail {

// Do two sorted time lists share an element?
inline bool intersects(const std::vector<Time>& a, Time shift_a, const std::vector<Time>& b, Time shift_b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const Time x = a[i] + shift_a;
    const Time y = b[j] + shift_b;
    if (x == y) return true;
    if (x < y) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

inline void require_exact(const Instance& instance, const char* who) {
  if (instance.mode() != DelayMode::Exact) throw InvalidParameter(std::string(who) + " requires exact delays");
}

}  // namespace detail

// One machine, exact delays -> Independent Set with k = chain count.
inline StartGraph scheduling_to_independent_set(const Instance& instance) {
  detail::require_exact(instance, "scheduling_to_independent_set");
  if (instance.machines() != 1) throw InvalidParameter("scheduling_to_independent_set requires a single machine");
  StartGraph out;
  out.k = instance.chain_count();
  std::vector<std::vector<Time>> offsets;
  for (std::size_t c = 0; c < instance.chain_count(); ++c) {
    offsets.push_back(chain_offsets(instance.chain(c)));
    for (Time t : feasible_starts(instance.chain(c))) out.labels.push_back({c, t});
  }
  out.graph = Graph(out.labels.size());
  for (std::size_t a = 0; a < out.labels.size(); ++a)
    for (std::size_t b = a + 1; b < out.labels.size(); ++b) {
      const auto [ca, ta] = out.labels[a];
      const auto [cb, tb] = out.labels[b];
      if (ca == cb || detail::intersects(offsets[ca], ta, offsets[cb], tb)) out.graph.add_edge(a, b);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Exact delays, m machines -> weighted CNF-SAT with k = chain count.

struct StartCnf {
  CnfFormula cnf;
  std::size_t k = 0;
  std::vector<std::pair<std::size_t, Time>> labels;  // variable -> (chain, start)
};

inline StartCnf scheduling_to_weighted_cnf(const Instance& instance, std::size_t max_clauses = 5'000'000) {
  detail::require_exact(instance, "scheduling_to_weighted_cnf");
  StartCnf out;
  out.k = instance.chain_count();
  std::map<Time, std::vector<std::size_t>> starting_at;  // S_t: variables with a job at t
  for (std::size_t c = 0; c < instance.chain_count(); ++c) {
    const auto off = chain_offsets(instance.chain(c));
    Clause chain_clause;
    for (Time t : feasible_starts(instance.chain(c))) {
      const std::size_t var = out.labels.size();
      out.labels.push_back({c, t});
      chain_clause.push_back({var, false});
      for (Time o : off) starting_at[t + o].push_back(var);
    }
    out.cnf.clauses.push_back(std::move(chain_clause));
  }
  out.cnf.variable_count = out.labels.size();

  // Every (m+1)-subset of S_t gets a clause of negated literals.
  const std::size_t pick = instance.machines() + 1;
  for (const auto& [t, vars] : starting_at) {
    if (vars.size() < pick) continue;
    std::vector<std::size_t> idx(pick);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
      Clause clause;
      for (std::size_t i : idx) clause.push_back({vars[i], true});
      out.cnf.clauses.push_back(std::move(clause));
      if (out.cnf.clauses.size() > max_clauses)
        throw BudgetExceeded("scheduling_to_weighted_cnf: more than " + std::to_string(max_clauses) + " clauses");
      std::size_t i = pick;
      while (i > 0 && idx[i - 1] == vars.size() - pick + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < pick; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dominating Set -> exact delays, k machines, k+1 chains.

inline Instance dominating_set_to_scheduling(const Graph& g, std::size_t k) {
  if (k < 1) throw InvalidParameter("dominating_set_to_scheduling needs k >= 1");
  const std::size_t n = g.vertex_count();
  if (n < 2) throw DegenerateInput("dominating_set_to_scheduling needs at least two vertices");
  const Time nn = static_cast<Time>(n);

  std::vector<Chain> chains;
  // Check chain: n jobs, delay n-1, pinned to start at 2n-1.
  ChainBuilder check;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) check.wait(nn - 1);
    check.job();
  }
  chains.push_back(check.build_with_slack(2 * nn - 1, 0));

  // Selection chains: block i (vertex v_i) has no job at position j exactly
  // when v_{n-j} lies in the closed neighbourhood of v_i.
  ChainBuilder sel;
  sel.job().wait(nn - 1);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vertex vi = i - 1;
      const Vertex other = n - j - 1;
      if (vi == other || g.adjacent(vi, other)) {
        sel.wait(1);
      } else {
        sel.job();
      }
    }
  sel.job();
  const Chain selection = sel.build_with_slack(0, nn - 1);
  for (std::size_t a = 0; a < k; ++a) chains.push_back(selection);
  return Instance(k, DelayMode::Exact, std::move(chains));
}

// ---------------------------------------------------------------------------
// Exact delays, m machines -> Threshold Dominating Set (closed neighbourhoods).

struct ThresholdDsInstance {
  Graph graph;
  std::size_t k = 0;
  std::size_t r = 0;
};

inline ThresholdDsInstance scheduling_to_threshold_ds(const Instance& instance) {
  detail::require_exact(instance, "scheduling_to_threshold_ds");
  const std::size_t c = instance.chain_count();
  const std::size_t m = instance.machines();

  if (c <= m) {
    // Machines never run out, so feasibility is per chain.
    bool all_fit = true;
    for (const auto& ch : instance.chains()) all_fit = all_fit && !feasible_starts(ch).empty();
    if (all_fit) return {Graph(1), 1, 0};
    return {Graph(1), 0, 1};
  }

  const std::size_t surplus = c - m;
  const Time horizon = instance.max_deadline();

  std::vector<std::vector<Time>> offsets;
  std::vector<std::pair<std::size_t, Time>> x_labels;
  std::vector<std::vector<Vertex>> x_of_chain(c);
  for (std::size_t ch = 0; ch < c; ++ch) {
    offsets.push_back(chain_offsets(instance.chain(ch)));
    for (Time t : feasible_starts(instance.chain(ch))) {
      x_of_chain[ch].push_back(x_labels.size());
      x_labels.push_back({ch, t});
    }
  }
  const std::size_t x_count = x_labels.size();
  const std::size_t y_base = x_count;
  const std::size_t z_base = y_base + static_cast<std::size_t>(horizon);
  const std::size_t w_base = z_base + c * (c + 1);
  const std::size_t w_count = surplus > 1 ? surplus - 1 : 0;
  const std::size_t v_vertex = w_base + w_count;
  const std::size_t total = w_base + w_count + (surplus > 1 ? 1 : 0);

  Graph g(total);
  for (std::size_t ch = 0; ch < c; ++ch) {
    const auto& xs = x_of_chain[ch];
    for (std::size_t a = 0; a < xs.size(); ++a)
      for (std::size_t b = a + 1; b < xs.size(); ++b) g.add_edge(xs[a], xs[b]);
  }
  for (std::size_t x = 0; x < x_count; ++x) {
    const auto [ch, t] = x_labels[x];
    const auto& off = offsets[ch];
    for (Time tp = 0; tp < horizon; ++tp)
      if (!std::binary_search(off.begin(), off.end(), tp - t)) g.add_edge(x, y_base + static_cast<std::size_t>(tp));
  }
  for (std::size_t ch = 0; ch < c; ++ch)
    for (std::size_t alpha = 0; alpha <= c; ++alpha) {
      const Vertex z = z_base + ch * (c + 1) + alpha;
      for (Vertex x : x_of_chain[ch]) g.add_edge(z, x);
    }
  if (surplus > 1) {
    for (std::size_t i = 0; i < w_count; ++i) {
      const Vertex w = w_base + i;
      for (std::size_t j = i + 1; j < w_count; ++j) g.add_edge(w, w_base + j);
      g.add_edge(v_vertex, w);
      for (Vertex x = 0; x < x_count; ++x) g.add_edge(w, x);
      for (Vertex z = z_base; z < w_base; ++z) g.add_edge(w, z);
    }
    return {std::move(g), 2 * c - m, surplus};
  }
  return {std::move(g), c, 1};
}

// ---------------------------------------------------------------------------
// Weighted t-normalized SAT -> exact delays, k + t' machines.

// Interval of one formula node. [lo, hi] has length equal to the node's size;
// [lo, slot_hi] is the room its parent reserved (longer for OR terms that are
// smaller than their largest sibling).
struct NodeInterval {
  const FormulaNode* node = nullptr;
  Time size = 0;
  Time lo = 0;
  Time hi = 0;
  Time slot_hi = 0;
  Time widest_child = 0;  // s_max, OR nodes only
  std::size_t parent = 0;  // index into the assignment; the root is its own parent
};

// Nodes in preorder, which is also left-to-right order of their intervals.
using IntervalAssignment = std::vector<NodeInterval>;

namespace detail {

inline Time node_size(const FormulaNode& node, Time n) {
  switch (node.kind) {
    case FormulaNode::Kind::Literal:
      return in_range(checked_mul(2, n));
    case FormulaNode::Kind::And: {
      Time s = 0;
      for (const auto& ch : node.children) s = in_range(checked_add(s, node_size(ch, n)));
      return s;
    }
    case FormulaNode::Kind::Or: {
      Time widest = 0;
      for (const auto& ch : node.children) widest = std::max(widest, node_size(ch, n));
      return in_range(checked_mul(checked_add(checked_mul(2, static_cast<Time>(node.children.size())), 1), widest));
    }
  }
  return 0;
}

inline void assign(const FormulaNode& node, Time n, Time lo, Time slot_hi, std::size_t parent, IntervalAssignment& out) {
  const std::size_t self = out.size();
  NodeInterval iv;
  iv.node = &node;
  iv.size = node_size(node, n);
  iv.lo = lo;
  iv.hi = checked_add(lo, iv.size);
  iv.slot_hi = slot_hi;
  iv.parent = parent;
  out.push_back(iv);
  if (node.kind == FormulaNode::Kind::And) {
    Time at = lo;
    for (const auto& ch : node.children) {
      const Time s = node_size(ch, n);
      assign(ch, n, at, at + s, self, out);
      at += s;
    }
  } else if (node.kind == FormulaNode::Kind::Or) {
    Time widest = 0;
    for (const auto& ch : node.children) widest = std::max(widest, node_size(ch, n));
    out[self].widest_child = widest;
    for (std::size_t i = 1; i <= node.children.size(); ++i) {
      const Time a = lo + static_cast<Time>(2 * i - 1) * widest;
      assign(node.children[i - 1], n, a, a + widest, self, out);
    }
  }
}

// Wraps every literal in singleton ORs until each has exactly `depth` OR ancestors.
inline FormulaNode pad_disjunctions(const FormulaNode& node, std::size_t depth, std::size_t seen = 0) {
  if (node.is_literal()) {
    FormulaNode out = node;
    for (std::size_t i = seen; i < depth; ++i) out = FormulaNode::any_of({std::move(out)});
    return out;
  }
  FormulaNode out = node;
  const std::size_t below = seen + (node.kind == FormulaNode::Kind::Or ? 1 : 0);
  for (auto& ch : out.children) ch = pad_disjunctions(ch, depth, below);
  return out;
}

}  // namespace detail

// Literal: 2n. AND: sum of terms. OR of q terms: (2q+1) * largest term.
// The root gets [n, n + s(F)]; AND terms are laid out back to back, OR term i
// (from 1) gets the slot starting at lo + (2i-1) * s_max.
inline IntervalAssignment assign_intervals(const NormalizedFormula& f) {
  IntervalAssignment out;
  const Time n = static_cast<Time>(f.variable_count);
  const Time root_size = detail::node_size(f.root, n);
  detail::assign(f.root, n, n, checked_add(n, root_size), 0, out);
  return out;
}

// The formula with every literal under the same number of OR nodes.
inline NormalizedFormula pad_formula(const NormalizedFormula& f) {
  return NormalizedFormula(f.variable_count, detail::pad_disjunctions(f.root, disjunction_depth(f.root)));
}

// Chains in order: k true-variable chains, m-1 fill chains, check chains,
// one chain per OR node. Literals with fewer OR ancestors than the deepest
// one are first padded with singleton ORs.
inline Instance normalized_sat_to_scheduling(const NormalizedFormula& input, std::size_t k) {
  if (k < 1) throw InvalidParameter("normalized_sat_to_scheduling needs k >= 1");
  if (input.variable_count == 0 || literal_count(input.root) == 0)
    throw DegenerateInput("formula has no literals");
  const NormalizedFormula f = pad_formula(input);
  const Time n = static_cast<Time>(f.variable_count);
  const std::size_t t_prime = disjunction_depth(f.root);
  const std::size_t m = k + t_prime;
  const IntervalAssignment intervals = assign_intervals(f);
  const Time root_hi = intervals.front().hi;

  std::vector<Chain> chains;

  // True-variable chains: starting at i selects x_i.
  ChainBuilder tv;
  tv.job().wait(n - 1);
  Time at = n;
  for (const auto& iv : intervals) {
    if (!iv.node->is_literal()) continue;
    const Time i = static_cast<Time>(iv.node->var);
    tv.wait(iv.lo - at);
    if (!iv.node->negated) {
      tv.job(static_cast<std::size_t>(n - 1 - i)).wait(1).job(static_cast<std::size_t>(i)).wait(n);
    } else {
      tv.wait(n - 1 - i).job().wait(i).wait(n);
    }
    at = iv.lo + 2 * n;
  }
  tv.wait(root_hi - at).job();
  const Chain true_variable = tv.build_with_slack(0, n - 1);
  for (std::size_t i = 0; i < k; ++i) chains.push_back(true_variable);

  // Fill chains occupy m-1 machines during [0, n).
  ChainBuilder fill;
  fill.job(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i + 1 < m; ++i) chains.push_back(fill.build(0, n));

  // Check chains: one job at lo + n - 1 per positive literal, k per negative one.
  for (const auto& iv : intervals) {
    if (!iv.node->is_literal()) continue;
    const Chain check{iv.lo + n - 1, iv.lo + n, {}};
    const std::size_t copies = iv.node->negated ? k : 1;
    for (std::size_t i = 0; i < copies; ++i) chains.push_back(check);
  }

  // Disjunction chains: 3 * s_max back-to-back jobs inside the OR's interval.
  for (const auto& iv : intervals) {
    if (iv.node->kind != FormulaNode::Kind::Or) continue;
    ChainBuilder d;
    d.job(static_cast<std::size_t>(3 * iv.widest_child));
    chains.push_back(d.build(iv.lo, iv.hi));
  }
  return Instance(m, DelayMode::Exact, std::move(chains));
}

// ---------------------------------------------------------------------------
// m machines -> 1 machine: every step becomes tau steps.

namespace detail {

// Colours chains 0..thickness-1 so that chains with overlapping windows differ.
inline std::vector<std::size_t> color_windows(const Instance& instance) {
  const auto& chains = instance.chains();
  std::vector<std::size_t> order(chains.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return chains[a].release < chains[b].release; });
  std::vector<std::size_t> color(chains.size(), 0);
  std::vector<std::pair<Time, std::size_t>> active;  // (deadline, colour)
  for (std::size_t c : order) {
    const Time r = chains[c].release;
    active.erase(std::remove_if(active.begin(), active.end(), [&](const auto& a) { return a.first <= r; }),
                 active.end());
    std::size_t pick = 0;
    while (std::any_of(active.begin(), active.end(), [&](const auto& a) { return a.second == pick; })) ++pick;
    color[c] = pick;
    active.push_back({chains[c].deadline, pick});
  }
  return color;
}

}  // namespace detail

// Regular chains keep their order and come first; then tau - m single-job
// extra chains for every window [i*tau, (i+1)*tau), i = 0..T-1.
inline Instance multi_to_single_machine(const Instance& instance, std::size_t tau) {
  detail::require_exact(instance, "multi_to_single_machine");
  if (tau < thickness(instance)) throw InvalidParameter("tau is below the instance thickness");
  if (tau < instance.machines()) throw InvalidParameter("tau is below the machine count");
  const Time scale = static_cast<Time>(tau);
  std::vector<Chain> chains;
  for (const auto& c : instance.chains()) {
    Chain out{checked_mul(c.release, scale), checked_mul(c.deadline, scale), {}};
    for (Time d : c.delays) out.delays.push_back(checked_add(checked_mul(scale, d), scale - 1));
    chains.push_back(std::move(out));
  }
  const Time horizon = instance.max_deadline();
  const std::size_t extras = tau - instance.machines();
  for (Time i = 0; i < horizon; ++i)
    for (std::size_t e = 0; e < extras; ++e)
      chains.push_back(Chain{checked_mul(i, scale), checked_mul(i + 1, scale), {}});
  return Instance(1, DelayMode::Exact, std::move(chains));
}

// A schedule of the m-machine instance as a schedule of its 1-machine image.
inline Schedule lift_to_single_machine(const Instance& instance, std::size_t tau, const Schedule& schedule) {
  check_shape(instance, schedule);
  const Time scale = static_cast<Time>(tau);
  const auto color = detail::color_windows(instance);
  Schedule out;
  std::map<Time, std::vector<bool>> used;  // original step -> occupied offsets
  for (std::size_t c = 0; c < instance.chain_count(); ++c) {
    std::vector<Time> times;
    for (Time t : schedule.starts[c]) {
      times.push_back(checked_add(checked_mul(t, scale), static_cast<Time>(color[c])));
      auto& slots = used[t];
      slots.resize(tau, false);
      slots[color[c]] = true;
    }
    out.starts.push_back(std::move(times));
  }
  const std::size_t extras = tau - instance.machines();
  for (Time i = 0; i < instance.max_deadline(); ++i) {
    auto slots = used.count(i) ? used[i] : std::vector<bool>(tau, false);
    std::size_t next = 0;
    for (std::size_t e = 0; e < extras; ++e) {
      while (next < tau && slots[next]) ++next;
      if (next == tau) throw InvalidParameter("schedule uses more than m machines");
      slots[next] = true;
      out.starts.push_back({i * scale + static_cast<Time>(next)});
    }
  }
  return out;
}

// A schedule of the 1-machine image mapped back to the m-machine instance.
inline Schedule project_to_multi_machine(const Instance& instance, std::size_t tau, const Schedule& single) {
  if (single.starts.size() < instance.chain_count()) throw ShapeMismatch("schedule has too few chains");
  const Time scale = static_cast<Time>(tau);
  Schedule out;
  for (std::size_t c = 0; c < instance.chain_count(); ++c) {
    std::vector<Time> times;
    for (Time t : single.starts[c]) times.push_back(t / scale);
    out.starts.push_back(std::move(times));
  }
  return out;
}

// ---------------------------------------------------------------------------
// 1 machine -> m machines: m-1 rigid chains fill [0, T).

inline Instance single_to_multi_machine(const Instance& instance, std::size_t m) {
  if (m < 1) throw InvalidParameter("machine count must be at least 1");
  if (instance.machines() != 1) throw InvalidParameter("single_to_multi_machine requires a single-machine input");
  const Time horizon = instance.max_deadline();
  std::vector<Chain> chains = instance.chains();
  if (horizon > 0) {
    const Chain filler{0, horizon, std::vector<Time>(static_cast<std::size_t>(horizon - 1), 0)};
    for (std::size_t i = 0; i + 1 < m; ++i) chains.push_back(filler);
  }
  return Instance(m, instance.mode(), std::move(chains));
}

// ---------------------------------------------------------------------------
// Exact -> minimum delays: cT+1 copies of every chain back to back.

inline constexpr std::size_t kMaxConstructedJobs = 100'000'000;

inline Instance exact_to_minimum(const Instance& instance) {
  detail::require_exact(instance, "exact_to_minimum");
  const Time horizon = instance.max_deadline();
  const Time c = static_cast<Time>(instance.chain_count());
  const Time copies = checked_add(checked_mul(c, horizon), 1);
  const Time deadline_shift = in_range(checked_mul(checked_mul(c, horizon), horizon));
  std::vector<Chain> chains;
  for (const auto& ch : instance.chains()) {
    const Time duration = ch.minimum_duration();
    if (duration > horizon) throw InvalidParameter("a chain's minimum duration exceeds the largest deadline");
    if (checked_mul(copies, static_cast<Time>(ch.job_count())) > static_cast<Time>(kMaxConstructedJobs))
      throw OverflowError("exact_to_minimum: output would exceed " + std::to_string(kMaxConstructedJobs) + " jobs");
    Chain out{ch.release, checked_add(deadline_shift, ch.deadline), {}};
    for (Time a = 0; a < copies; ++a) {
      if (a > 0) out.delays.push_back(horizon - duration);
      out.delays.insert(out.delays.end(), ch.delays.begin(), ch.delays.end());
    }
    chains.push_back(std::move(out));
  }
  return Instance(instance.machines(), DelayMode::Minimum, std::move(chains));
}

// Copy a (from 0) of job j runs at a*T + t(j).
inline Schedule exact_to_minimum_schedule(const Instance& instance, const Schedule& schedule) {
  check_shape(instance, schedule);
  const Time horizon = instance.max_deadline();
  const Time copies = static_cast<Time>(instance.chain_count()) * horizon + 1;
  Schedule out;
  for (const auto& times : schedule.starts) {
    std::vector<Time> lifted;
    for (Time a = 0; a < copies; ++a)
      for (Time t : times) lifted.push_back(checked_add(checked_mul(a, horizon), t));
    out.starts.push_back(std::move(lifted));
  }
  return out;
}

}  // namespace chainsched
