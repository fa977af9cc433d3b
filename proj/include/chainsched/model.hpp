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
#include <string>
#include <utility>
#include <vector>

#include "chainsched/checked.hpp"
#include "chainsched/errors.hpp"

namespace chainsched {

enum class DelayMode { Exact, Minimum };

inline const char* to_string(DelayMode mode) { return mode == DelayMode::Exact ? "exact" : "minimum"; }

// A chain of unit jobs. delays[i] is the delay between job i and job i+1,
// so the chain has delays.size() + 1 jobs.
struct Chain {
  Time release = 0;
  Time deadline = 1;
  std::vector<Time> delays;

  std::size_t job_count() const { return delays.size() + 1; }

  // Jobs plus delays: the least span from first job start to last job end.
  Time minimum_duration() const {
    Time d = static_cast<Time>(job_count());
    for (Time l : delays) d = checked_add(d, l);
    return d;
  }

  friend bool operator==(const Chain&, const Chain&) = default;
};

// Immutable problem instance. Construction validates every invariant.
class Instance {
 public:
  Instance() = default;

  Instance(std::size_t machines, DelayMode mode, std::vector<Chain> chains)
      : machines_(machines), mode_(mode), chains_(std::move(chains)) {
    if (machines_ < 1) throw InvalidInstance("machine count must be at least 1");
    for (std::size_t c = 0; c < chains_.size(); ++c) validate(chains_[c], c);
  }

  std::size_t machines() const { return machines_; }
  DelayMode mode() const { return mode_; }
  const std::vector<Chain>& chains() const { return chains_; }
  const Chain& chain(std::size_t c) const { return chains_.at(c); }
  std::size_t chain_count() const { return chains_.size(); }

  std::size_t job_count() const {
    std::size_t n = 0;
    for (const auto& c : chains_) n += c.job_count();
    return n;
  }

  Time max_delay() const {
    Time d = 0;
    for (const auto& c : chains_)
      for (Time l : c.delays) d = std::max(d, l);
    return d;
  }

  Time max_deadline() const {
    Time t = 0;
    for (const auto& c : chains_) t = std::max(t, c.deadline);
    return t;
  }

  Instance with_mode(DelayMode mode) const { return Instance(machines_, mode, chains_); }
  Instance with_machines(std::size_t m) const { return Instance(m, mode_, chains_); }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  static void validate(const Chain& c, std::size_t index) {
    const std::string where = "chain " + std::to_string(index) + ": ";
    if (c.release < 0) throw InvalidInstance(where + "negative release date");
    if (c.deadline <= c.release) throw InvalidInstance(where + "deadline must exceed release date");
    if (c.deadline > kTimeLimit) throw OverflowError(where + "deadline exceeds 2^62");
    Time end = c.release;
    for (Time l : c.delays) {
      if (l < 0) throw InvalidInstance(where + "negative delay");
      end = checked_add(end, checked_add(l, 1));
      if (end > kTimeLimit) throw OverflowError(where + "chain span exceeds 2^62");
    }
  }

  std::size_t machines_ = 1;
  DelayMode mode_ = DelayMode::Exact;
  std::vector<Chain> chains_;
};

// Per-chain, per-job start times.
struct Schedule {
  std::vector<std::vector<Time>> starts;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

enum class ViolationKind { ReleaseViolation, DeadlineViolation, DelayViolation, MachineOverload };

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::ReleaseViolation: return "ReleaseViolation";
    case ViolationKind::DeadlineViolation: return "DeadlineViolation";
    case ViolationKind::DelayViolation: return "DelayViolation";
    case ViolationKind::MachineOverload: return "MachineOverload";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  // (chain, job) pairs involved; for MachineOverload every job starting at `time`.
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  Time time = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Verdict {
  std::vector<Violation> violations;

  bool feasible() const { return violations.empty(); }
};

inline void check_shape(const Instance& instance, const Schedule& schedule) {
  if (schedule.starts.size() != instance.chain_count())
    throw ShapeMismatch("schedule has " + std::to_string(schedule.starts.size()) + " chains, instance has " +
                        std::to_string(instance.chain_count()));
  for (std::size_t c = 0; c < instance.chain_count(); ++c)
    if (schedule.starts[c].size() != instance.chain(c).job_count())
      throw ShapeMismatch("chain " + std::to_string(c) + ": schedule has " +
                          std::to_string(schedule.starts[c].size()) + " jobs, instance has " +
                          std::to_string(instance.chain(c).job_count()));
}

// Checks release dates, deadlines, delays and the per-step machine count.
// Machines are never assigned; only the number of jobs starting at each step matters.
inline Verdict verify_schedule(const Instance& instance, const Schedule& schedule) {
  check_shape(instance, schedule);
  Verdict verdict;
  std::vector<std::pair<Time, std::pair<std::size_t, std::size_t>>> events;

  for (std::size_t c = 0; c < instance.chain_count(); ++c) {
    const Chain& chain = instance.chain(c);
    const auto& times = schedule.starts[c];
    if (times.front() < chain.release)
      verdict.violations.push_back({ViolationKind::ReleaseViolation, {{c, 0}}, times.front()});
    for (std::size_t j = 0; j + 1 < times.size(); ++j) {
      const Time earliest = checked_add(times[j], checked_add(chain.delays[j], 1));
      const bool ok = instance.mode() == DelayMode::Exact ? times[j + 1] == earliest : times[j + 1] >= earliest;
      if (!ok) verdict.violations.push_back({ViolationKind::DelayViolation, {{c, j}, {c, j + 1}}, times[j + 1]});
    }
    const std::size_t last = times.size() - 1;
    if (times[last] >= chain.deadline)
      verdict.violations.push_back({ViolationKind::DeadlineViolation, {{c, last}}, times[last]});
    for (std::size_t j = 0; j < times.size(); ++j) events.push_back({times[j], {c, j}});
  }

  std::sort(events.begin(), events.end());
  for (std::size_t i = 0; i < events.size();) {
    std::size_t k = i;
    while (k < events.size() && events[k].first == events[i].first) ++k;
    if (k - i > instance.machines()) {
      Violation v{ViolationKind::MachineOverload, {}, events[i].first};
      for (std::size_t e = i; e < k; ++e) v.jobs.push_back(events[e].second);
      verdict.violations.push_back(std::move(v));
    }
    i = k;
  }
  return verdict;
}

// Maximum number of chains whose windows [r, d) contain a common time step.
inline std::size_t thickness(const Instance& instance) {
  std::vector<std::pair<Time, int>> events;
  for (const auto& c : instance.chains()) {
    events.push_back({c.release, +1});
    events.push_back({c.deadline, -1});
  }
  // Closing events sort before opening events at the same time: [r, d) is half-open.
  std::sort(events.begin(), events.end());
  std::size_t best = 0;
  std::size_t open = 0;
  for (const auto& [t, delta] : events) {
    if (delta > 0) {
      best = std::max(best, ++open);
    } else {
      --open;
    }
  }
  return best;
}

}  // namespace chainsched
