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

#include <string>
#include <string_view>
#include <vector>

#include "chainsched/json_io.hpp"
#include "chainsched/model.hpp"

namespace chainsched {

// Instance document:
//   {"machines": m, "mode": "exact"|"minimum",
//    "chains": [{"release": r, "deadline": d, "jobs": s, "delays": [...]}]}
inline Instance instance_from_json(const json_io::json& doc) {
  using namespace json_io;
  reject_unknown(doc, {"machines", "mode", "chains"}, "instance");
  const Time machines = integer(field(doc, "machines", "instance"), "instance.machines", 1);
  const auto& mode_field = field(doc, "mode", "instance");
  if (!mode_field.is_string()) throw ParseError("instance.mode: expected \"exact\" or \"minimum\"");
  const auto mode_text = mode_field.get<std::string>();
  DelayMode mode;
  if (mode_text == "exact") {
    mode = DelayMode::Exact;
  } else if (mode_text == "minimum") {
    mode = DelayMode::Minimum;
  } else {
    throw ParseError("instance.mode: expected \"exact\" or \"minimum\", got \"" + mode_text + "\"");
  }

  std::vector<Chain> chains;
  const auto& list = array(field(doc, "chains", "instance"), "instance.chains");
  for (std::size_t c = 0; c < list.size(); ++c) {
    const std::string where = "instance.chains[" + std::to_string(c) + "]";
    const auto& obj = list[c];
    reject_unknown(obj, {"release", "deadline", "jobs", "delays"}, where);
    Chain chain;
    chain.release = integer(field(obj, "release", where), where + ".release");
    chain.deadline = integer(field(obj, "deadline", where), where + ".deadline");
    const Time jobs = integer(field(obj, "jobs", where), where + ".jobs", 1);
    const auto& delays = array(field(obj, "delays", where), where + ".delays");
    if (delays.size() + 1 != static_cast<std::size_t>(jobs))
      throw ParseError(where + ": expected " + std::to_string(jobs - 1) + " delays, got " +
                       std::to_string(delays.size()));
    for (std::size_t j = 0; j < delays.size(); ++j)
      chain.delays.push_back(integer(delays[j], where + ".delays[" + std::to_string(j) + "]"));
    if (chain.deadline <= chain.release) throw ParseError(where + ": deadline must exceed release date");
    chains.push_back(std::move(chain));
  }
  try {
    return Instance(static_cast<std::size_t>(machines), mode, std::move(chains));
  } catch (const InvalidInstance& e) {
    throw ParseError(e.what());
  }
}

inline Instance parse_instance(std::string_view text) { return instance_from_json(json_io::parse_document(text)); }

inline json_io::ordered_json instance_to_json(const Instance& instance) {
  json_io::ordered_json doc;
  doc["machines"] = instance.machines();
  doc["mode"] = to_string(instance.mode());
  doc["chains"] = json_io::ordered_json::array();
  for (const auto& c : instance.chains()) {
    json_io::ordered_json chain;
    chain["release"] = c.release;
    chain["deadline"] = c.deadline;
    chain["jobs"] = c.job_count();
    chain["delays"] = c.delays;
    doc["chains"].push_back(std::move(chain));
  }
  return doc;
}

inline std::string serialize_instance(const Instance& instance) { return instance_to_json(instance).dump(); }

// Schedule document: {"starts": [[t, ...], ...]}
inline Schedule parse_schedule(std::string_view text) {
  using namespace json_io;
  const auto doc = parse_document(text);
  reject_unknown(doc, {"starts"}, "schedule");
  Schedule s;
  const auto& chains = array(field(doc, "starts", "schedule"), "schedule.starts");
  for (std::size_t c = 0; c < chains.size(); ++c) {
    const std::string where = "schedule.starts[" + std::to_string(c) + "]";
    std::vector<Time> times;
    for (std::size_t j = 0; j < array(chains[c], where).size(); ++j)
      times.push_back(integer(chains[c][j], where + "[" + std::to_string(j) + "]"));
    s.starts.push_back(std::move(times));
  }
  return s;
}

inline std::string serialize_schedule(const Schedule& schedule) {
  json_io::ordered_json doc;
  doc["starts"] = json_io::ordered_json::array();
  for (const auto& times : schedule.starts) doc["starts"].push_back(times);
  return doc.dump();
}

inline std::string serialize_verdict(const Verdict& verdict) {
  json_io::ordered_json doc;
  doc["feasible"] = verdict.feasible();
  doc["violations"] = json_io::ordered_json::array();
  for (const auto& v : verdict.violations) {
    json_io::ordered_json item;
    item["kind"] = to_string(v.kind);
    item["time"] = v.time;
    item["jobs"] = json_io::ordered_json::array();
    for (const auto& [c, j] : v.jobs) item["jobs"].push_back({{"chain", c}, {"job", j}});
    doc["violations"].push_back(std::move(item));
  }
  return doc.dump();
}

}  // namespace chainsched
