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

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <string_view>

#include <json.hpp>

#include "chainsched/checked.hpp"
#include "chainsched/errors.hpp"

// Small helpers shared by every JSON reader and writer in the library.
namespace chainsched::json_io {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

inline json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end(), nullptr, /*allow_exceptions=*/true, /*ignore_comments=*/false);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

inline const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field \"" + key + "\"");
  return *it;
}

inline void reject_unknown(const json& obj, std::initializer_list<std::string_view> known, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (auto k : known) ok = ok || it.key() == k;
    if (!ok) throw ParseError(where + ": unknown field \"" + it.key() + "\"");
  }
}

// Integer in [lo, kTimeLimit]. Larger integers are overflow, not parse, errors.
inline Time integer(const json& v, const std::string& where, Time lo = 0) {
  if (v.is_number_unsigned()) {
    const auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(kTimeLimit)) throw OverflowError(where + ": value exceeds 2^62");
    const auto t = static_cast<Time>(u);
    if (t < lo) throw ParseError(where + ": value below " + std::to_string(lo));
    return t;
  }
  if (v.is_number_integer()) {
    const auto t = v.get<std::int64_t>();
    if (t < -kTimeLimit) throw OverflowError(where + ": value exceeds 2^62");
    if (t < lo) throw ParseError(where + ": value below " + std::to_string(lo));
    return t;
  }
  // integer literals past uint64 come back as doubles
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::isfinite(d) && std::floor(d) == d && std::fabs(d) > static_cast<double>(kTimeLimit))
      throw OverflowError(where + ": value exceeds 2^62");
  }
  throw ParseError(where + ": expected an integer");
}

inline const json& array(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  return v;
}

}  // namespace chainsched::json_io
