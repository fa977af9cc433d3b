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

#include <cstdint>
#include <limits>

#include "chainsched/errors.hpp"

namespace chainsched {

// Discrete time. A job starting at t occupies [t, t+1).
using Time = std::int64_t;

// Every release, deadline and chain span must stay within [0, kTimeLimit].
// Sums of two in-range values are then still representable.
inline constexpr Time kTimeLimit = Time{1} << 62;

inline Time checked_add(Time a, Time b) {
  Time out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

inline Time checked_sub(Time a, Time b) {
  Time out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in subtraction");
  return out;
}

inline Time checked_mul(Time a, Time b) {
  Time out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
  return out;
}

// Throws unless |v| <= kTimeLimit.
inline Time in_range(Time v) {
  if (v > kTimeLimit || v < -kTimeLimit) throw OverflowError("value exceeds the 2^62 range");
  return v;
}

// Saturating helpers for size bounds that only ever get compared.
inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) return std::numeric_limits<std::uint64_t>::max();
  return out;
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) return std::numeric_limits<std::uint64_t>::max();
  return out;
}

inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = saturating_mul(out, base);
  return out;
}

}  // namespace chainsched
