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
#include <unordered_set>
#include <vector>

#include "chainsched/checked.hpp"
#include "chainsched/errors.hpp"

namespace chainsched {

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// All differences a - b of distinct elements are distinct.
inline bool is_golomb(std::vector<Time> s) {
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  std::unordered_set<Time> seen;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!seen.insert(s[j] - s[i]).second) return false;
  return true;
}

// Erdős–Turán ruler: for the smallest prime p >= max(3, n),
// {2pk + (k^2 mod p) : 0 <= k < p} is Golomb; keep its n smallest elements.
// All elements are below 4n^2.
inline std::vector<Time> golomb_ruler(std::size_t n) {
  if (n < 1) throw InvalidParameter("golomb_ruler needs n >= 1");
  std::uint64_t p = std::max<std::uint64_t>(3, n);
  while (!is_prime(p)) ++p;
  std::vector<Time> out;
  // 2pk + (k^2 mod p) is increasing in k, so the first n values are the smallest.
  for (std::uint64_t k = 0; k < n; ++k) {
    const Time v = checked_add(checked_mul(checked_mul(2, static_cast<Time>(p)), static_cast<Time>(k)),
                               static_cast<Time>((k * k) % p));
    out.push_back(v);
  }
  return out;
}

}  // namespace chainsched
