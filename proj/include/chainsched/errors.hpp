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

#include <stdexcept>
#include <string>

namespace chainsched {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (JSON, DIMACS).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A value left the checked 2^62 range or an int64 operation overflowed.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Constructed object violates its invariants (r >= d, negative delay, ...).
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

// A schedule does not have the shape of the instance it is checked against.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

// Exhaustive search or DP exceeded its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Input is outside the range where a construction is meaningful.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

}  // namespace chainsched
