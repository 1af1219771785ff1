// Copyright 2026 The nonstab Authors
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

#include "nonstab/galois.hpp"

namespace nonstab {

// Budgets for the exhaustive enumerations. Exceeding one throws CapExceeded
// instead of running for an unbounded amount of time.
struct Limits {
  BigInt max_errors = 10'000'000;  // size of a weight-bounded error sphere
  BigInt max_group = 65'536;       // #S, or q^n for explicit state vectors
  unsigned threads = 1;
};

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what_budget, const BigInt& required, const BigInt& cap)
      : std::runtime_error(what_budget + " budget exceeded: requires " + required.str() +
                           ", cap is " + cap.str()),
        required_(required),
        cap_(cap) {}

  const BigInt& required() const { return required_; }
  const BigInt& cap() const { return cap_; }

 private:
  BigInt required_;
  BigInt cap_;
};

inline void check_cap(const std::string& what_budget, const BigInt& required, const BigInt& cap) {
  if (required > cap) throw CapExceeded(what_budget, required, cap);
}

}  // namespace nonstab
