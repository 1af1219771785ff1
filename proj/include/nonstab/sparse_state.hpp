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

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "nonstab/weyl.hpp"

namespace nonstab::oracle {

using weyl::Complex;
using weyl::Word;

// Amplitudes on length-n words over {0..radix-1}. A word is stored as its
// big-endian base-radix index (digit 0 is the most significant), so entries
// are kept sorted and summation order is fixed.
class SparseState {
 public:
  static constexpr double kPrune = 1e-14;
  using Entry = std::pair<std::uint64_t, Complex>;

  SparseState(std::uint32_t radix, std::size_t length);
  static SparseState basis(std::uint32_t radix, const Word& word);
  // Merges duplicate indices and prunes tiny amplitudes.
  static SparseState from_entries(std::uint32_t radix, std::size_t length, std::vector<Entry> entries);

  std::uint32_t radix() const { return radix_; }
  std::size_t length() const { return length_; }
  std::uint64_t dimension() const { return dimension_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Complex amplitude(std::uint64_t index) const;
  Complex amplitude(const Word& word) const { return amplitude(index_of(word)); }

  double norm_squared() const;
  SparseState normalized() const;
  SparseState scaled(Complex factor) const;
  // <this|other>
  Complex inner(const SparseState& other) const;

  std::uint64_t index_of(const Word& word) const;
  Word word_of(std::uint64_t index) const;
  std::uint32_t digit(std::uint64_t index, std::size_t position) const;

 private:
  std::uint32_t radix_;
  std::size_t length_;
  std::uint64_t dimension_;
  std::vector<std::uint64_t> place_;  // radix^(length - 1 - position)
  std::vector<Entry> entries_;
};

// |<a|b>|^2 / (<a|a><b|b>).
double fidelity(const SparseState& a, const SparseState& b);

}  // namespace nonstab::oracle
