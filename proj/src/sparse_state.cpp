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

#include "nonstab/sparse_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nonstab::oracle {

SparseState::SparseState(std::uint32_t radix, std::size_t length)
    : radix_(radix), length_(length), dimension_(1), place_(length) {
  if (radix < 2) throw std::invalid_argument("state radix must be at least 2");
  for (std::size_t i = length; i-- > 0;) {
    place_[i] = dimension_;
    if (dimension_ > (std::uint64_t{1} << 62) / radix) throw std::invalid_argument("state space too large to index");
    dimension_ *= radix;
  }
}

SparseState SparseState::basis(std::uint32_t radix, const Word& word) {
  SparseState s(radix, word.size());
  s.entries_.emplace_back(s.index_of(word), Complex{1.0, 0.0});
  return s;
}

SparseState SparseState::from_entries(std::uint32_t radix, std::size_t length, std::vector<Entry> entries) {
  SparseState s(radix, length);
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) { return x.first < y.first; });
  for (auto& [index, amp] : entries) {
    if (index >= s.dimension_) throw std::invalid_argument("state index out of range");
    if (!s.entries_.empty() && s.entries_.back().first == index) {
      s.entries_.back().second += amp;
    } else {
      s.entries_.emplace_back(index, amp);
    }
  }
  std::erase_if(s.entries_, [](const Entry& e) { return std::abs(e.second) < kPrune; });
  return s;
}

Complex SparseState::amplitude(std::uint64_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::uint64_t i) { return e.first < i; });
  if (it == entries_.end() || it->first != index) return {};
  return it->second;
}

double SparseState::norm_squared() const {
  double total = 0.0;
  for (const auto& e : entries_) total += std::norm(e.second);
  return total;
}

SparseState SparseState::normalized() const {
  const double norm = std::sqrt(norm_squared());
  if (norm == 0.0) throw std::domain_error("cannot normalize the zero state");
  return scaled(1.0 / norm);
}

SparseState SparseState::scaled(Complex factor) const {
  SparseState out(radix_, length_);
  out.entries_.reserve(entries_.size());
  for (const auto& [index, amp] : entries_) {
    Complex v = amp * factor;
    if (std::abs(v) >= kPrune) out.entries_.emplace_back(index, v);
  }
  return out;
}

Complex SparseState::inner(const SparseState& other) const {
  if (radix_ != other.radix_ || length_ != other.length_) throw std::invalid_argument("inner product of mismatched states");
  Complex total{};
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      total += std::conj(a->second) * b->second;
      ++a;
      ++b;
    }
  }
  return total;
}

std::uint64_t SparseState::index_of(const Word& word) const {
  if (word.size() != length_) throw std::invalid_argument("word length mismatch");
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < length_; ++i) {
    if (word[i] >= radix_) throw std::invalid_argument("digit outside radix");
    index += word[i] * place_[i];
  }
  return index;
}

Word SparseState::word_of(std::uint64_t index) const {
  Word w(length_);
  for (std::size_t i = length_; i-- > 0;) {
    w[i] = static_cast<std::uint32_t>(index % radix_);
    index /= radix_;
  }
  return w;
}

std::uint32_t SparseState::digit(std::uint64_t index, std::size_t position) const {
  return static_cast<std::uint32_t>(index / place_[position] % radix_);
}

double fidelity(const SparseState& a, const SparseState& b) {
  const double na = a.norm_squared();
  const double nb = b.norm_squared();
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::norm(a.inner(b)) / (na * nb);
}

}  // namespace nonstab::oracle
