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
#include <functional>
#include <vector>

#include "nonstab/limits.hpp"

namespace nonstab::weyl {

using Complex = std::complex<double>;

// A word of length n; each letter is an element of the alphabet group encoded
// as a mixed-radix index in [0, #A).
using Word = std::vector<std::uint32_t>;

// A = Z_{n_1} x ... x Z_{n_k}. Phases of the error group are tracked as
// integer exponents of e^{2 pi i / P} with P = 2 * lcm(n_j).
class AlphabetGroup {
 public:
  explicit AlphabetGroup(std::vector<std::uint32_t> orders);
  static AlphabetGroup prime_field(std::uint32_t p);

  std::uint32_t size() const { return size_; }
  std::uint32_t exponent() const { return exponent_; }
  std::uint32_t phase_denominator() const { return 2 * exponent_; }
  const std::vector<std::uint32_t>& orders() const { return orders_; }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const { return add_[x * size_ + y]; }
  std::uint32_t negate(std::uint32_t x) const { return neg_[x]; }
  // Exponent e with <x, y> = e^{2 pi i e / P}.
  std::uint32_t pairing(std::uint32_t x, std::uint32_t y) const { return pair_[x * size_ + y]; }

  std::vector<std::uint32_t> components(std::uint32_t letter) const;
  std::uint32_t letter(const std::vector<std::uint32_t>& components) const;

  bool operator==(const AlphabetGroup& other) const { return orders_ == other.orders_; }

 private:
  std::vector<std::uint32_t> orders_;
  std::uint32_t size_ = 1;
  std::uint32_t exponent_ = 1;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> pair_;
};

// omega^phase U_a V_b with omega = e^{2 pi i / P}.
struct WeylElement {
  std::uint32_t phase = 0;
  Word a;
  Word b;

  bool operator==(const WeylElement& other) const = default;
  auto operator<=>(const WeylElement& other) const = default;
};

Complex phase_value(std::uint32_t exponent, std::uint32_t denominator);

// Row-major dense complex matrix, used only by the verification oracles.
struct DenseMatrix {
  std::size_t dim = 0;
  std::vector<Complex> data;

  explicit DenseMatrix(std::size_t d = 0) : dim(d), data(d * d) {}
  Complex& operator()(std::size_t r, std::size_t c) { return data[r * dim + c]; }
  Complex operator()(std::size_t r, std::size_t c) const { return data[r * dim + c]; }
  DenseMatrix operator*(const DenseMatrix& other) const;
  DenseMatrix adjoint() const;
  Complex trace() const;
  static DenseMatrix identity(std::size_t d);
};

// The error group on n letters over a fixed alphabet.
class ErrorGroup {
 public:
  ErrorGroup(AlphabetGroup alphabet, std::size_t n);

  const AlphabetGroup& alphabet() const { return alphabet_; }
  std::size_t length() const { return n_; }
  std::uint32_t phase_denominator() const { return alphabet_.phase_denominator(); }

  WeylElement identity() const;
  WeylElement scalar(std::uint32_t phase) const;
  // Reduces the phase and checks the word lengths and letters.
  WeylElement make(std::int64_t phase, Word a, Word b) const;

  std::uint32_t bicharacter(const Word& a, const Word& b) const;
  WeylElement compose(const WeylElement& g, const WeylElement& h) const;
  WeylElement inverse(const WeylElement& g) const;
  // Exponent of gamma with g h g^-1 h^-1 = gamma I.
  std::uint32_t gamma(const WeylElement& g, const WeylElement& h) const;
  std::size_t weight(const WeylElement& g) const;
  bool same_up_to_phase(const WeylElement& g, const WeylElement& h) const {
    return g.a == h.a && g.b == h.b;
  }

  // Explicit (#A)^n x (#A)^n matrix; basis index of a word is big-endian in
  // the letters.
  DenseMatrix dense_matrix(const WeylElement& g, std::size_t max_dim = 4096) const;

  // Visits every (a, b) with 1 <= wt(a, b) <= max_weight, phase 0, ordered by
  // weight, then support positions, then letter values. The visitor returns
  // false to stop early. Throws CapExceeded if the sphere is too large.
  void for_each_bounded(std::size_t max_weight,
                        const std::function<bool(const WeylElement&)>& visit,
                        const BigInt& cap = Limits{}.max_errors) const;
  std::vector<WeylElement> enumerate_bounded(std::size_t max_weight,
                                             const BigInt& cap = Limits{}.max_errors) const;

 private:
  void check(const WeylElement& g) const;

  AlphabetGroup alphabet_;
  std::size_t n_;
};

}  // namespace nonstab::weyl
