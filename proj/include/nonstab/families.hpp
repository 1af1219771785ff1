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

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nonstab/fourier_code.hpp"

// Explicit code constructions.
//
// Index conventions: positions are 1-based in documentation and set families
// and 0-based in vectors. For odd n = 2m + 1, "e_0" is the unit vector at
// position n and position arithmetic is mod n. The cyclic-shift matrix S has
// S e_j = e_{j+m} + e_{j+m+1}, i.e. S_ij = 1 iff i - j = +-m (mod n).
namespace nonstab::families {

using fourier::FourierDescription;
using galois::FieldMatrix;
using galois::FieldVector;
using gottesman::GottesmanSpec;

FieldMatrix cyclic_shift_matrix(std::size_t n, std::uint32_t q);

// Column j < n is e_j - e_n, column n is zero.
FieldMatrix sum_zero_embedding(std::size_t n, std::uint32_t q);

// L as above, M = S L + J.
GottesmanSpec cyclic_spec(std::size_t n, std::uint32_t q);

// B = {0} u {a e_0} u {e_0 + a (1 - e_0 - e_j) : j < n - 1}, a != 0, with e_0 the
// last coordinate. Distance 2 needs n >= 5.
FourierDescription distance2_family(std::size_t n, std::uint32_t q);

// The binary cyclic spec behind the generalized Laflamme code.
GottesmanSpec laflamme_spec(std::size_t n);

class SetFamily {
 public:
  // Members are sorted; two equal members are rejected.
  SetFamily(std::size_t universe, std::vector<std::vector<std::size_t>> members);

  std::size_t universe() const { return universe_; }
  const std::vector<std::vector<std::size_t>>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  // Sizes of pairwise symmetric differences over distinct members.
  std::set<std::size_t> symmetric_difference_sizes() const;

 private:
  std::size_t universe_;
  std::vector<std::vector<std::size_t>> members_;
};

std::size_t symmetric_difference_size(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);

// The eight subsets of {1..15} behind the ((15,8,3)) code.
SetFamily fifteen_qubit_family();
FourierDescription code_15_8_3();

// Point sets of all r-dimensional subspaces of GF(q)^m. Vector v sits at
// position 1 + (big-endian base-q value of v). Subspaces are listed by their
// reduced row echelon bases: pivot sets in lexicographic order, then the free
// entries in lexicographic order.
SetFamily subspace_family(std::size_t m, std::size_t r, std::uint32_t q, const Limits& limits = {});

// Weights of forbidden_set(laflamme_spec(n), d).
std::set<std::size_t> forbidden_weights(std::size_t n, std::size_t d, const Limits& limits = {});

class FamilyRejected : public std::invalid_argument {
 public:
  FamilyRejected(const std::string& what, std::size_t first, std::size_t second, std::size_t size)
      : std::invalid_argument(what), first_(first), second_(second), size_(size) {}
  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }
  std::size_t size() const { return size_; }

 private:
  std::size_t first_, second_, size_;
};

// B = { sum_{i in S} e_i : S in family } over laflamme_spec(n). Throws
// FamilyRejected if a pairwise symmetric difference has a forbidden weight.
FourierDescription family_to_B(const SetFamily& family, std::size_t n, const Limits& limits = {});

// Removes a 1-based coordinate and renumbers the ones above it. Throws
// std::invalid_argument if two members collapse.
SetFamily puncture(const SetFamily& family, std::size_t coordinate);

// Subgroups { w_q(a^T D a) U_a V_{(D + D^T) a + b} : a in C, b in C^perp }
// with C = { a : sum a_i = 0 } and D upper triangular.
struct SumZeroForm {
  std::uint32_t q;
  FieldMatrix D;

  std::size_t n() const { return D.rows(); }
};

// Index coordinates are (a', beta) with a = (a', -sum a') and b = beta * 1.
GottesmanSpec sum_zero_spec(const SumZeroForm& form);

struct Message {
  FieldVector c;
  FieldVector d;
};

// Character index u <-> message (c, d) with chi_u(s_{a,b}) = w(a.c + b.d).
FieldVector message_to_index(const SumZeroForm& form, const Message& message);
Message index_to_message(const SumZeroForm& form, const FieldVector& u);

// The strict upper triangle of the cyclic-shift matrix, in sum-zero form.
SumZeroForm cyclic_sum_zero_form(std::size_t n, std::uint32_t q);

// Re-expresses B over another spec describing the same subgroup up to
// phases. Throws if the subgroups differ.
FourierDescription relabel(const FourierDescription& code, const GottesmanSpec& target);

struct AlphaGoodReport {
  bool pass = true;
  int failed_condition = 0;  // 1..4: column/row lower bound, column/row upper bound
  std::vector<std::size_t> witness;
  std::size_t weight = 0;
};

// Exhaustive check of the four alpha-good conditions over floor(alpha n)-subsets.
AlphaGoodReport alpha_good(const FieldMatrix& R, const Rational& alpha, const Limits& limits = {});

// Sum-zero form spec on 2n qubits from the strict upper triangle of
// [[0, R], [R^T, 0]].
GottesmanSpec alpha_good_spec(const FieldMatrix& R);
SumZeroForm alpha_good_form(const FieldMatrix& R);

// Samples uniformly random binary R until one is alpha-good.
std::optional<FieldMatrix> search_alpha_good(std::size_t n, const Rational& alpha, std::uint64_t seed,
                                             std::size_t trials, const Limits& limits = {});

}  // namespace nonstab::families
