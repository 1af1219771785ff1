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
#include <string>
#include <vector>

#include "nonstab/gottesman.hpp"

namespace nonstab::fourier {

using galois::FieldVector;
using gottesman::GottesmanSpec;
using weyl::Complex;
using weyl::WeylElement;

// A code given by the set B of character indices u in GF(q)^r of its
// Gottesman subgroup. The code projection is sum_{u in B} P_u, where P_u
// projects onto the joint eigenspace on which s_a acts as w_q^{u . a}.
class FourierDescription {
 public:
  // Members keep the given order; duplicates are rejected.
  FourierDescription(GottesmanSpec spec, std::vector<FieldVector> members);

  const GottesmanSpec& spec() const { return spec_; }
  const std::vector<FieldVector>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const FieldVector& u) const;

 private:
  GottesmanSpec spec_;
  std::vector<FieldVector> members_;
};

struct CodeParams {
  std::size_t n = 0;
  BigInt K = 0;
  std::size_t d = 0;
  std::uint32_t q = 2;
};

// q^n #B / #S.
BigInt code_dimension(const FourierDescription& code);

struct DistanceReport {
  bool pass = true;
  // "stabilizer-character" (a low-weight element of S separates two members)
  // or "forbidden-difference" (u1 - u2 lies in F_d).
  std::string failure;
  std::optional<WeylElement> error;
  std::optional<FieldVector> first;
  std::optional<FieldVector> second;
  std::size_t low_weight_elements = 0;
  std::size_t forbidden_size = 0;
  std::size_t errors_scanned = 0;
};

// Distance d means every error of weight <= d - 1 is detected:
//   (i) each s_a in S with 1 <= wt <= d - 1 has (u1 - u2) . a = 0 on B;
//  (ii) B - B (including 0) misses F_d.
DistanceReport verify_distance(const FourierDescription& code, std::size_t d,
                               const Limits& limits = {});

enum class GreedyOrder { WeightLex, Lexicographic };

struct GreedyResult {
  FourierDescription code;
  std::size_t forbidden_size = 0;
  // ceil(#S / (#F + 1)): each pick removes at most #F + 1 candidates.
  BigInt guaranteed;
  // floor(#S / #F), the count quoted for the greedy bound.
  BigInt floor_bound;
};

// Greedy packing: take the next available u, then discard every v with
// u - v in F_d or v = u. Requires a d-pure spec. `candidates` overrides the
// enumeration order when nonempty.
GreedyResult greedy_construct(const GottesmanSpec& spec, std::size_t d,
                              GreedyOrder order = GreedyOrder::WeightLex,
                              const std::vector<FieldVector>& candidates = {},
                              const Limits& limits = {});

// All of GF(q)^r in the given order.
std::vector<FieldVector> enumerate_indices(std::size_t r, std::uint32_t q, GreedyOrder order);

struct Bounds {
  Rational lower;
  Rational upper;
};

// For a t-error-correcting code: upper = q^n / N(n,q,t), lower = q^n / N(n,q,2t).
Bounds bounds(int n, std::uint32_t q, int t);

// T_{s_a} = (1/#S) sum_{u in B} conj(chi_u(s_a)), indexed by to_index(a).
std::vector<Complex> projection_coefficients(const FourierDescription& code,
                                             const Limits& limits = {});

// The code projection as an explicit q^n x q^n matrix.
weyl::DenseMatrix dense_projection(const FourierDescription& code, std::size_t max_dim = 4096,
                                   const Limits& limits = {});

}  // namespace nonstab::fourier
