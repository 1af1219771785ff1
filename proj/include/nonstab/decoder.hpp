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
#include <stdexcept>
#include <vector>

#include "nonstab/fourier_code.hpp"
#include "nonstab/sparse_state.hpp"

// Syndrome decoding for codes whose basis states are joint eigenvectors of
// the Gottesman subgroup. Eigenvalues are read off the simulated state
// exactly instead of by phase estimation.
namespace nonstab::decoder {

using fourier::FourierDescription;
using galois::FieldVector;
using oracle::SparseState;
using weyl::Complex;
using weyl::WeylElement;

// Eigenvalue exponents (mod P) of the generators s_{e_1}, ..., s_{e_r}.
struct Syndrome {
  std::vector<std::uint32_t> exponents;
  std::uint32_t denominator = 1;

  bool operator==(const Syndrome& other) const = default;
};

class NotAnEigenvector : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Syndrome measure_syndrome(const SparseState& state, const gottesman::GottesmanSpec& spec,
                          double tolerance = 1e-9);

struct Correction {
  WeylElement error;
  FieldVector u;
  std::size_t candidates_checked = 0;
};

// For g (identity first, then weight-lex up to weight t) solves
// alpha_i = gamma(s_i, g) + chi_u(s_i) for u and returns the first u in B.
Correction search_error(const Syndrome& syndrome, const FourierDescription& code, std::size_t t,
                        const Limits& limits = {});

struct DecodeResult {
  SparseState state;
  Correction correction;
};

// Applies the inverse of the error found by search_error.
DecodeResult decode(const SparseState& state, const FourierDescription& code, std::size_t t,
                    const Limits& limits = {});

}  // namespace nonstab::decoder
