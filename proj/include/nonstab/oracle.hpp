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
#include <vector>

#include "nonstab/families.hpp"
#include "nonstab/fourier_code.hpp"
#include "nonstab/sparse_state.hpp"

// Verification by explicit states, independent of the forbidden-set algebra.
namespace nonstab::oracle {

using fourier::FourierDescription;
using galois::FieldVector;
using weyl::ErrorGroup;
using weyl::WeylElement;

// Where a Weyl element sends a basis index, with the phase exponent it picks up.
class IndexAction {
 public:
  IndexAction(const ErrorGroup& group, const WeylElement& g);

  std::uint64_t target(std::uint64_t index, std::uint32_t& exponent) const;

 private:
  const ErrorGroup* group_;
  std::uint32_t base_phase_;
  std::uint32_t P_;
  std::uint32_t radix_;
  std::size_t length_;
  bool binary_ = false;
  std::uint64_t a_mask_ = 0;
  std::uint64_t b_mask_ = 0;
  Word a_;
  Word b_;
};

SparseState apply(const ErrorGroup& group, const WeylElement& g, const SparseState& state);

// Max |(g - w^exponent) state| over the support.
double eigen_residual(const ErrorGroup& group, const WeylElement& g, std::uint32_t exponent,
                      const SparseState& state);

// Normalized vector with s_a phi_u = chi_u(s_a) phi_u, obtained by projecting
// basis words from a complement of image(L). Maximal specs only.
SparseState codeword(const FourierDescription& code, const FieldVector& u, const Limits& limits = {});
std::vector<SparseState> codewords(const FourierDescription& code, const Limits& limits = {});

// Orthonormal basis of the code: codewords for maximal specs, otherwise
// Gram-Schmidt on the columns of the dense projection.
std::vector<SparseState> code_basis(const FourierDescription& code, const Limits& limits = {});

// sqrt(1/#C) sum_{x in C} w((x+d)^T D (x+d)) conj(w(x^T c)) |x + d>.
SparseState closed_form_codeword(const families::SumZeroForm& form, const families::Message& message);

struct KLReport {
  bool pass = true;
  std::optional<WeylElement> error;
  std::size_t first = 0;
  std::size_t second = 0;
  Complex value{};
  std::size_t errors_checked = 0;
};

// For every error of weight 1..d-1 and all basis pairs, checks
// <psi_u|g|psi_v> = c(g) delta_uv within tolerance.
KLReport kl_check(const std::vector<SparseState>& basis, const ErrorGroup& group, std::size_t d,
                  const Limits& limits = {}, double tolerance = 1e-9);
KLReport kl_check(const FourierDescription& code, std::size_t d, const Limits& limits = {},
                  double tolerance = 1e-9);

struct OrthonormalityReport {
  bool pass = true;
  std::size_t first = 0;
  std::size_t second = 0;
  Complex value{};
};

OrthonormalityReport orthonormality_check(const std::vector<SparseState>& states, double tolerance = 1e-10);

}  // namespace nonstab::oracle
