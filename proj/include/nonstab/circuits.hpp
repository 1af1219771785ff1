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
#include <string>
#include <string_view>
#include <vector>

#include "nonstab/families.hpp"
#include "nonstab/sparse_state.hpp"

// Qudit circuits over GF(q) with w = e^{2 pi i / q}.
namespace nonstab::circuits {

using oracle::SparseState;

enum class GateKind {
  Inverter,             // |a> -> |-a>
  ControlledU,          // |a, b> -> |a, a + b>
  ControlledV,          // |a, b> -> w^{ab} |a, b>
  DoublyControlledU,    // |a, b, c> -> |a, b, c + ab>
  DoublyControlledV,    // |a, b, c> -> w^{abc} |a, b, c>
  Fourier,              // |a> -> q^{-1/2} sum_x w^{ax} |x>
  PrepareZero,          // asserts the register holds |0>
};

std::size_t arity(GateKind kind);
std::string_view gate_name(GateKind kind);
GateKind gate_kind_from_name(std::string_view name);

struct Gate {
  GateKind kind;
  std::vector<std::size_t> operands;

  bool operator==(const Gate& other) const = default;
};

class Circuit {
 public:
  Circuit(std::uint32_t q, std::size_t registers);

  std::uint32_t q() const { return q_; }
  std::size_t registers() const { return registers_; }
  const std::vector<Gate>& gates() const { return gates_; }

  // Checks arity, range and distinct operands.
  void add(GateKind kind, std::vector<std::size_t> operands);
  // Appends `other` with its register i mapped to offset + i.
  void append(const Circuit& other, std::size_t offset);

 private:
  std::uint32_t q_;
  std::size_t registers_;
  std::vector<Gate> gates_;
};

SparseState simulate(const Circuit& circuit, const SparseState& input);

// |0^n> -> q^{-(n-1)/2} sum_{x in C} |x>, C = { x : sum x_i = 0 }.
Circuit uniform_over_C(std::size_t n, std::uint32_t q);

// w^{abc} on registers (a, b, c) from CC-U, C-V and inverters, using
// register 3 as a clean ancilla.
Circuit doubly_controlled_v_via_ancilla(std::uint32_t q);

// Register layout [c | d | x | ancilla], each block n digits wide.
struct EncoderLayout {
  std::size_t n = 0;
  std::size_t c() const { return 0; }
  std::size_t d() const { return n; }
  std::size_t x() const { return 2 * n; }
  std::size_t ancilla() const { return 3 * n; }
  std::size_t registers() const { return 4 * n; }
};

struct Encoder {
  families::SumZeroForm form;
  EncoderLayout layout;
  Circuit circuit;
};

// |c, d, 0, 0> -> |c, d> |phi_{c,d}> |0>.
Encoder build_encoder(const families::SumZeroForm& form);

SparseState encoder_input(const Encoder& encoder, const families::Message& message);

// The data block of an encoder output. Throws if the message registers moved
// or an ancilla digit is nonzero anywhere in the support.
SparseState data_register(const Encoder& encoder, const SparseState& output, const families::Message& message);

}  // namespace nonstab::circuits
