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

#include "nonstab/circuits.hpp"

#include <array>
#include <cmath>
#include <set>
#include <stdexcept>

namespace nonstab::circuits {

namespace {

struct KindInfo {
  GateKind kind;
  std::string_view name;
  std::size_t arity;
};

constexpr std::array<KindInfo, 7> kKinds{{
    {GateKind::Inverter, "inverter", 1},
    {GateKind::ControlledU, "c-u", 2},
    {GateKind::ControlledV, "c-v", 2},
    {GateKind::DoublyControlledU, "cc-u", 3},
    {GateKind::DoublyControlledV, "cc-v", 3},
    {GateKind::Fourier, "fourier", 1},
    {GateKind::PrepareZero, "prepare-zero", 1},
}};

const KindInfo& info(GateKind kind) {
  for (const auto& k : kKinds)
    if (k.kind == kind) return k;
  throw std::invalid_argument("unknown gate kind");
}

}  // namespace

std::size_t arity(GateKind kind) { return info(kind).arity; }
std::string_view gate_name(GateKind kind) { return info(kind).name; }

GateKind gate_kind_from_name(std::string_view name) {
  for (const auto& k : kKinds)
    if (k.name == name) return k.kind;
  throw std::invalid_argument("unknown gate kind '" + std::string(name) + "'");
}

Circuit::Circuit(std::uint32_t q, std::size_t registers) : q_(q), registers_(registers) {
  galois::require_prime(q);
}

void Circuit::add(GateKind kind, std::vector<std::size_t> operands) {
  if (operands.size() != arity(kind)) {
    throw std::invalid_argument(std::string(gate_name(kind)) + " takes " + std::to_string(arity(kind)) + " operands");
  }
  std::set<std::size_t> distinct(operands.begin(), operands.end());
  if (distinct.size() != operands.size()) throw std::invalid_argument("gate operands must be distinct");
  for (auto r : operands) {
    if (r >= registers_) throw std::invalid_argument("gate operand out of range");
  }
  gates_.push_back({kind, std::move(operands)});
}

void Circuit::append(const Circuit& other, std::size_t offset) {
  if (other.q_ != q_) throw std::invalid_argument("cannot append a circuit over a different field");
  for (const auto& g : other.gates_) {
    std::vector<std::size_t> ops;
    for (auto r : g.operands) ops.push_back(r + offset);
    add(g.kind, std::move(ops));
  }
}

// ---------------------------------------------------------------- simulate

SparseState simulate(const Circuit& circuit, const SparseState& input) {
  const std::uint32_t q = circuit.q();
  if (input.radix() != q || input.length() != circuit.registers()) {
    throw std::invalid_argument("input state does not match the circuit registers");
  }
  const std::size_t n = circuit.registers();
  std::vector<std::uint64_t> place(n);
  std::uint64_t p = 1;
  for (std::size_t i = n; i-- > 0;) {
    place[i] = p;
    p *= q;
  }
  const double inv_sqrt_q = 1.0 / std::sqrt(static_cast<double>(q));

  SparseState state = input;
  for (const auto& gate : circuit.gates()) {
    const auto& ops = gate.operands;
    std::vector<SparseState::Entry> next;
    next.reserve(state.support_size() * (gate.kind == GateKind::Fourier ? q : 1));
    for (const auto& [index, amp] : state.entries()) {
      auto digit = [&](std::size_t k) { return state.digit(index, ops[k]); };
      auto replace = [&](std::size_t k, std::uint32_t value) {
        return index - digit(k) * place[ops[k]] + static_cast<std::uint64_t>(value % q) * place[ops[k]];
      };
      switch (gate.kind) {
        case GateKind::Inverter:
          next.emplace_back(replace(0, q - digit(0)), amp);
          break;
        case GateKind::ControlledU:
          next.emplace_back(replace(1, digit(0) + digit(1)), amp);
          break;
        case GateKind::ControlledV:
          next.emplace_back(index, amp * weyl::phase_value(digit(0) * digit(1) % q, q));
          break;
        case GateKind::DoublyControlledU:
          next.emplace_back(replace(2, digit(0) * digit(1) % q + digit(2)), amp);
          break;
        case GateKind::DoublyControlledV:
          next.emplace_back(index, amp * weyl::phase_value(digit(0) * digit(1) % q * digit(2) % q, q));
          break;
        case GateKind::Fourier:
          for (std::uint32_t x = 0; x < q; ++x) {
            next.emplace_back(replace(0, x), amp * weyl::phase_value(digit(0) * x % q, q) * inv_sqrt_q);
          }
          break;
        case GateKind::PrepareZero:
          if (digit(0) != 0) {
            throw std::logic_error("prepare-zero: register " + std::to_string(ops[0]) + " is not |0>");
          }
          next.emplace_back(index, amp);
          break;
      }
    }
    state = SparseState::from_entries(q, n, std::move(next));
  }
  return state;
}

Circuit uniform_over_C(std::size_t n, std::uint32_t q) {
  if (n == 0) throw std::invalid_argument("uniform_over_C needs n >= 1");
  Circuit c(q, n);
  for (std::size_t i = 0; i + 1 < n; ++i) c.add(GateKind::Fourier, {i});
  for (std::size_t i = 0; i + 1 < n; ++i) c.add(GateKind::ControlledU, {i, n - 1});
  if (n > 1) c.add(GateKind::Inverter, {n - 1});
  return c;
}

Circuit doubly_controlled_v_via_ancilla(std::uint32_t q) {
  Circuit c(q, 4);
  c.add(GateKind::DoublyControlledU, {0, 1, 3});
  c.add(GateKind::ControlledV, {3, 2});
  c.add(GateKind::Inverter, {3});
  c.add(GateKind::DoublyControlledU, {0, 1, 3});
  c.add(GateKind::Inverter, {3});
  return c;
}

// ---------------------------------------------------------------- encoder

Encoder build_encoder(const families::SumZeroForm& form) {
  // rejects malformed D
  (void)families::sum_zero_spec(form);
  const std::size_t n = form.n();
  const std::uint32_t q = form.q;
  EncoderLayout layout{n};
  Circuit circuit(q, layout.registers());
  const auto c = layout.c(), d = layout.d(), x = layout.x(), anc = layout.ancilla();

  for (std::size_t i = 0; i < n; ++i) circuit.add(GateKind::PrepareZero, {x + i});
  for (std::size_t i = 0; i < n; ++i) circuit.add(GateKind::PrepareZero, {anc + i});
  circuit.append(uniform_over_C(n, q), x);
  // conj(w(c . x))
  for (std::size_t i = 0; i < n; ++i) {
    circuit.add(GateKind::Inverter, {c + i});
    circuit.add(GateKind::ControlledV, {c + i, x + i});
    circuit.add(GateKind::Inverter, {c + i});
  }
  // x -> z = x + d
  for (std::size_t i = 0; i < n; ++i) circuit.add(GateKind::ControlledU, {d + i, x + i});
  auto matvec = [&](bool inverse) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::uint32_t reps = form.D(i, j);
        if (inverse) reps = (q - reps) % q;
        for (std::uint32_t k = 0; k < reps; ++k) circuit.add(GateKind::ControlledU, {x + j, anc + i});
      }
  };
  matvec(false);
  // w(z^T D z)
  for (std::size_t i = 0; i < n; ++i) circuit.add(GateKind::ControlledV, {x + i, anc + i});
  matvec(true);
  return Encoder{form, layout, std::move(circuit)};
}

SparseState encoder_input(const Encoder& encoder, const families::Message& message) {
  const auto& L = encoder.layout;
  if (message.c.size() != L.n || message.d.size() != L.n) throw std::invalid_argument("message length mismatch");
  oracle::Word word(L.registers(), 0);
  for (std::size_t i = 0; i < L.n; ++i) {
    word[L.c() + i] = message.c[i];
    word[L.d() + i] = message.d[i];
  }
  return SparseState::basis(encoder.form.q, word);
}

SparseState data_register(const Encoder& encoder, const SparseState& output, const families::Message& message) {
  const auto& L = encoder.layout;
  std::vector<SparseState::Entry> entries;
  SparseState shape(encoder.form.q, L.n);
  for (const auto& [index, amp] : output.entries()) {
    auto word = output.word_of(index);
    for (std::size_t i = 0; i < L.n; ++i) {
      if (word[L.c() + i] != message.c[i] || word[L.d() + i] != message.d[i]) {
        throw std::logic_error("encoder changed the message registers");
      }
      if (word[L.ancilla() + i] != 0) throw std::logic_error("encoder left an ancilla digit nonzero");
    }
    oracle::Word data(word.begin() + static_cast<std::ptrdiff_t>(L.x()),
                      word.begin() + static_cast<std::ptrdiff_t>(L.x() + L.n));
    entries.emplace_back(shape.index_of(data), amp);
  }
  return SparseState::from_entries(encoder.form.q, L.n, std::move(entries));
}

}  // namespace nonstab::circuits
