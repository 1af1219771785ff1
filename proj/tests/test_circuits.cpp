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

#include <gtest/gtest.h>

#include <random>

#include "nonstab/circuits.hpp"
#include "nonstab/oracle.hpp"
#include "oracles.hpp"

using namespace nonstab;
using circuits::Circuit;
using circuits::GateKind;
using galois::FieldVector;
using oracle::SparseState;
using weyl::Complex;

namespace {

Complex w(std::int64_t k, std::uint32_t q) { return oracles::root(k, q); }

// Single-gate circuit applied to a basis word.
SparseState run_gate(GateKind kind, std::uint32_t q, const weyl::Word& input) {
  Circuit c(q, input.size());
  std::vector<std::size_t> ops(input.size());
  for (std::size_t i = 0; i < ops.size(); ++i) ops[i] = i;
  c.add(kind, ops);
  return circuits::simulate(c, SparseState::basis(q, input));
}

SparseState random_state(std::uint32_t q, std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::vector<SparseState::Entry> entries;
  std::uint64_t dim = 1;
  for (std::size_t i = 0; i < n; ++i) dim *= q;
  for (std::uint64_t i = 0; i < dim; ++i) entries.emplace_back(i, Complex{gauss(rng), gauss(rng)});
  return SparseState::from_entries(q, n, entries).normalized();
}

}  // namespace

TEST(Gates, BinaryControlledUIsCnot) {
  for (std::uint32_t a : {0u, 1u})
    for (std::uint32_t b : {0u, 1u}) {
      auto out = run_gate(GateKind::ControlledU, 2, {a, b});
      EXPECT_LT(std::abs(out.amplitude(weyl::Word{a, a ^ b}) - 1.0), 1e-15);
    }
}

TEST(Gates, BinaryFourierIsHadamard) {
  auto zero = run_gate(GateKind::Fourier, 2, {0});
  EXPECT_NEAR(zero.amplitude(0).real(), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(zero.amplitude(1).real(), std::sqrt(0.5), 1e-15);
  auto one = run_gate(GateKind::Fourier, 2, {1});
  EXPECT_NEAR(one.amplitude(1).real(), -std::sqrt(0.5), 1e-15);
}

TEST(Gates, TruthTablesOverGF3) {
  const std::uint32_t q = 3;
  for (const auto& x : oracles::all_words(3, q)) {
    const auto a = x[0], b = x[1], c = x[2];
    EXPECT_LT(std::abs(run_gate(GateKind::Inverter, q, {a}).amplitude(weyl::Word{(q - a) % q}) - 1.0), 1e-15);
    EXPECT_LT(std::abs(run_gate(GateKind::ControlledU, q, {a, b}).amplitude(weyl::Word{a, (a + b) % q}) - 1.0),
              1e-15);
    EXPECT_LT(std::abs(run_gate(GateKind::ControlledV, q, {a, b}).amplitude(weyl::Word{a, b}) - w(a * b, q)), 1e-12);
    EXPECT_LT(
        std::abs(run_gate(GateKind::DoublyControlledU, q, {a, b, c}).amplitude(weyl::Word{a, b, (c + a * b) % q}) -
                 1.0),
        1e-15);
    EXPECT_LT(std::abs(run_gate(GateKind::DoublyControlledV, q, {a, b, c}).amplitude(x) - w(a * b * c, q)), 1e-12);
    auto f = run_gate(GateKind::Fourier, q, {a});
    for (std::uint32_t y = 0; y < q; ++y) {
      EXPECT_LT(std::abs(f.amplitude(weyl::Word{y}) - w(a * y, q) / std::sqrt(3.0)), 1e-12);
    }
  }
}

TEST(Gates, DoublyControlledVFromAncilla) {
  for (std::uint32_t q : {2u, 3u, 5u}) {
    auto circuit = circuits::doubly_controlled_v_via_ancilla(q);
    ASSERT_EQ(circuit.registers(), 4u);
    for (const auto& x : oracles::all_words(3, q)) {
      weyl::Word input{x[0], x[1], x[2], 0};
      auto out = circuits::simulate(circuit, SparseState::basis(q, input));
      ASSERT_EQ(out.support_size(), 1u);
      EXPECT_LT(std::abs(out.amplitude(input) - w(x[0] * x[1] * x[2], q)), 1e-12) << q;
    }
  }
}

TEST(Gates, NamesRoundTrip) {
  for (auto kind : {GateKind::Inverter, GateKind::ControlledU, GateKind::ControlledV, GateKind::DoublyControlledU,
                    GateKind::DoublyControlledV, GateKind::Fourier, GateKind::PrepareZero}) {
    EXPECT_EQ(circuits::gate_kind_from_name(circuits::gate_name(kind)), kind);
  }
  EXPECT_EQ(circuits::arity(GateKind::DoublyControlledV), 3u);
  EXPECT_THROW(circuits::gate_kind_from_name("toffoli"), std::invalid_argument);
}

TEST(Circuit, MalformedGatesRejected) {
  Circuit c(3, 3);
  EXPECT_THROW(c.add(GateKind::ControlledU, {0}), std::invalid_argument);
  EXPECT_THROW(c.add(GateKind::ControlledU, {0, 3}), std::invalid_argument);
  EXPECT_THROW(c.add(GateKind::DoublyControlledU, {0, 1, 1}), std::invalid_argument);
  EXPECT_THROW(circuits::simulate(c, SparseState::basis(3, {0, 0})), std::invalid_argument);
  EXPECT_THROW(circuits::simulate(c, SparseState::basis(2, {0, 0, 0})), std::invalid_argument);
}

TEST(Circuit, AppendOffsetsRegisters) {
  Circuit inner(2, 2);
  inner.add(GateKind::ControlledU, {0, 1});
  Circuit outer(2, 4);
  outer.append(inner, 2);
  ASSERT_EQ(outer.gates().size(), 1u);
  EXPECT_EQ(outer.gates()[0].operands, (std::vector<std::size_t>{2, 3}));
  EXPECT_THROW(outer.append(inner, 3), std::invalid_argument);
}

TEST(Circuit, PrepareZeroRejectsOccupiedRegister) {
  Circuit c(3, 1);
  c.add(GateKind::PrepareZero, {0});
  EXPECT_NO_THROW(circuits::simulate(c, SparseState::basis(3, {0})));
  EXPECT_THROW(circuits::simulate(c, SparseState::basis(3, {2})), std::logic_error);
}

TEST(UniformOverC, TwoQubitBell) {
  auto out = circuits::simulate(circuits::uniform_over_C(2, 2), SparseState::basis(2, {0, 0}));
  EXPECT_EQ(out.support_size(), 2u);
  EXPECT_NEAR(out.amplitude(weyl::Word{0, 0}).real(), std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(out.amplitude(weyl::Word{1, 1}).real(), std::sqrt(0.5), 1e-12);
}

TEST(UniformOverC, SingleRegisterIsZero) {
  auto out = circuits::simulate(circuits::uniform_over_C(1, 5), SparseState::basis(5, {0}));
  EXPECT_EQ(out.support_size(), 1u);
  EXPECT_NEAR(std::abs(out.amplitude(0)), 1.0, 1e-12);
}

TEST(UniformOverC, EqualAmplitudesOnSumZeroWords) {
  for (auto [n, q] : std::vector<std::pair<std::size_t, std::uint32_t>>{{3, 3}, {4, 3}, {3, 5}, {5, 2}}) {
    auto out = circuits::simulate(circuits::uniform_over_C(n, q), SparseState::basis(q, weyl::Word(n, 0)));
    std::uint64_t expected = 1;
    for (std::size_t i = 1; i < n; ++i) expected *= q;
    ASSERT_EQ(out.support_size(), expected);
    for (const auto& [index, amp] : out.entries()) {
      std::uint32_t sum = 0;
      for (auto v : out.word_of(index)) sum += v;
      EXPECT_EQ(sum % q, 0u);
      EXPECT_LT(std::abs(amp - 1.0 / std::sqrt(static_cast<double>(expected))), 1e-12);
    }
  }
}

TEST(Circuit, SimulationPreservesNorm) {
  std::mt19937_64 rng(17);
  for (std::uint32_t q : {2u, 3u}) {
    Circuit c(q, 4);
    for (int k = 0; k < 30; ++k) {
      auto kind = static_cast<GateKind>(rng() % 6);
      std::vector<std::size_t> ops{0, 1, 2, 3};
      std::shuffle(ops.begin(), ops.end(), rng);
      ops.resize(circuits::arity(kind));
      c.add(kind, ops);
    }
    for (int trial = 0; trial < 5; ++trial) {
      auto out = circuits::simulate(c, random_state(q, 4, rng));
      EXPECT_NEAR(out.norm_squared(), 1.0, 1e-12);
    }
  }
}

TEST(Encoder, FiveQubitMessagesMatchClosedForm) {
  auto form = families::cyclic_sum_zero_form(5, 2);
  auto code = families::relabel(families::distance2_family(5, 2), families::sum_zero_spec(form));
  auto encoder = circuits::build_encoder(form);
  std::vector<SparseState> outputs;
  for (const auto& u : code.members()) {
    auto message = families::index_to_message(form, u);
    auto full = circuits::simulate(encoder.circuit, circuits::encoder_input(encoder, message));
    auto data = circuits::data_register(encoder, full, message);
    EXPECT_GT(oracle::fidelity(data, oracle::closed_form_codeword(form, message)), 1 - 1e-10);
    EXPECT_GT(oracle::fidelity(data, oracle::codeword(code, u)), 1 - 1e-10);
    outputs.push_back(data.normalized());
  }
  ASSERT_EQ(outputs.size(), 6u);
  EXPECT_TRUE(oracle::orthonormality_check(outputs).pass);
}

TEST(Encoder, EveryMessageOverGF3) {
  auto form = families::cyclic_sum_zero_form(3, 3);
  auto encoder = circuits::build_encoder(form);
  for (std::uint64_t i = 0; i < 27; ++i) {
    auto message = families::index_to_message(form, galois::from_index(i, 3, 3));
    auto full = circuits::simulate(encoder.circuit, circuits::encoder_input(encoder, message));
    auto data = circuits::data_register(encoder, full, message);
    EXPECT_GT(oracle::fidelity(data, oracle::closed_form_codeword(form, message)), 1 - 1e-10) << i;
  }
}

TEST(Encoder, ArbitraryUpperTriangularForm) {
  std::mt19937_64 rng(8);
  const std::size_t n = 4;
  const std::uint32_t q = 3;
  galois::FieldMatrix D(n, n, q);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) D.set(i, j, static_cast<std::int64_t>(rng() % q));
  families::SumZeroForm form{q, D};
  auto encoder = circuits::build_encoder(form);
  for (int trial = 0; trial < 10; ++trial) {
    auto message = families::index_to_message(form, galois::from_index(rng() % 81, n, q));
    auto full = circuits::simulate(encoder.circuit, circuits::encoder_input(encoder, message));
    auto data = circuits::data_register(encoder, full, message);
    EXPECT_GT(oracle::fidelity(data, oracle::closed_form_codeword(form, message)), 1 - 1e-10);
  }
}

TEST(Encoder, LayoutBlocks) {
  auto encoder = circuits::build_encoder(families::cyclic_sum_zero_form(5, 2));
  EXPECT_EQ(encoder.layout.registers(), 20u);
  EXPECT_EQ(encoder.circuit.registers(), 20u);
  EXPECT_EQ(encoder.layout.x(), 10u);
  EXPECT_EQ(encoder.layout.ancilla(), 15u);
}

TEST(Encoder, DirtyAncillaDetected) {
  auto form = families::cyclic_sum_zero_form(3, 2);
  auto encoder = circuits::build_encoder(form);
  families::Message message{FieldVector(3, 2), FieldVector(3, 2)};
  auto full = circuits::simulate(encoder.circuit, circuits::encoder_input(encoder, message));
  // flip the last ancilla digit on every supported word
  std::vector<SparseState::Entry> moved;
  for (const auto& [index, amp] : full.entries()) moved.emplace_back(index ^ 1u, amp);
  auto dirty = SparseState::from_entries(2, full.length(), moved);
  EXPECT_THROW(circuits::data_register(encoder, dirty, message), std::logic_error);
}
