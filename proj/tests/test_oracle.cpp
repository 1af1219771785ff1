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

#include "nonstab/families.hpp"
#include "nonstab/oracle.hpp"
#include "oracles.hpp"

using namespace nonstab;
using galois::FieldMatrix;
using galois::FieldVector;
using oracle::SparseState;

namespace {

gottesman::GottesmanSpec single_z(std::size_t n) {
  FieldMatrix L(n, 1, 2), M(n, 1, 2);
  M.set(0, 0, 1);
  return gottesman::GottesmanSpec::with_synthesized_phases(2, L, M);
}

}  // namespace

TEST(Apply, MatchesDenseMonomial) {
  std::mt19937_64 rng(21);
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const std::size_t n = 3;
    weyl::ErrorGroup group(weyl::AlphabetGroup::prime_field(q), n);
    const auto words = oracles::all_words(n, q);
    for (int trial = 0; trial < 10; ++trial) {
      weyl::Word a(n), b(n);
      for (auto& v : a) v = static_cast<std::uint32_t>(rng() % q);
      for (auto& v : b) v = static_cast<std::uint32_t>(rng() % q);
      auto g = group.make(static_cast<std::int64_t>(rng() % (2 * q)), a, b);
      auto m = oracles::dense({q, g.phase, g.a, g.b});
      for (std::size_t col = 0; col < words.size(); ++col) {
        auto out = oracle::apply(group, g, SparseState::basis(q, words[col]));
        ASSERT_EQ(out.support_size(), 1u);
        for (std::size_t row = 0; row < words.size(); ++row) {
          EXPECT_LT(std::abs(out.amplitude(row) - m[row][col]), 1e-12);
        }
      }
    }
  }
}

TEST(Apply, BinaryFastPathMatchesGeneralPath) {
  // q = 2 uses bit masks; compare against the dense definition on 6 qubits
  std::mt19937_64 rng(5);
  weyl::ErrorGroup group(weyl::AlphabetGroup::prime_field(2), 6);
  for (int trial = 0; trial < 20; ++trial) {
    weyl::Word a(6), b(6), x(6);
    for (auto& v : a) v = rng() & 1;
    for (auto& v : b) v = rng() & 1;
    for (auto& v : x) v = rng() & 1;
    auto g = group.make(static_cast<std::int64_t>(rng() % 4), a, b);
    auto [e, y] = oracles::act({2, g.phase, g.a, g.b}, x);
    auto out = oracle::apply(group, g, SparseState::basis(2, x));
    EXPECT_LT(std::abs(out.amplitude(y) - oracles::root(e, 4)), 1e-12);
  }
}

TEST(Codeword, JointEigenvectorWithCharacterEigenvalues) {
  for (auto [n, q] : std::vector<std::pair<std::size_t, std::uint32_t>>{{5, 2}, {5, 3}, {7, 2}}) {
    auto code = families::distance2_family(n, q);
    const auto& spec = code.spec();
    for (const auto& u : code.members()) {
      auto phi = oracle::codeword(code, u);
      EXPECT_NEAR(phi.norm_squared(), 1.0, 1e-12);
      for (std::size_t i = 0; i < spec.r(); ++i) {
        auto a = FieldVector::unit(spec.r(), i, q);
        EXPECT_LT(oracle::eigen_residual(spec.group(), spec.element(a), spec.character(u, a), phi), 1e-9);
      }
    }
  }
}

TEST(Codeword, BasisIsOrthonormalWithSizeK) {
  for (auto [n, q] : std::vector<std::pair<std::size_t, std::uint32_t>>{{5, 2}, {5, 3}}) {
    auto code = families::distance2_family(n, q);
    auto basis = oracle::code_basis(code);
    EXPECT_EQ(basis.size(), 1 + n * (q - 1));
    EXPECT_TRUE(oracle::orthonormality_check(basis).pass);
  }
}

TEST(Codeword, NonMaximalSpecUsesProjectionColumns) {
  fourier::FourierDescription code(single_z(3), {FieldVector({0}, 2), FieldVector({1}, 2)});
  auto basis = oracle::code_basis(code);
  EXPECT_EQ(basis.size(), 8u);
  EXPECT_TRUE(oracle::orthonormality_check(basis).pass);
  fourier::FourierDescription half(single_z(3), {FieldVector({1}, 2)});
  EXPECT_EQ(oracle::code_basis(half).size(), 4u);
}

TEST(Codeword, ClosedFormAgreesAfterRelabel) {
  for (auto [n, q] : std::vector<std::pair<std::size_t, std::uint32_t>>{{5, 2}, {3, 3}, {5, 3}}) {
    auto form = families::cyclic_sum_zero_form(n, q);
    auto code = families::relabel(families::distance2_family(n, q), families::sum_zero_spec(form));
    for (const auto& u : code.members()) {
      auto expected = oracle::codeword(code, u);
      auto closed = oracle::closed_form_codeword(form, families::index_to_message(form, u));
      EXPECT_NEAR(closed.norm_squared(), 1.0, 1e-12);
      EXPECT_GT(oracle::fidelity(closed, expected), 1 - 1e-10) << n << "," << q << " " << u.to_string();
    }
  }
}

TEST(KnillLaflamme, FiveQubitDistanceTwoPasses) {
  auto report = oracle::kl_check(families::distance2_family(5, 2), 2);
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(report.errors_checked, 15u);
}

TEST(KnillLaflamme, ThreeQubitInstanceFails) {
  auto report = oracle::kl_check(families::distance2_family(3, 2), 2);
  ASSERT_FALSE(report.pass);
  ASSERT_TRUE(report.error.has_value());
  EXPECT_EQ(weyl::ErrorGroup(weyl::AlphabetGroup::prime_field(2), 3).weight(*report.error), 1u);
}

TEST(KnillLaflamme, AgreesWithAlgebraOnDistanceTwoFamilies) {
  for (auto [n, q] : std::vector<std::pair<std::size_t, std::uint32_t>>{{5, 3}, {7, 2}}) {
    auto code = families::distance2_family(n, q);
    EXPECT_TRUE(oracle::kl_check(code, 2).pass);
    EXPECT_FALSE(oracle::kl_check(code, 3).pass);
    EXPECT_FALSE(fourier::verify_distance(code, 3).pass);
  }
}

TEST(KnillLaflamme, CapEnforced) {
  Limits tight;
  tight.max_errors = 10;
  EXPECT_THROW(oracle::kl_check(families::distance2_family(5, 2), 2, tight), CapExceeded);
}

TEST(Orthonormality, DetectsOverlap) {
  auto a = SparseState::basis(2, {0, 0});
  auto b = SparseState::from_entries(2, 2, {{0, {std::sqrt(0.5), 0}}, {1, {std::sqrt(0.5), 0}}});
  auto report = oracle::orthonormality_check({a, b});
  EXPECT_FALSE(report.pass);
  EXPECT_EQ(report.first, 0u);
  EXPECT_EQ(report.second, 1u);
}
