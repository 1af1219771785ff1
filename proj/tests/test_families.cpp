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

#include <set>

#include "nonstab/families.hpp"
#include "nonstab/fourier_code.hpp"
#include "oracles.hpp"

using namespace nonstab;
using families::SetFamily;
using galois::FieldMatrix;
using galois::FieldVector;

namespace {

// Coordinates 1..n-1 are e_1..e_{n-1}; e_0 is coordinate n.
FieldVector e(std::size_t n, std::uint32_t q, std::size_t j) { return FieldVector::unit(n, j % n == 0 ? n - 1 : j % n - 1, q); }

FieldVector all_ones(std::size_t n, std::uint32_t q) {
  FieldVector v(n, q);
  for (std::size_t i = 0; i < n; ++i) v.set(i, 1);
  return v;
}

// The four closed-form pieces of F_2 for the cyclic spec.
std::set<FieldVector> closed_form_forbidden(std::size_t n, std::uint32_t q) {
  const std::size_t m = (n - 1) / 2;
  const auto one = all_ones(n, q);
  std::set<FieldVector> out;
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) {
      if (a == 0 && b == 0) continue;
      const std::uint32_t amb = (a + q - b) % q;
      out.insert((e(n, q, m) + e(n, q, m + 1)).scaled(a) + e(n, q, 0).scaled(b) + one.scaled(amb));
      out.insert((e(n, q, 0) + e(n, q, 1)).scaled(a) + e(n, q, m + 1).scaled(b));
      out.insert((e(n, q, 0) + e(n, q, n - 1)).scaled(a) + e(n, q, m).scaled(b));
      for (std::size_t j = 1; j < n; ++j) {
        if (j == m || j == m + 1) continue;
        out.insert((e(n, q, j + m) + e(n, q, j + m + 1)).scaled(a) + e(n, q, j).scaled(b) + one.scaled(a));
      }
    }
  return out;
}

std::set<FieldVector> library_forbidden(const gottesman::GottesmanSpec& spec, std::size_t d) {
  auto f = gottesman::forbidden_set(spec, d);
  return {f.members().begin(), f.members().end()};
}

}  // namespace

TEST(CyclicSpec, ShiftMatrixRows) {
  auto S = families::cyclic_shift_matrix(5, 2);
  // row 0 has ones at offsets m and m + 1
  EXPECT_EQ(S.row(0), FieldVector({0, 0, 1, 1, 0}, 2));
  EXPECT_TRUE(S.is_symmetric());
  EXPECT_THROW(families::cyclic_shift_matrix(4, 2), std::invalid_argument);
}

TEST(CyclicSpec, TransposeActionOnBasis) {
  const std::size_t n = 7, m = 3;
  const std::uint32_t q = 3;
  auto spec = families::cyclic_spec(n, q);
  auto Lt = spec.L().transpose(), Mt = spec.M().transpose();
  EXPECT_EQ(Lt * e(n, q, 0), e(n, q, 0) - all_ones(n, q));
  for (std::size_t j = 1; j < n; ++j) EXPECT_EQ(Lt * e(n, q, j), e(n, q, j));
  for (std::size_t j = 0; j < n; ++j) {
    FieldVector expected = e(n, q, j + m) + e(n, q, j + m + 1) + all_ones(n, q);
    if ((j + m) % n == 0) expected = e(n, q, 0) + e(n, q, 1);
    if ((j + m + 1) % n == 0) expected = e(n, q, 0) + e(n, q, n - 1);
    EXPECT_EQ(Mt * e(n, q, j), expected) << j;
  }
}

TEST(DistanceTwo, ForbiddenSetIsUnionOfClosedFormPieces) {
  for (auto [n, q] : std::vector<std::pair<std::size_t, std::uint32_t>>{{5, 2}, {7, 2}, {5, 3}, {7, 3}, {9, 5}}) {
    EXPECT_EQ(library_forbidden(families::cyclic_spec(n, q), 2), closed_form_forbidden(n, q)) << n << "," << q;
  }
}

TEST(DistanceTwo, DifferenceSetAvoidsForbiddenPieces) {
  for (auto [n, q] : std::vector<std::pair<std::size_t, std::uint32_t>>{{5, 2}, {7, 2}, {5, 3}, {7, 3}, {5, 5}}) {
    const auto forbidden = closed_form_forbidden(n, q);
    // u_i = sum_{j >= 1} e_j - e_i
    std::vector<FieldVector> u;
    FieldVector s(n, q);
    for (std::size_t j = 1; j < n; ++j) s += e(n, q, j);
    for (std::size_t i = 1; i < n; ++i) u.push_back(s - e(n, q, i));
    std::set<FieldVector> pieces;
    for (std::uint32_t a = 1; a < q; ++a) {
      pieces.insert(e(n, q, 0).scaled(a));
      for (const auto& ui : u) pieces.insert(e(n, q, 0) + ui.scaled(a));
    }
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 1; b < q; ++b) {
        if (a == q - 1) continue;
        for (const auto& ui : u) pieces.insert(e(n, q, 0).scaled(a) + ui.scaled(b));
      }
    for (std::uint32_t a = 1; a < q; ++a)
      for (std::uint32_t b = 1; b < q; ++b)
        for (std::size_t i = 0; i < u.size(); ++i)
          for (std::size_t j = 0; j < u.size(); ++j) {
            if (a == b && i == j) continue;
            pieces.insert(u[i].scaled(a) + u[j].scaled(b));
          }
    auto code = families::distance2_family(n, q);
    for (const auto& x : code.members())
      for (const auto& y : code.members()) {
        if (x == y) continue;
        auto diff = x - y;
        // the pieces list one sign of each difference; F_2 is closed under negation
        EXPECT_TRUE(pieces.contains(diff) || pieces.contains(-diff)) << diff.to_string();
        EXPECT_FALSE(forbidden.contains(diff)) << diff.to_string();
      }
  }
}

TEST(DistanceTwo, MembersAndSize) {
  auto code = families::distance2_family(5, 3);
  EXPECT_EQ(code.size(), 11u);
  EXPECT_TRUE(code.contains(FieldVector({0, 0, 0, 0, 2}, 3)));
  EXPECT_TRUE(code.contains(FieldVector({2, 0, 2, 2, 1}, 3)));
}

TEST(SetFamily, NormalizesAndRejectsMalformed) {
  SetFamily f(5, {{3, 1}, {2}});
  EXPECT_EQ(f.members()[0], (std::vector<std::size_t>{1, 3}));
  EXPECT_THROW(SetFamily(5, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(SetFamily(5, {{6}}), std::invalid_argument);
  EXPECT_THROW(SetFamily(5, {{0}}), std::invalid_argument);
  EXPECT_THROW(SetFamily(5, {{1, 2}, {2, 1}}), std::invalid_argument);
}

TEST(SetFamily, FifteenQubitSubsetsDifferBySevenOrEight) {
  auto f = families::fifteen_qubit_family();
  EXPECT_EQ(f.size(), 8u);
  EXPECT_EQ(f.symmetric_difference_sizes(), (std::set<std::size_t>{7, 8}));
  auto code = families::code_15_8_3();
  EXPECT_EQ(fourier::code_dimension(code), 8);
  EXPECT_TRUE(fourier::verify_distance(code, 3).pass);
}

TEST(SetFamily, SubspaceFamilyCountsAndClosure) {
  auto f = families::subspace_family(5, 3, 2);
  EXPECT_EQ(BigInt(f.size()), galois::gaussian_binomial(5, 2, 3));
  EXPECT_EQ(f.size(), 155u);
  EXPECT_EQ(f.universe(), 32u);
  for (const auto& s : f.members()) {
    ASSERT_EQ(s.size(), 8u);
    EXPECT_EQ(s.front(), 1u);
    std::set<std::size_t> points(s.begin(), s.end());
    for (auto x : s)
      for (auto y : s) EXPECT_TRUE(points.contains(1 + ((x - 1) ^ (y - 1))));
  }
  EXPECT_EQ(f.symmetric_difference_sizes(), (std::set<std::size_t>{8, 12}));
}

TEST(SetFamily, SubspaceFamilyOverGF3) {
  auto f = families::subspace_family(3, 1, 3);
  EXPECT_EQ(f.size(), 13u);
  EXPECT_EQ(f.universe(), 27u);
}

TEST(SetFamily, ThirtyThreeQubitCode) {
  auto code = families::family_to_B(families::subspace_family(5, 3, 2), 33);
  EXPECT_EQ(fourier::code_dimension(code), 155);
  EXPECT_TRUE(fourier::verify_distance(code, 3).pass);
}

TEST(SetFamily, PuncturedThirtyOneQubitCode) {
  auto punctured = families::puncture(families::subspace_family(5, 3, 2), 32);
  EXPECT_EQ(punctured.size(), 155u);
  EXPECT_EQ(punctured.universe(), 31u);
  for (auto s : punctured.symmetric_difference_sizes()) {
    EXPECT_GE(s, 7u);
    EXPECT_LE(s, 13u);
  }
  auto code = families::family_to_B(punctured, 31);
  EXPECT_EQ(fourier::code_dimension(code), 155);
  EXPECT_TRUE(fourier::verify_distance(code, 3).pass);
}

TEST(SetFamily, PunctureRenumbers) {
  auto p = families::puncture(SetFamily(5, {{1, 3, 5}, {2, 4}}), 3);
  EXPECT_EQ(p.members()[0], (std::vector<std::size_t>{1, 4}));
  EXPECT_EQ(p.members()[1], (std::vector<std::size_t>{2, 3}));
  EXPECT_THROW(families::puncture(p, 9), std::invalid_argument);
}

TEST(SetFamily, ForbiddenSymmetricDifferenceRejected) {
  try {
    (void)families::family_to_B(SetFamily(15, {{1, 2, 3, 4, 5, 6, 7}, {1, 2, 3, 4}}), 15);
    FAIL() << "expected FamilyRejected";
  } catch (const families::FamilyRejected& e) {
    EXPECT_EQ(e.first(), 0u);
    EXPECT_EQ(e.second(), 1u);
    EXPECT_EQ(e.size(), 3u);
  }
  EXPECT_THROW(families::family_to_B(SetFamily(20, {{1}}), 15), std::invalid_argument);
}

TEST(SumZeroForm, MessageIndexRoundTrip) {
  auto form = families::cyclic_sum_zero_form(5, 3);
  for (std::uint64_t i = 0; i < 243; ++i) {
    auto u = galois::from_index(i, 5, 3);
    EXPECT_EQ(families::message_to_index(form, families::index_to_message(form, u)), u);
  }
}

TEST(SumZeroForm, SpecValidatesAndIsMaximal) {
  for (auto [n, q] : std::vector<std::pair<std::size_t, std::uint32_t>>{{3, 2}, {5, 2}, {5, 3}, {7, 5}}) {
    auto spec = families::sum_zero_spec(families::cyclic_sum_zero_form(n, q));
    EXPECT_TRUE(gottesman::validate(spec).ok);
    EXPECT_TRUE(spec.is_maximal());
  }
  FieldMatrix lower(3, 3, 2);
  lower.set(2, 0, 1);
  EXPECT_THROW(families::sum_zero_spec({2, lower}), std::invalid_argument);
}

TEST(SumZeroForm, CharacterMatchesMessagePairing) {
  auto form = families::cyclic_sum_zero_form(5, 3);
  auto spec = families::sum_zero_spec(form);
  const std::uint32_t step = spec.phase_denominator() / 3;
  families::Message msg{FieldVector({1, 2, 0, 1, 1}, 3), FieldVector({2, 0, 1, 0, 0}, 3)};
  auto u = families::message_to_index(form, msg);
  for (std::uint64_t i = 0; i < 243; ++i) {
    auto a = galois::from_index(i, 5, 3);
    auto s = spec.element(a);
    FieldVector x(s.a, 3);
    // b = (D + D^T) x + beta 1, so beta is recovered from the last coordinate
    FieldVector sym = (form.D + form.D.transpose()) * x;
    FieldVector b(s.b, 3);
    std::uint32_t beta = (b[4] + 3 - sym[4]) % 3;
    std::uint32_t expected = (x.dot(msg.c) + beta * (msg.d[0] + msg.d[1] + msg.d[2] + msg.d[3] + msg.d[4])) % 3;
    EXPECT_EQ(spec.character(u, a), step * expected % spec.phase_denominator());
  }
}

TEST(Relabel, CyclicSpecAndSumZeroFormDescribeOneSubgroup) {
  for (auto [n, q] : std::vector<std::pair<std::size_t, std::uint32_t>>{{5, 2}, {7, 2}, {5, 3}}) {
    auto code = families::distance2_family(n, q);
    auto target = families::sum_zero_spec(families::cyclic_sum_zero_form(n, q));
    auto moved = families::relabel(code, target);
    EXPECT_EQ(moved.size(), code.size());
    EXPECT_TRUE(fourier::verify_distance(moved, 2).pass);
    auto P1 = fourier::dense_projection(code), P2 = fourier::dense_projection(moved);
    double worst = 0;
    for (std::size_t i = 0; i < P1.data.size(); ++i) worst = std::max(worst, std::abs(P1.data[i] - P2.data[i]));
    EXPECT_LT(worst, 1e-12) << n << "," << q;
  }
}

TEST(Relabel, DifferentSubgroupsRejected) {
  auto code = families::distance2_family(5, 2);
  FieldMatrix D(5, 5, 2);
  EXPECT_THROW(families::relabel(code, families::sum_zero_spec({2, D})), std::invalid_argument);
}

TEST(AlphaGood, IdentityFixture) {
  auto I = FieldMatrix::identity(10, 2);
  EXPECT_TRUE(families::alpha_good(I, Rational(1, 5)).pass);
  auto report = families::alpha_good(I, Rational(1, 4));
  EXPECT_FALSE(report.pass);
  EXPECT_EQ(report.failed_condition, 1);
  EXPECT_EQ(report.weight, 2u);
  EXPECT_EQ(report.witness.size(), 2u);
}

TEST(AlphaGood, AllOnesFixture) {
  FieldMatrix J(10, 10, 2);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) J.set(i, j, 1);
  auto even = families::alpha_good(J, Rational(1, 5));
  EXPECT_FALSE(even.pass);
  EXPECT_EQ(even.failed_condition, 1);
  EXPECT_EQ(even.weight, 0u);
  FieldMatrix J9(9, 9, 2);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) J9.set(i, j, 1);
  auto odd = families::alpha_good(J9, Rational(1, 3));
  EXPECT_FALSE(odd.pass);
  EXPECT_EQ(odd.failed_condition, 3);
  EXPECT_EQ(odd.weight, 9u);
}

TEST(AlphaGood, RowConditionsSeparateFromColumns) {
  // one full row: columns are fine for k = 1, rows are not
  FieldMatrix R = FieldMatrix::identity(6, 2);
  for (std::size_t j = 0; j < 6; ++j) R.set(0, j, 1);
  auto report = families::alpha_good(R, Rational(1, 6));
  EXPECT_FALSE(report.pass);
  EXPECT_EQ(report.failed_condition, 4);
  EXPECT_EQ(report.witness, (std::vector<std::size_t>{0}));
}

TEST(AlphaGood, IdentitySpecIsPure) {
  auto I = FieldMatrix::identity(10, 2);
  auto spec = families::alpha_good_spec(I);
  EXPECT_EQ(spec.n(), 20u);
  EXPECT_TRUE(gottesman::validate(spec).ok);
  EXPECT_FALSE(gottesman::purity_radius(spec, 2).has_value());
}

TEST(AlphaGood, SearchIsDeterministicAndFindsPureSpecs) {
  for (std::size_t n : {6u, 9u, 12u}) {
    auto a = families::search_alpha_good(n, Rational(1, 6), 42, 200);
    auto b = families::search_alpha_good(n, Rational(1, 6), 42, 200);
    ASSERT_TRUE(a.has_value()) << n;
    EXPECT_EQ(*a, *b);
    const std::size_t k = n / 6;
    EXPECT_TRUE(families::alpha_good(*a, Rational(1, 6)).pass);
    auto spec = families::alpha_good_spec(*a);
    EXPECT_TRUE(gottesman::validate(spec).ok);
    EXPECT_FALSE(gottesman::purity_radius(spec, k).has_value());
  }
}

TEST(AlphaGood, SubsetEnumerationCapped) {
  Limits tight;
  tight.max_errors = 10;
  EXPECT_THROW(families::alpha_good(FieldMatrix::identity(12, 2), Rational(1, 3), tight), CapExceeded);
}
